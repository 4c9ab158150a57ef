#include "orbicheck/labels.hpp"

#include <algorithm>
#include <sstream>

namespace orbicheck {

std::vector<int> label_list(LabelSet set) {
  std::vector<int> out;
  for (int i = 0; i < kMaxLabels; ++i)
    if (contains(set, i)) out.push_back(i);
  return out;
}

LabelSet make_label_set(const std::vector<int>& labels) {
  LabelSet s = 0;
  for (int l : labels) s |= label_bit(l);
  return s;
}

bool label_less(LabelSet a, LabelSet b) {
  auto la = label_list(a);
  auto lb = label_list(b);
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

std::string format_labels(LabelSet set) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (int l : label_list(set)) {
    if (!first) os << ' ';
    os << l;
    first = false;
  }
  os << ')';
  return os.str();
}

std::vector<LabelSet> subsets_of_size(LabelSet universe, int size) {
  std::vector<LabelSet> out;
  for (unsigned s = 1; s <= kAllLabels; ++s) {
    auto set = static_cast<LabelSet>(s);
    if (is_subset(set, universe) && label_count(set) == size) out.push_back(set);
  }
  std::sort(out.begin(), out.end(), label_less);
  return out;
}

}  // namespace orbicheck
