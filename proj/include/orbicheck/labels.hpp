#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace orbicheck {

/// Vertex labels of a 4-simplex are 0..4. A face is identified by the set of
/// labels it spans, stored as a bitmask.
using LabelSet = std::uint8_t;

inline constexpr int kMaxLabels = 5;
inline constexpr LabelSet kAllLabels = 0x1f;

constexpr LabelSet label_bit(int label) { return static_cast<LabelSet>(1u << label); }

constexpr bool contains(LabelSet set, int label) { return (set >> label) & 1u; }

constexpr bool is_subset(LabelSet sub, LabelSet set) { return (sub & set) == sub; }

constexpr int label_count(LabelSet set) { return std::popcount(static_cast<unsigned>(set)); }

/// Ascending list of labels in the set.
std::vector<int> label_list(LabelSet set);

/// Builds a set from a list; does not check for repeats.
LabelSet make_label_set(const std::vector<int>& labels);

/// Lexicographic order on ascending label lists, e.g. (0 1 2) < (0 1 3) < (0 2 3).
bool label_less(LabelSet a, LabelSet b);

/// "(0 1 2)" style rendering.
std::string format_labels(LabelSet set);

/// Every non-empty subset of `universe` with exactly `size` labels, in label_less order.
std::vector<LabelSet> subsets_of_size(LabelSet universe, int size);

}  // namespace orbicheck
