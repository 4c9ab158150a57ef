#include "orbicheck/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace orbicheck {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Keeps the smaller index as root so representatives are canonical.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

QuotientComplex build_quotient(const GluingTable& table) {
  if (!validate(table).empty())
    throw std::invalid_argument("gluing table fails validation; run validate() first");

  QuotientComplex qc;
  const int n = table.size();
  const int top = table.dimension();
  const auto table_labels = label_list(table.labels());
  qc.classes_.resize(static_cast<std::size_t>(top + 1));
  qc.boundaries_.resize(static_cast<std::size_t>(top + 1));

  for (int dim = 0; dim <= top; ++dim) {
    for (LabelSet s : subsets_of_size(table.labels(), dim + 1)) {
      DisjointSets sets(n);
      for (int j = 0; j < n; ++j)
        for (int omitted : table_labels) {
          if (contains(s, omitted)) continue;
          if (auto k = table.partner(j, omitted)) sets.unite(j, *k);
        }
      std::vector<std::vector<int>> groups(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) groups[sets.find(j)].push_back(j);
      for (auto& g : groups)
        if (!g.empty()) qc.classes_[dim].push_back({dim, s, std::move(g)});
    }
    auto& cls = qc.classes_[dim];
    std::sort(cls.begin(), cls.end(), [](const FaceClass& a, const FaceClass& b) {
      if (a.members.front() != b.members.front()) return a.members.front() < b.members.front();
      return label_less(a.labels, b.labels);
    });
    for (int id = 0; id < static_cast<int>(cls.size()); ++id) {
      auto& idx = qc.index_[cls[id].labels];
      if (idx.empty()) idx.assign(static_cast<std::size_t>(n), -1);
      for (int j : cls[id].members) idx[j] = id;
    }
  }

  for (int dim = 0; dim <= top; ++dim) {
    auto& bd = qc.boundaries_[dim];
    bd.resize(qc.classes_[dim].size());
    if (dim == 0) continue;
    for (std::size_t id = 0; id < bd.size(); ++id) {
      const auto& c = qc.classes_[dim][id];
      int sign = 1;
      for (int l : label_list(c.labels)) {
        FaceRef f{c.members.front(), static_cast<LabelSet>(c.labels & ~label_bit(l))};
        bd[id].push_back({qc.class_of(f), sign});
        sign = -sign;
      }
    }
  }
  qc.has_boundary_ = table.has_unglued_facet();
  qc.table_ = table;
  return qc;
}

QuotientComplex QuotientComplex::from_cells(std::vector<CellBoundaries> cells) {
  QuotientComplex qc;
  if (cells.empty()) throw std::invalid_argument("complex needs at least one dimension");
  qc.classes_.resize(cells.size());
  for (std::size_t d = 0; d < cells.size(); ++d) {
    for (std::size_t c = 0; c < cells[d].size(); ++c) {
      for (const auto& t : cells[d][c]) {
        if (d == 0) throw std::invalid_argument("vertices have no boundary");
        if (t.face < 0 || t.face >= static_cast<int>(cells[d - 1].size()))
          throw std::invalid_argument("boundary references unknown cell");
      }
      qc.classes_[d].push_back({static_cast<int>(d), 0, {}});
    }
  }
  qc.boundaries_ = std::move(cells);
  return qc;
}

int QuotientComplex::count(int dim) const {
  if (dim < 0 || dim > dimension()) return 0;
  return static_cast<int>(classes_[dim].size());
}

std::vector<int> QuotientComplex::f_vector() const {
  std::vector<int> f;
  for (int d = 0; d <= dimension(); ++d) f.push_back(count(d));
  return f;
}

const FaceClass& QuotientComplex::face(int dim, int id) const {
  if (dim < 0 || dim > dimension() || id < 0 || id >= count(dim))
    throw std::out_of_range("unknown face class " + std::to_string(dim) + ":" + std::to_string(id));
  return classes_[dim][id];
}

const std::vector<BoundaryTerm>& QuotientComplex::boundary(int dim, int id) const {
  face(dim, id);
  return boundaries_[dim][id];
}

int QuotientComplex::class_of(const FaceRef& ref) const {
  const auto& idx = index_.at(ref.labels);
  if (idx.empty() || ref.simplex < 0 || ref.simplex >= static_cast<int>(idx.size()))
    throw std::out_of_range("face " + format_labels(ref.labels) + " of simplex " +
                            std::to_string(ref.simplex) + " is not in this complex");
  return idx[ref.simplex];
}

std::vector<int> QuotientComplex::vertices_of(int dim, int id) const {
  std::set<int> current{id};
  for (int d = dim; d > 0; --d) {
    std::set<int> next;
    for (int c : current)
      for (const auto& t : boundary(d, c)) next.insert(t.face);
    current = std::move(next);
  }
  return {current.begin(), current.end()};
}

int euler_characteristic(const QuotientComplex& qc) {
  int chi = 0;
  for (int d = 0; d <= qc.dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * qc.count(d);
  return chi;
}

int face_degree(const QuotientComplex& qc, int dim, int id) { return qc.face(dim, id).degree(); }

}  // namespace orbicheck
