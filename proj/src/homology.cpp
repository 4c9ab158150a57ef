#include "orbicheck/homology.hpp"

#include <deque>
#include <sstream>

namespace orbicheck {

IntegerMatrix boundary_matrix(const QuotientComplex& qc, int dim) {
  if (dim < 1 || dim > qc.dimension()) throw std::out_of_range("no boundary map out of dimension " + std::to_string(dim));
  IntegerMatrix m(qc.count(dim - 1), qc.count(dim));
  for (int c = 0; c < qc.count(dim); ++c)
    for (const auto& t : qc.boundary(dim, c)) m(t.face, c) = checked_add(m(t.face, c), t.sign);
  return m;
}

std::vector<IntegerMatrix> boundary_matrices(const QuotientComplex& qc) {
  std::vector<IntegerMatrix> out;
  for (int d = 1; d <= qc.dimension(); ++d) out.push_back(boundary_matrix(qc, d));
  return out;
}

std::string format_group(const HomologyGroup& g) {
  if (g.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (g.free_rank > 0) {
    os << 'Z';
    if (g.free_rank > 1) os << '^' << g.free_rank;
    first = false;
  }
  for (Integer t : g.torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

std::vector<HomologyGroup> homology(const QuotientComplex& qc) {
  const int top = qc.dimension();
  // ranks[d] = rank of the boundary map out of dimension d; factors likewise.
  std::vector<int> ranks(static_cast<std::size_t>(top + 2), 0);
  std::vector<std::vector<Integer>> factors(static_cast<std::size_t>(top + 2));
  for (int d = 1; d <= top; ++d) {
    auto snf = smith_normal_form(boundary_matrix(qc, d), false);
    ranks[d] = snf.rank;
    factors[d] = std::move(snf.factors);
  }
  std::vector<HomologyGroup> out;
  for (int d = 0; d <= top; ++d) {
    HomologyGroup g;
    g.degree = d;
    g.free_rank = qc.count(d) - ranks[d] - ranks[d + 1];
    for (Integer f : factors[d + 1])
      if (f > 1) g.torsion.push_back(f);
    out.push_back(std::move(g));
  }
  return out;
}

bool HomologyCoordinates::is_zero() const {
  for (Integer x : free)
    if (x != 0) return false;
  for (const auto& [r, order] : torsion)
    if (r != 0) return false;
  return true;
}

NotACycle::NotACycle(std::vector<Integer> boundary)
    : std::runtime_error("chain is not a cycle"), boundary_(std::move(boundary)) {}

HomologyBasis::HomologyBasis(const QuotientComplex& qc, int degree)
    : degree_(degree), chain_count_(qc.count(degree)) {
  if (degree < 0 || degree > qc.dimension()) throw std::out_of_range("degree out of range");
  const int n = chain_count_;
  outgoing_ = degree >= 1 ? boundary_matrix(qc, degree) : IntegerMatrix(0, n);
  auto out_snf = smith_normal_form(outgoing_, true);
  outgoing_rank_ = out_snf.rank;
  to_kernel_ = std::move(out_snf.col_transform_inverse);

  IntegerMatrix incoming = degree < qc.dimension() ? boundary_matrix(qc, degree + 1) : IntegerMatrix(n, 0);
  IntegerMatrix in_kernel = (to_kernel_ * incoming).row_block(outgoing_rank_, n);
  auto in_snf = smith_normal_form(in_kernel, true);
  quotient_rows_ = std::move(in_snf.row_transform);
  quotient_factors_ = std::move(in_snf.factors);
}

HomologyGroup HomologyBasis::group() const {
  HomologyGroup g;
  g.degree = degree_;
  g.free_rank = chain_count_ - outgoing_rank_ - static_cast<int>(quotient_factors_.size());
  for (Integer f : quotient_factors_)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

HomologyCoordinates HomologyBasis::coordinates(std::span<const Integer> chain) const {
  if (static_cast<int>(chain.size()) != chain_count_) throw std::invalid_argument("chain length mismatch");
  auto bd = outgoing_ * chain;
  for (Integer x : bd)
    if (x != 0) throw NotACycle(std::move(bd));

  auto full = to_kernel_ * chain;
  std::vector<Integer> kernel_coords(full.begin() + outgoing_rank_, full.end());
  auto y = quotient_rows_ * std::span<const Integer>(kernel_coords);

  HomologyCoordinates out;
  const int r = static_cast<int>(quotient_factors_.size());
  for (int i = 0; i < r; ++i) {
    Integer f = quotient_factors_[i];
    if (f > 1) out.torsion.push_back({((y[i] % f) + f) % f, f});
  }
  for (std::size_t i = static_cast<std::size_t>(r); i < y.size(); ++i) out.free.push_back(y[i]);
  return out;
}

HomologyCoordinates homology_coordinates(const QuotientComplex& qc, std::span<const Integer> cycle,
                                         int degree) {
  return HomologyBasis(qc, degree).coordinates(cycle);
}

std::optional<std::vector<Integer>> fundamental_cycle(const QuotientComplex& qc) {
  const auto& table = qc.table();
  if (!table || qc.has_boundary()) return std::nullopt;
  const int n = table->size();
  std::vector<Integer> sign(static_cast<std::size_t>(n), 0);
  sign[0] = 1;
  std::deque<int> queue{0};
  const auto labels = label_list(table->labels());
  while (!queue.empty()) {
    int j = queue.front();
    queue.pop_front();
    for (int l : labels) {
      int k = *table->partner(j, l);
      // Both sides see the shared facet with the same sign, so they must differ.
      if (sign[k] == 0) {
        sign[k] = -sign[j];
        queue.push_back(k);
      } else if (sign[k] == sign[j]) {
        return std::nullopt;
      }
    }
  }
  return sign;
}

}  // namespace orbicheck
