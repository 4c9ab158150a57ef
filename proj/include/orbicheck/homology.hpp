#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbicheck/matrix.hpp"
#include "orbicheck/quotient.hpp"
#include "orbicheck/smith.hpp"

namespace orbicheck {

/// Boundary maps of the cellular chain complex. Element d-1 is the map from
/// d-chains to (d-1)-chains: rows are (d-1)-classes, columns d-classes.
std::vector<IntegerMatrix> boundary_matrices(const QuotientComplex& qc);

/// Boundary map out of dimension `dim` (dim >= 1).
IntegerMatrix boundary_matrix(const QuotientComplex& qc, int dim);

struct HomologyGroup {
  int degree = 0;
  int free_rank = 0;
  std::vector<Integer> torsion;  ///< factors > 1, divisibility order

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// "Z", "0", "Z^2 + Z/2", ...
std::string format_group(const HomologyGroup& g);

/// Integral homology in degrees 0..dimension.
std::vector<HomologyGroup> homology(const QuotientComplex& qc);

/// Class of a cycle in a chosen basis of H_d: free coordinates, plus residues
/// for each torsion summand.
struct HomologyCoordinates {
  std::vector<Integer> free;
  std::vector<std::pair<Integer, Integer>> torsion;  ///< (residue, order)

  bool is_zero() const;
};

class NotACycle : public std::runtime_error {
 public:
  explicit NotACycle(std::vector<Integer> boundary);
  const std::vector<Integer>& boundary() const { return boundary_; }

 private:
  std::vector<Integer> boundary_;
};

/// Precomputed basis of H_d for repeated coordinate queries.
///
/// With V^-1 from the Smith form of the outgoing boundary map, cycles are the
/// span of the last k columns of V. The incoming boundary map is rewritten in
/// those kernel coordinates and reduced again; its row transform gives the
/// coordinates of H_d = Z^k / image.
class HomologyBasis {
 public:
  HomologyBasis(const QuotientComplex& qc, int degree);

  int degree() const { return degree_; }
  HomologyGroup group() const;

  /// Throws NotACycle when the chain has nonzero boundary.
  HomologyCoordinates coordinates(std::span<const Integer> chain) const;

 private:
  int degree_;
  int chain_count_;
  IntegerMatrix outgoing_;        // boundary out of this degree (may be 0 rows)
  IntegerMatrix to_kernel_;       // V^-1 of the outgoing Smith form
  int outgoing_rank_ = 0;
  IntegerMatrix quotient_rows_;   // U of the incoming map in kernel coordinates
  std::vector<Integer> quotient_factors_;
};

HomologyCoordinates homology_coordinates(const QuotientComplex& qc, std::span<const Integer> cycle,
                                         int degree);

/// A +-1 top-dimensional cycle built by flipping signs across shared facets,
/// starting from +1 on simplex 0. nullopt when the complex is non-orientable,
/// has boundary, or was not built from a gluing table.
std::optional<std::vector<Integer>> fundamental_cycle(const QuotientComplex& qc);

}  // namespace orbicheck
