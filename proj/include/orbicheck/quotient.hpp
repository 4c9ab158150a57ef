#pragma once

#include <array>
#include <optional>
#include <vector>

#include "orbicheck/gluing.hpp"

namespace orbicheck {

/// One face of the quotient: every constituent face identified with it.
/// Gluings preserve labels, so all members share `labels` and are determined
/// by their simplex index alone.
struct FaceClass {
  int dimension = 0;
  LabelSet labels = 0;
  std::vector<int> members;  ///< simplex indices, ascending

  int degree() const { return static_cast<int>(members.size()); }
  FaceRef representative() const { return {members.empty() ? -1 : members.front(), labels}; }
};

struct BoundaryTerm {
  int face = 0;  ///< class id one dimension down
  int sign = 1;
  friend bool operator==(const BoundaryTerm&, const BoundaryTerm&) = default;
};

/// The cell complex obtained by identifying faces of a GluingTable.
///
/// Classes are numbered per dimension in canonical-representative order
/// (least simplex index, then label_less). The boundary of a class is read off
/// its representative with signs (-1)^i over the ascending label order.
class QuotientComplex {
 public:
  using CellBoundaries = std::vector<std::vector<BoundaryTerm>>;

  /// Builds an abstract complex directly from cell boundaries, e.g. for
  /// fixtures that no label-preserving gluing produces. cells[d][c] is the
  /// boundary of cell c of dimension d (cells[0] entries must be empty).
  static QuotientComplex from_cells(std::vector<CellBoundaries> cells);

  int dimension() const { return static_cast<int>(classes_.size()) - 1; }
  int count(int dim) const;
  std::vector<int> f_vector() const;

  const std::vector<FaceClass>& classes(int dim) const { return classes_.at(dim); }
  const FaceClass& face(int dim, int id) const;
  const std::vector<BoundaryTerm>& boundary(int dim, int id) const;

  bool has_boundary() const { return has_boundary_; }

  /// Source table; absent for complexes built with from_cells.
  const std::optional<GluingTable>& table() const { return table_; }

  /// Class id containing a given constituent face.
  int class_of(const FaceRef& ref) const;

  /// Vertex class ids of a cell, following boundaries down to dimension 0.
  std::vector<int> vertices_of(int dim, int id) const;

  friend QuotientComplex build_quotient(const GluingTable& table);

 private:
  QuotientComplex() = default;

  std::vector<std::vector<FaceClass>> classes_;
  std::vector<CellBoundaries> boundaries_;
  // index_[labels][simplex] -> class id (only for table-built complexes)
  std::array<std::vector<int>, kAllLabels + 1> index_{};
  bool has_boundary_ = false;
  std::optional<GluingTable> table_;
};

/// Identifies faces: (j,S) ~ (k,S) whenever S lies in a glued facet of j with
/// partner k. Requires validate(table) to be empty.
QuotientComplex build_quotient(const GluingTable& table);

int euler_characteristic(const QuotientComplex& qc);

/// Member count of a class; throws std::out_of_range for an unknown id.
int face_degree(const QuotientComplex& qc, int dim, int id);

}  // namespace orbicheck
