#pragma once

#include <string>
#include <vector>

#include "orbicheck/presentation.hpp"
#include "orbicheck/quotient.hpp"

namespace orbicheck {

/// Link of a face class. Each member (j, S) contributes the face of simplex j
/// on the complementary labels; two of these are glued whenever the parent
/// facet gluing between their simplices fixes S.
struct LinkComplex {
  int face_dimension = 0;
  int face = 0;
  LabelSet face_labels = 0;
  QuotientComplex complex;
  std::vector<int> parent_simplex;  ///< link simplex index -> parent simplex index
};

/// Requires a table-built complex and face_dimension <= dimension - 2.
LinkComplex link_complex(const QuotientComplex& qc, int face_dimension, int face);

enum class SphereStatus {
  certified,
  sphere_homology_pi1_inconclusive,
  failed,
};

const char* to_string(SphereStatus s);

struct SphereCheck {
  SphereStatus status = SphereStatus::failed;
  std::string reason;
};

/// Recursive PL-sphere test for link complexes of dimension 1..3:
///   1: closed and connected (a single circle);
///   2: closed, connected, vertex links are circles, chi = 2;
///   3: closed, connected, edge links are circles, vertex links pass the
///      2-dimensional test, homology (Z,0,0,Z) and trivial simplified pi_1.
SphereCheck check_sphere(const QuotientComplex& complex, int pass_budget = kDefaultPassBudget);

bool is_connected(const QuotientComplex& qc);

struct FaceCheck {
  int dimension = 0;
  int face = 0;
  SphereStatus status = SphereStatus::failed;
  std::string reason;
};

struct ManifoldReport {
  std::vector<int> checked;  ///< faces checked per dimension 0..2
  std::vector<FaceCheck> failures;

  bool passed() const { return failures.empty(); }
};

/// Checks every triangle, edge and vertex link of a closed 4-complex. Throws
/// std::invalid_argument when the complex has unglued facets.
ManifoldReport verify_closed_pl_manifold(const QuotientComplex& qc, int pass_budget = kDefaultPassBudget);

}  // namespace orbicheck
