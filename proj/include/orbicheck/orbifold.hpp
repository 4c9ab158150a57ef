#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbicheck/coxeter.hpp"
#include "orbicheck/homology.hpp"
#include "orbicheck/quotient.hpp"

namespace orbicheck {

/// Raised when the complex fails an orbifold condition; `problems` lists
/// every offending face.
class OrbifoldError : public std::runtime_error {
 public:
  explicit OrbifoldError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

struct TriangleRecord {
  int triangle = 0;
  LabelSet labels = 0;
  int m = 2;           ///< theta = pi / m
  double theta = 0.0;
  int full_count = 4;  ///< 2m simplices fill a full turn
  int degree = 0;
  int weight = 0;      ///< full_count / degree

  bool singular() const { return weight > 1; }
};

/// One record per triangle class. Throws OrbifoldError when some degree does
/// not divide 2m.
std::vector<TriangleRecord> triangle_report(const QuotientComplex& qc, const CoxeterMatrix& cox);

/// Right-angled triangle classes whose degree is not 4. Throws OrbifoldError
/// when such a degree is anything but 2.
std::vector<int> pi_over_2_exceptions(const QuotientComplex& qc, const CoxeterMatrix& cox);

struct LocusComponent {
  std::string name;
  std::vector<int> triangles;
  std::vector<int> weights;  ///< per triangle
  std::vector<int> edges;
  std::vector<int> interior_edges;  ///< met by at least two triangle sides
  std::vector<int> mirror_edges;    ///< met by one triangle side
  std::vector<int> vertices;
  int euler_characteristic = 0;
  std::optional<std::vector<int>> cycle_signs;  ///< least +-1 signs with zero boundary
  bool mod2_cycle = false;

  /// Common weight of the triangles, 0 when they differ.
  int weight() const;
};

/// Two components meeting in vertices or edges.
struct LocusJunction {
  int first = 0;
  int second = 0;
  std::vector<int> shared_vertices;
  std::vector<int> shared_edges;
};

struct LocusDecomposition {
  std::vector<LocusComponent> components;
  std::vector<LocusJunction> junctions;

  const LocusComponent& component(const std::string& name) const;
};

/// Faces, Euler characteristic and cycle data of an arbitrary set of triangle
/// classes. Weights are left empty.
LocusComponent make_component(const QuotientComplex& qc, std::vector<int> triangles);

/// Components of the singular triangles. Two singular triangles are adjacent
/// when they share an edge class and have the same angle and weight. Components
/// are sorted by (size, least triangle) and named A4, A2, B, C when they match
/// the 4-triangle weight-4, 4-triangle weight-2, 2-triangle and 10-triangle
/// signatures uniquely; other components are named X0, X1, ...
LocusDecomposition locus_components(const QuotientComplex& qc, const CoxeterMatrix& cox);

struct VertexRecord {
  int vertex = 0;
  int label = 0;
  int degree = 0;
  std::string diagram;  ///< type of the diagram with node `label` removed
  long long group_order = 0;
  long long local_order = 0;  ///< group_order / degree
  bool integral = false;
};

/// Throws OrbifoldError when some |W| / d is not an integer.
std::vector<VertexRecord> vertex_report(const QuotientComplex& qc, const CoxeterMatrix& cox);

struct EdgeFlatness {
  int edge = 0;
  int first = 0;   ///< triangle developed from
  int second = 0;  ///< triangle found opposite
  double angle = 0.0;
  double residual = 0.0;  ///< |angle - pi|
  bool flat = false;
};

struct FlatnessReport {
  std::vector<EdgeFlatness> edges;
  double max_residual = 0.0;

  bool passed() const;
};

/// Develops the star of each interior edge into hyperbolic space by reflecting
/// the realized simplex in the facets around it, then measures the angle
/// between the component triangles that meet there. Flat iff the angle is pi.
FlatnessReport flatness_check(const QuotientComplex& qc, const SimplexRealization& realization,
                              const LocusComponent& component, double tol = 1e-6);

struct ChainTerm {
  const LocusComponent* component = nullptr;
  int coefficient = 1;
};

struct ChainClass {
  std::string name;
  std::vector<int> triangles;
  std::vector<int> signs;  ///< per triangle, after applying term coefficients
  Integer multiple = 0;    ///< |k| with [chain] = k [generator]
};

/// Searches +-1 signs on the triangles of the terms (lexicographically least,
/// + before -) for a cycle and measures its class against the generator of
/// H_2 = Z. nullopt when no signs give a cycle.
std::optional<ChainClass> evaluate_chain(const HomologyBasis& basis, const QuotientComplex& qc, std::string name,
                                         const std::vector<ChainTerm>& terms);

/// The chains B, A4+A2, A4+C and -A4+C. Throws OrbifoldError when a named
/// component is missing or a chain admits no cycle.
std::vector<ChainClass> locus_classes(const QuotientComplex& qc, const LocusDecomposition& locus);

}  // namespace orbicheck
