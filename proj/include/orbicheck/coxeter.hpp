#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "orbicheck/labels.hpp"

namespace orbicheck {

/// Numeric tolerance for realization and angle identities.
inline constexpr double kGeometryTolerance = 1e-9;

/// Symmetric Coxeter matrix: m(i,i) = 1, m(i,j) = m(j,i) >= 2. Node i is the
/// facet of the simplex opposite vertex label i.
class CoxeterMatrix {
 public:
  /// All off-diagonal entries 2 (pairwise orthogonal facets).
  explicit CoxeterMatrix(int rank);

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return m_[static_cast<std::size_t>(i * rank_ + j)]; }
  void set(int i, int j, int value);

 private:
  int rank_;
  std::vector<int> m_;
};

/// Reads the `rank n` / `m i j value` format; unlisted pairs are 2.
CoxeterMatrix parse_coxeter(std::string_view text);
CoxeterMatrix read_coxeter_file(const std::string& path);

/// G(i,j) = -cos(pi / m(i,j)).
Eigen::MatrixXd gram_matrix(const CoxeterMatrix& cox);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Eigenvalue sign counts; |lambda| < tol counts as zero. Throws
/// std::invalid_argument for a matrix that is not symmetric within tol.
Signature signature(const Eigen::MatrixXd& g, double tol = kGeometryTolerance);

struct LannerReport {
  bool compact_hyperbolic = false;
  double determinant = 0.0;
  std::vector<std::vector<int>> indefinite_subsets;  ///< proper principal minors that fail
};

/// True iff every proper principal submatrix of the Gram matrix is positive
/// definite and the determinant is negative.
LannerReport lanner_check(const CoxeterMatrix& cox, double tol = kGeometryTolerance);

/// Points of R^{n-1,1}; the last coordinate is the time direction, so
/// <x, y> = x_0 y_0 + ... + x_{n-2} y_{n-2} - x_{n-1} y_{n-1}.
double lorentz(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

struct SimplexRealization {
  std::vector<Eigen::VectorXd> normals;   ///< outward unit facet normals u_i
  std::vector<Eigen::VectorXd> vertices;  ///< v_i on the upper hyperboloid sheet
  double gram_residual = 0.0;             ///< max |<u_i,u_j> - G_ij|
};

/// Normals from an eigen-factorization of G; each vertex spans the null space
/// of the other normals. Throws std::runtime_error when the residual exceeds tol
/// or the Gram matrix has the wrong signature.
SimplexRealization realize_simplex(const CoxeterMatrix& cox, double tol = kGeometryTolerance);

/// pi / m over the label pair complementary to a 3-label set (rank 5 only).
double dihedral_angle(const CoxeterMatrix& cox, LabelSet triple);

struct FiniteCoxeterGroup {
  long long order = 0;
  std::string type;  ///< e.g. "B4", "A1xA3"
};

/// Order of the finite Coxeter group on a node subset, by classifying the
/// connected components of the induced diagram. Throws std::invalid_argument
/// when the induced Gram matrix is not positive definite.
FiniteCoxeterGroup finite_coxeter_group(const CoxeterMatrix& cox, const std::vector<int>& nodes);
long long finite_coxeter_order(const CoxeterMatrix& cox, const std::vector<int>& nodes);

/// Unit point on the geodesic from v_a to v_b at parameter t in [0, 1].
Eigen::VectorXd edge_point(const SimplexRealization& r, int a, int b, double t);

/// Angle at a point of the geodesic through `a_point`, `b_point` between the
/// half-planes spanned with `x1` and with `x2` (all timelike points).
double half_plane_angle(const Eigen::VectorXd& a_point, const Eigen::VectorXd& b_point,
                        const Eigen::VectorXd& x1, const Eigen::VectorXd& x2, double t = 0.5);

/// Angle along edge `edge` (two labels) between the triangles with labels t1
/// and t2 of the realized simplex, measured at parameter t on the edge.
double wedge_angle(const SimplexRealization& r, LabelSet t1, LabelSet t2, LabelSet edge, double t = 0.5);

/// Reflection of R^{n-1,1} in the hyperplane orthogonal to a unit spacelike normal.
Eigen::MatrixXd reflection(const Eigen::VectorXd& normal);

}  // namespace orbicheck
