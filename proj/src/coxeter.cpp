#include "orbicheck/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "orbicheck/gluing.hpp"

namespace orbicheck {

CoxeterMatrix::CoxeterMatrix(int rank) : rank_(rank), m_(static_cast<std::size_t>(rank * rank), 2) {
  if (rank < 1) throw std::invalid_argument("Coxeter rank must be positive");
  for (int i = 0; i < rank; ++i) m_[static_cast<std::size_t>(i * rank + i)] = 1;
}

void CoxeterMatrix::set(int i, int j, int value) {
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_ || i == j) throw std::invalid_argument("bad Coxeter node pair");
  if (value < 2) throw std::invalid_argument("Coxeter labels must be at least 2");
  m_[static_cast<std::size_t>(i * rank_ + j)] = value;
  m_[static_cast<std::size_t>(j * rank_ + i)] = value;
}

CoxeterMatrix parse_coxeter(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  std::optional<CoxeterMatrix> cox;
  std::vector<std::pair<int, int>> seen;
  auto to_int = [&](const std::string& s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw ParseError(line_no, "expected integer, got '" + s + "'");
    return v;
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream tokens(raw.substr(0, raw.find('#')));
    std::vector<std::string> tok;
    for (std::string t; tokens >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "rank") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'rank <n>'");
      if (cox) throw ParseError(line_no, "duplicate 'rank' line");
      int n = to_int(tok[1]);
      if (n < 1) throw ParseError(line_no, "rank must be positive");
      cox.emplace(n);
    } else if (tok[0] == "m") {
      if (!cox) throw ParseError(line_no, "'m' before 'rank'");
      if (tok.size() != 4) throw ParseError(line_no, "expected 'm <i> <j> <value>'");
      int i = to_int(tok[1]), j = to_int(tok[2]), v = to_int(tok[3]);
      if (i < 0 || j < 0 || i >= cox->rank() || j >= cox->rank() || i == j)
        throw ParseError(line_no, "node pair out of range");
      if (v < 2) throw ParseError(line_no, "Coxeter label must be at least 2");
      auto key = std::minmax(i, j);
      if (std::find(seen.begin(), seen.end(), std::pair{key.first, key.second}) != seen.end())
        throw ParseError(line_no, "pair listed twice");
      seen.emplace_back(key.first, key.second);
      cox->set(i, j, v);
    } else {
      throw ParseError(line_no, "unknown keyword '" + tok[0] + "'");
    }
  }
  if (!cox) throw ParseError(0, "missing 'rank' line");
  return *cox;
}

CoxeterMatrix read_coxeter_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_coxeter(ss.str());
}

Eigen::MatrixXd gram_matrix(const CoxeterMatrix& cox) {
  const int n = cox.rank();
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = i == j ? 1.0 : -std::cos(std::numbers::pi / cox(i, j));
  return g;
}

Signature signature(const Eigen::MatrixXd& g, double tol) {
  if (g.rows() != g.cols()) throw std::invalid_argument("signature of a non-square matrix");
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > tol) throw std::invalid_argument("matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
  Signature s;
  for (double lambda : es.eigenvalues()) {
    if (std::abs(lambda) < tol)
      ++s.zero;
    else if (lambda > 0)
      ++s.positive;
    else
      ++s.negative;
  }
  return s;
}

namespace {

Eigen::MatrixXd principal(const Eigen::MatrixXd& g, const std::vector<int>& nodes) {
  const auto k = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXd sub(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = g(nodes[i], nodes[j]);
  return sub;
}

bool positive_definite(const Eigen::MatrixXd& g, double tol) {
  if (g.rows() == 0) return true;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > tol;
}

}  // namespace

LannerReport lanner_check(const CoxeterMatrix& cox, double tol) {
  const int n = cox.rank();
  const auto g = gram_matrix(cox);
  LannerReport report;
  report.determinant = g.determinant();
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) nodes.push_back(i);
    if (!positive_definite(principal(g, nodes), tol)) report.indefinite_subsets.push_back(nodes);
  }
  std::sort(report.indefinite_subsets.begin(), report.indefinite_subsets.end());
  report.compact_hyperbolic = report.indefinite_subsets.empty() && report.determinant < -tol;
  return report;
}

double lorentz(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const auto n = x.size();
  return x.head(n - 1).dot(y.head(n - 1)) - x(n - 1) * y(n - 1);
}

SimplexRealization realize_simplex(const CoxeterMatrix& cox, double tol) {
  const int n = cox.rank();
  const auto g = gram_matrix(cox);
  if (signature(g, tol) != Signature{n - 1, 1, 0})
    throw std::runtime_error("Gram matrix does not have Lorentzian signature");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  const auto& lambda = es.eigenvalues();  // ascending: lambda(0) < 0
  const auto& q = es.eigenvectors();

  SimplexRealization r;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd u(n);
    for (int k = 1; k < n; ++k) u(k - 1) = q(i, k) * std::sqrt(lambda(k));
    u(n - 1) = q(i, 0) * std::sqrt(-lambda(0));
    r.normals.push_back(u);
  }

  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd a(n - 1, n);
    for (int j = 0, row = 0; j < n; ++j) {
      if (j == i) continue;
      Eigen::VectorXd ju = r.normals[j];
      ju(n - 1) = -ju(n - 1);
      a.row(row++) = ju.transpose();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    Eigen::VectorXd v = svd.matrixV().col(n - 1);
    double norm = lorentz(v, v);
    if (norm >= -tol) throw std::runtime_error("vertex " + std::to_string(i) + " is not timelike");
    v /= std::sqrt(-norm);
    if (v(n - 1) < 0) v = -v;
    r.vertices.push_back(v);
  }

  // Outward normals point away from the opposite vertex.
  int inward = 0;
  for (int i = 0; i < n; ++i)
    if (lorentz(r.vertices[i], r.normals[i]) > 0) ++inward;
  if (inward == n)
    for (auto& u : r.normals) u = -u;
  else if (inward != 0)
    throw std::runtime_error("inconsistent normal orientation");

  double residual = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      residual = std::max(residual, std::abs(lorentz(r.normals[i], r.normals[j]) - g(i, j)));
      if (i != j) residual = std::max(residual, std::abs(lorentz(r.normals[j], r.vertices[i])));
    }
  r.gram_residual = residual;
  if (residual > tol) throw std::runtime_error("realization residual exceeds tolerance");
  return r;
}

double dihedral_angle(const CoxeterMatrix& cox, LabelSet triple) {
  if (cox.rank() != kMaxLabels) throw std::invalid_argument("dihedral angles need a rank-5 diagram");
  if (label_count(triple) != 3 || !is_subset(triple, kAllLabels))
    throw std::invalid_argument("dihedral angle needs three distinct labels");
  auto rest = label_list(kAllLabels & ~triple);
  return std::numbers::pi / cox(rest[0], rest[1]);
}

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// One connected component of a finite-type diagram.
FiniteCoxeterGroup classify_component(const CoxeterMatrix& cox, const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 1) return {2, "A1"};
  if (n == 2) {
    int m = cox(nodes[0], nodes[1]);
    switch (m) {
      case 3:
        return {6, "A2"};
      case 4:
        return {8, "B2"};
      case 6:
        return {12, "G2"};
      default:
        return {2LL * m, "I2(" + std::to_string(m) + ")"};
    }
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && cox(nodes[i], nodes[j]) >= 3) adj[i].push_back(j);

  auto branch = std::find_if(adj.begin(), adj.end(), [](const auto& a) { return a.size() >= 3; });
  if (branch == adj.end()) {
    // Path: walk from an end and record the labels.
    int start = static_cast<int>(std::find_if(adj.begin(), adj.end(), [](const auto& a) { return a.size() == 1; }) -
                                 adj.begin());
    std::vector<int> labels;
    for (int prev = -1, cur = start;;) {
      int next = -1;
      for (int x : adj[cur])
        if (x != prev) next = x;
      if (next < 0) break;
      labels.push_back(cox(nodes[cur], nodes[next]));
      prev = cur;
      cur = next;
    }
    if (labels.front() != 3) std::reverse(labels.begin(), labels.end());
    const std::string nn = std::to_string(n);
    const auto threes = std::count(labels.begin(), labels.end(), 3);
    if (threes == n - 1) return {factorial(n + 1), "A" + nn};
    if (threes == n - 2 && labels.back() == 4) return {(1LL << n) * factorial(n), "B" + nn};
    if (n == 4 && labels == std::vector<int>{3, 4, 3}) return {1152, "F4"};
    if (threes == n - 2 && labels.back() == 5) {
      if (n == 3) return {120, "H3"};
      if (n == 4) return {14400, "H4"};
    }
  } else {
    int center = static_cast<int>(branch - adj.begin());
    bool simply_laced = true;
    for (int i = 0; i < n; ++i)
      for (int j : adj[i])
        if (cox(nodes[i], nodes[j]) != 3) simply_laced = false;
    if (simply_laced && adj[center].size() == 3) {
      std::vector<int> arms;
      for (int first : adj[center]) {
        int len = 1;
        for (int prev = center, cur = first; adj[cur].size() == 2; ++len) {
          int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
          prev = cur;
          cur = next;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      const std::string nn = std::to_string(n);
      if (arms[0] == 1 && arms[1] == 1) return {(1LL << (n - 1)) * factorial(n), "D" + nn};
      if (arms == std::vector<int>{1, 2, 2}) return {51840, "E6"};
      if (arms == std::vector<int>{1, 2, 3}) return {2903040, "E7"};
      if (arms == std::vector<int>{1, 2, 4}) return {696729600, "E8"};
    }
  }
  throw std::logic_error("positive definite diagram outside the classification");
}

}  // namespace

FiniteCoxeterGroup finite_coxeter_group(const CoxeterMatrix& cox, const std::vector<int>& nodes) {
  for (int v : nodes)
    if (v < 0 || v >= cox.rank()) throw std::invalid_argument("node out of range");
  if (!positive_definite(principal(gram_matrix(cox), nodes), kGeometryTolerance))
    throw std::invalid_argument("sub-diagram does not generate a finite group");

  std::vector<int> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> used(sorted.size(), false);
  FiniteCoxeterGroup out{1, ""};
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> comp{sorted[s]};
    used[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t t = 0; t < sorted.size(); ++t)
        if (!used[t] && cox(comp[k], sorted[t]) >= 3) {
          used[t] = true;
          comp.push_back(sorted[t]);
        }
    auto part = classify_component(cox, comp);
    out.order *= part.order;
    out.type += (out.type.empty() ? "" : "x") + part.type;
  }
  if (out.type.empty()) out.type = "trivial";
  return out;
}

long long finite_coxeter_order(const CoxeterMatrix& cox, const std::vector<int>& nodes) {
  return finite_coxeter_group(cox, nodes).order;
}

Eigen::VectorXd edge_point(const SimplexRealization& r, int a, int b, double t) {
  Eigen::VectorXd p = (1.0 - t) * r.vertices.at(a) + t * r.vertices.at(b);
  return p / std::sqrt(-lorentz(p, p));
}

double half_plane_angle(const Eigen::VectorXd& a_point, const Eigen::VectorXd& b_point, const Eigen::VectorXd& x1,
                        const Eigen::VectorXd& x2, double t) {
  Eigen::VectorXd p = (1.0 - t) * a_point + t * b_point;
  p /= std::sqrt(-lorentz(p, p));
  Eigen::VectorXd d = b_point + lorentz(b_point, p) * p;
  d /= std::sqrt(lorentz(d, d));
  auto tangent = [&](const Eigen::VectorXd& x) {
    Eigen::VectorXd w = x + lorentz(x, p) * p;
    w -= lorentz(w, d) * d;
    double len2 = lorentz(w, w);
    if (len2 < 1e-24) throw std::runtime_error("degenerate tangent direction");
    return Eigen::VectorXd(w / std::sqrt(len2));
  };
  double c = lorentz(tangent(x1), tangent(x2));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double wedge_angle(const SimplexRealization& r, LabelSet t1, LabelSet t2, LabelSet edge, double t) {
  if (label_count(edge) != 2 || label_count(t1) != 3 || label_count(t2) != 3 || !is_subset(edge, t1) ||
      !is_subset(edge, t2))
    throw std::invalid_argument("wedge angle needs two triangles sharing the given edge");
  auto e = label_list(edge);
  int c1 = label_list(t1 & ~edge).front();
  int c2 = label_list(t2 & ~edge).front();
  return half_plane_angle(r.vertices.at(e[0]), r.vertices.at(e[1]), r.vertices.at(c1), r.vertices.at(c2), t);
}

Eigen::MatrixXd reflection(const Eigen::VectorXd& normal) {
  const auto n = normal.size();
  Eigen::VectorXd ju = normal;
  ju(n - 1) = -ju(n - 1);
  return Eigen::MatrixXd::Identity(n, n) - 2.0 * normal * ju.transpose();
}

}  // namespace orbicheck
