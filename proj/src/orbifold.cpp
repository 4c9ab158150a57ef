#include "orbicheck/orbifold.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <tuple>
#include <sstream>

namespace orbicheck {

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
  std::string out = "orbifold check failed";
  for (const auto& p : problems) out += "\n  " + p;
  return out;
}

int complementary_m(const CoxeterMatrix& cox, LabelSet triple) {
  auto rest = label_list(kAllLabels & ~triple);
  return cox(rest[0], rest[1]);
}

void require_rank5(const CoxeterMatrix& cox) {
  if (cox.rank() != kMaxLabels) throw std::invalid_argument("orbifold analysis needs a rank-5 Coxeter matrix");
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Least sign vector (+ before -) with zero boundary; `fixed` multiplies each
// triangle's sign before the boundary is taken.
std::optional<std::vector<int>> least_cycle_signs(const QuotientComplex& qc, const std::vector<int>& triangles,
                                                  const std::vector<int>& fixed) {
  const int n = static_cast<int>(triangles.size());
  if (n > 24) throw std::invalid_argument("sign search limited to 24 triangles");
  if (n == 0) return std::vector<int>{};
  std::map<int, int> edge_index;
  for (int t : triangles)
    for (const auto& term : qc.boundary(2, t)) edge_index.emplace(term.face, 0);
  int next = 0;
  for (auto& [e, i] : edge_index) i = next++;
  std::vector<std::vector<std::pair<int, int>>> bd(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (const auto& term : qc.boundary(2, triangles[i])) bd[i].emplace_back(edge_index.at(term.face), term.sign * fixed[i]);

  std::vector<int> acc(static_cast<std::size_t>(next));
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int i = 0; i < n; ++i) {
      int s = (mask >> (n - 1 - i)) & 1ul ? -1 : 1;
      for (auto [e, sign] : bd[i]) acc[e] += s * sign;
    }
    if (std::all_of(acc.begin(), acc.end(), [](int x) { return x == 0; })) {
      std::vector<int> signs(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) signs[i] = (mask >> (n - 1 - i)) & 1ul ? -1 : 1;
      return signs;
    }
  }
  return std::nullopt;
}

}  // namespace

OrbifoldError::OrbifoldError(std::vector<std::string> problems)
    : std::runtime_error(join_problems(problems)), problems_(std::move(problems)) {}

std::vector<TriangleRecord> triangle_report(const QuotientComplex& qc, const CoxeterMatrix& cox) {
  require_rank5(cox);
  std::vector<TriangleRecord> out;
  std::vector<std::string> problems;
  for (int t = 0; t < qc.count(2); ++t) {
    const auto& fc = qc.face(2, t);
    TriangleRecord r;
    r.triangle = t;
    r.labels = fc.labels;
    r.m = complementary_m(cox, fc.labels);
    r.theta = dihedral_angle(cox, fc.labels);
    r.full_count = 2 * r.m;
    r.degree = fc.degree();
    if (r.full_count % r.degree == 0) {
      r.weight = r.full_count / r.degree;
    } else {
      std::ostringstream os;
      os << "triangle " << t << ' ' << format_labels(fc.labels) << ": degree " << r.degree << " does not divide "
         << r.full_count;
      problems.push_back(os.str());
    }
    out.push_back(r);
  }
  if (!problems.empty()) throw OrbifoldError(problems);
  return out;
}

std::vector<int> pi_over_2_exceptions(const QuotientComplex& qc, const CoxeterMatrix& cox) {
  require_rank5(cox);
  std::vector<int> out;
  std::vector<std::string> problems;
  for (int t = 0; t < qc.count(2); ++t) {
    const auto& fc = qc.face(2, t);
    if (complementary_m(cox, fc.labels) != 2 || fc.degree() == 4) continue;
    if (fc.degree() == 2)
      out.push_back(t);
    else
      problems.push_back("right-angled triangle " + std::to_string(t) + " has degree " + std::to_string(fc.degree()));
  }
  if (!problems.empty()) throw OrbifoldError(problems);
  return out;
}

int LocusComponent::weight() const {
  if (weights.empty()) return 0;
  for (int w : weights)
    if (w != weights.front()) return 0;
  return weights.front();
}

const LocusComponent& LocusDecomposition::component(const std::string& name) const {
  for (const auto& c : components)
    if (c.name == name) return c;
  throw std::out_of_range("no locus component named " + name);
}

LocusComponent make_component(const QuotientComplex& qc, std::vector<int> triangles) {
  LocusComponent c;
  c.triangles = sorted_unique(std::move(triangles));
  std::map<int, int> incidence;
  std::vector<int> vertices;
  for (int t : c.triangles) {
    for (const auto& term : qc.boundary(2, t)) ++incidence[term.face];
    for (int v : qc.vertices_of(2, t)) vertices.push_back(v);
  }
  for (auto [e, n] : incidence) {
    c.edges.push_back(e);
    (n >= 2 ? c.interior_edges : c.mirror_edges).push_back(e);
  }
  c.vertices = sorted_unique(std::move(vertices));
  c.euler_characteristic = static_cast<int>(c.vertices.size()) - static_cast<int>(c.edges.size()) +
                           static_cast<int>(c.triangles.size());
  c.mod2_cycle = std::all_of(incidence.begin(), incidence.end(), [](auto p) { return p.second % 2 == 0; });
  c.cycle_signs = least_cycle_signs(qc, c.triangles, std::vector<int>(c.triangles.size(), 1));
  return c;
}

LocusDecomposition locus_components(const QuotientComplex& qc, const CoxeterMatrix& cox) {
  auto records = triangle_report(qc, cox);
  std::vector<int> singular;
  for (const auto& r : records)
    if (r.singular()) singular.push_back(r.triangle);

  // Union-find over singular triangles; edges as hubs.
  std::vector<int> parent(records.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::tuple<int, int, int>, int> first_on_edge;  // (edge, m, weight) -> triangle
  for (int t : singular)
    for (const auto& term : qc.boundary(2, t)) {
      auto key = std::make_tuple(term.face, records[t].m, records[t].weight);
      auto [it, inserted] = first_on_edge.emplace(key, t);
      if (!inserted) parent[find(t)] = find(it->second);
    }

  std::map<int, std::vector<int>> groups;
  for (int t : singular) groups[find(t)].push_back(t);

  LocusDecomposition out;
  for (auto& [root, ts] : groups) {
    LocusComponent c = make_component(qc, ts);
    for (int t : c.triangles) c.weights.push_back(records[t].weight);
    out.components.push_back(std::move(c));
  }
  std::sort(out.components.begin(), out.components.end(), [](const LocusComponent& a, const LocusComponent& b) {
    return std::make_pair(a.triangles.size(), a.triangles.front()) <
           std::make_pair(b.triangles.size(), b.triangles.front());
  });

  auto signature_name = [](const LocusComponent& c) -> std::string {
    if (c.triangles.size() == 4 && c.weight() == 4) return "A4";
    if (c.triangles.size() == 4 && c.weight() == 2) return "A2";
    if (c.triangles.size() == 2) return "B";
    if (c.triangles.size() == 10) return "C";
    return {};
  };
  std::map<std::string, int> uses;
  for (const auto& c : out.components) ++uses[signature_name(c)];
  int unnamed = 0;
  for (auto& c : out.components) {
    std::string name = signature_name(c);
    c.name = !name.empty() && uses[name] == 1 ? name : "X" + std::to_string(unnamed++);
  }

  for (std::size_t i = 0; i < out.components.size(); ++i)
    for (std::size_t j = i + 1; j < out.components.size(); ++j) {
      const auto& a = out.components[i];
      const auto& b = out.components[j];
      LocusJunction junction{static_cast<int>(i), static_cast<int>(j), intersection(a.vertices, b.vertices),
                             intersection(a.edges, b.edges)};
      if (!junction.shared_vertices.empty() || !junction.shared_edges.empty()) out.junctions.push_back(junction);
    }
  return out;
}

std::vector<VertexRecord> vertex_report(const QuotientComplex& qc, const CoxeterMatrix& cox) {
  require_rank5(cox);
  std::vector<VertexRecord> out;
  std::vector<std::string> problems;
  for (int v = 0; v < qc.count(0); ++v) {
    const auto& fc = qc.face(0, v);
    VertexRecord r;
    r.vertex = v;
    r.label = label_list(fc.labels).front();
    r.degree = fc.degree();
    std::vector<int> nodes;
    for (int k = 0; k < kMaxLabels; ++k)
      if (k != r.label) nodes.push_back(k);
    auto group = finite_coxeter_group(cox, nodes);
    r.diagram = group.type;
    r.group_order = group.order;
    r.integral = group.order % r.degree == 0;
    r.local_order = group.order / r.degree;
    if (!r.integral) {
      std::ostringstream os;
      os << "vertex " << v << ": degree " << r.degree << " does not divide |W| = " << group.order;
      problems.push_back(os.str());
    }
    out.push_back(r);
  }
  if (!problems.empty()) throw OrbifoldError(problems);
  return out;
}

bool FlatnessReport::passed() const {
  return std::all_of(edges.begin(), edges.end(), [](const EdgeFlatness& e) { return e.flat; });
}

namespace {

struct Tile {
  Eigen::MatrixXd g;
  int simplex = 0;
};

std::vector<Tile> develop_edge_star(const GluingTable& table, const SimplexRealization& r, LabelSet edge,
                                    int start) {
  constexpr std::size_t kMaxTiles = 4096;
  const auto n = static_cast<Eigen::Index>(r.normals.size());
  std::vector<Eigen::MatrixXd> mirrors;
  for (const auto& u : r.normals) mirrors.push_back(reflection(u));

  std::vector<Tile> tiles{{Eigen::MatrixXd::Identity(n, n), start}};
  for (std::size_t i = 0; i < tiles.size(); ++i)
    for (int c : label_list(kAllLabels & ~edge)) {
      auto k = table.partner(tiles[i].simplex, c);
      if (!k) continue;
      Eigen::MatrixXd g = tiles[i].g * mirrors[c];
      auto same = std::find_if(tiles.begin(), tiles.end(),
                               [&](const Tile& t) { return (t.g - g).cwiseAbs().maxCoeff() < 1e-6; });
      if (same != tiles.end()) {
        if (same->simplex != *k) throw std::runtime_error("edge star does not develop consistently");
        continue;
      }
      if (tiles.size() >= kMaxTiles) throw std::runtime_error("edge star development does not close up");
      tiles.push_back({g, *k});
    }
  return tiles;
}

}  // namespace

FlatnessReport flatness_check(const QuotientComplex& qc, const SimplexRealization& realization,
                              const LocusComponent& component, double tol) {
  const auto& table = qc.table();
  if (!table) throw std::invalid_argument("flatness check needs a complex built from a gluing table");
  if (realization.vertices.size() != kMaxLabels) throw std::invalid_argument("realization unavailable");

  FlatnessReport report;
  for (int e : component.interior_edges) {
    const LabelSet edge = qc.face(1, e).labels;
    std::vector<int> incident;
    for (int t : component.triangles)
      for (const auto& term : qc.boundary(2, t))
        if (term.face == e) incident.push_back(t);
    incident = sorted_unique(incident);

    const int first = incident.front();
    const LabelSet first_labels = qc.face(2, first).labels;
    const int start = qc.face(2, first).members.front();
    auto tiles = develop_edge_star(*table, realization, edge, start);

    auto e_list = label_list(edge);
    const auto& va = realization.vertices[e_list[0]];
    const auto& vb = realization.vertices[e_list[1]];
    auto apex = [&](LabelSet tri) { return label_list(tri & ~edge).front(); };
    const Eigen::VectorXd base = realization.vertices[apex(first_labels)];

    EdgeFlatness ef;
    ef.edge = e;
    ef.first = first;
    ef.second = first;
    ef.angle = -1.0;
    const bool self_only = incident.size() == 1;
    for (std::size_t ti = 0; ti < tiles.size(); ++ti)
      for (int t : incident) {
        if (!self_only && t == first) continue;
        if (self_only && ti == 0) continue;
        const LabelSet labels = qc.face(2, t).labels;
        if (qc.class_of({tiles[ti].simplex, labels}) != t) continue;
        Eigen::VectorXd lift = tiles[ti].g * realization.vertices[apex(labels)];
        double angle = half_plane_angle(va, vb, base, lift);
        if (angle > ef.angle) {
          ef.angle = angle;
          ef.second = t;
        }
      }
    if (ef.angle < 0) throw std::runtime_error("edge " + std::to_string(e) + " has no opposite triangle");
    ef.residual = std::abs(ef.angle - std::numbers::pi);
    ef.flat = ef.residual <= tol;
    report.max_residual = std::max(report.max_residual, ef.residual);
    report.edges.push_back(ef);
  }
  return report;
}

std::optional<ChainClass> evaluate_chain(const HomologyBasis& basis, const QuotientComplex& qc, std::string name,
                                         const std::vector<ChainTerm>& terms) {
  if (basis.degree() != 2) throw std::invalid_argument("locus chains live in degree 2");
  auto group = basis.group();
  if (group.free_rank != 1 || !group.torsion.empty())
    throw std::invalid_argument("locus classes are measured in H_2 = Z");

  ChainClass out;
  out.name = std::move(name);
  std::vector<int> fixed;
  for (const auto& term : terms)
    for (int t : term.component->triangles) {
      out.triangles.push_back(t);
      fixed.push_back(term.coefficient);
    }
  auto signs = least_cycle_signs(qc, out.triangles, fixed);
  if (!signs) return std::nullopt;

  std::vector<Integer> chain(static_cast<std::size_t>(qc.count(2)), 0);
  for (std::size_t i = 0; i < out.triangles.size(); ++i) {
    out.signs.push_back((*signs)[i] * fixed[i]);
    chain[out.triangles[i]] += out.signs.back();
  }
  out.multiple = std::abs(basis.coordinates(chain).free.front());
  return out;
}

std::vector<ChainClass> locus_classes(const QuotientComplex& qc, const LocusDecomposition& locus) {
  const LocusComponent* parts[4];
  const char* names[4] = {"A4", "A2", "B", "C"};
  std::vector<std::string> problems;
  for (int i = 0; i < 4; ++i) {
    try {
      parts[i] = &locus.component(names[i]);
    } catch (const std::out_of_range&) {
      problems.push_back(std::string("missing locus component ") + names[i]);
    }
  }
  if (!problems.empty()) throw OrbifoldError(problems);
  const auto* a4 = parts[0];
  const auto* a2 = parts[1];
  const auto* b = parts[2];
  const auto* c = parts[3];

  HomologyBasis basis(qc, 2);
  const std::vector<std::pair<std::string, std::vector<ChainTerm>>> chains = {
      {"B", {{b, 1}}},
      {"A4+A2", {{a4, 1}, {a2, 1}}},
      {"A4+C", {{a4, 1}, {c, 1}}},
      {"-A4+C", {{a4, -1}, {c, 1}}},
  };
  std::vector<ChainClass> out;
  for (const auto& [name, terms] : chains) {
    auto cls = evaluate_chain(basis, qc, name, terms);
    if (!cls)
      problems.push_back("chain " + name + " admits no cycle signs");
    else
      out.push_back(std::move(*cls));
  }
  if (!problems.empty()) throw OrbifoldError(problems);
  return out;
}

}  // namespace orbicheck
