#include "doctest.h"

#include <algorithm>
#include <map>
#include <numbers>
#include <set>
#include <tuple>

#include "fixtures.hpp"
#include "orbicheck/orbifold.hpp"

using namespace orbicheck;

namespace {

constexpr double pi = std::numbers::pi;

// Member sets of the triangle classes in a component.
std::set<std::vector<int>> member_sets(const QuotientComplex& qc, const std::vector<int>& triangles) {
  std::set<std::vector<int>> out;
  for (int t : triangles) out.insert(qc.face(2, t).members);
  return out;
}

int triangle_with_members(const QuotientComplex& qc, std::vector<int> members) {
  members = fixtures::sorted(members);
  for (int t = 0; t < qc.count(2); ++t)
    if (qc.face(2, t).members == members) return t;
  return -1;
}

const LocusDecomposition& cp2_locus() {
  static const LocusDecomposition locus = locus_components(fixtures::cp2(), fixtures::lanner_343());
  return locus;
}

}  // namespace

TEST_CASE("triangle degrees divide the full turn") {
  const auto& qc = fixtures::cp2();
  auto records = triangle_report(qc, fixtures::lanner_343());
  REQUIRE(records.size() == 134);

  int t40 = triangle_with_members(qc, {8, 17, 24, 19, 9, 13, 23, 12});
  REQUIRE(t40 >= 0);
  CHECK(records[t40].theta == pi / 4);
  CHECK(records[t40].full_count == 8);
  CHECK(records[t40].degree == 8);
  CHECK(records[t40].weight == 1);
  CHECK_FALSE(records[t40].singular());

  int t9 = triangle_with_members(qc, {0, 1});
  REQUIRE(t9 >= 0);
  CHECK(qc.face(2, t9).labels == make_label_set({0, 1, 2}));
  CHECK(records[t9].degree == 2);
  CHECK(records[t9].weight == 4);

  std::map<LabelSet, int> degree_sums;
  int singular = 0;
  for (const auto& r : records) {
    CHECK(r.full_count % r.degree == 0);
    CHECK(r.weight * r.degree == r.full_count);
    if (r.m == 3) CHECK(r.degree == 6);
    if (r.m == 4) CHECK(8 % r.degree == 0);
    degree_sums[r.labels] += r.degree;
    singular += r.singular();
  }
  CHECK(singular == 20);
  for (auto [labels, sum] : degree_sums) CHECK(sum == 60);
}

TEST_CASE("right-angled triangles of degree 2") {
  const auto& qc = fixtures::cp2();
  auto classes = pi_over_2_exceptions(qc, fixtures::lanner_343());
  const std::set<std::vector<int>> expected = {{0, 2},   {4, 10},  {6, 10},  {22, 33}, {26, 32},
                                               {31, 42}, {47, 56}, {50, 57}, {52, 58}, {53, 58}};
  CHECK(classes.size() == 10);
  CHECK(member_sets(qc, classes) == expected);

  // In a double every triangle has degree 2.
  auto dbl = build_quotient(fixtures::double_simplex());
  CHECK(pi_over_2_exceptions(dbl, fixtures::all_right()).size() == 10);

  // In the cross-polytope every triangle has degree 4.
  auto cross = build_quotient(fixtures::cross_polytope());
  CHECK(pi_over_2_exceptions(cross, fixtures::all_right()).empty());
}

TEST_CASE("divisibility failures are itemized") {
  auto cross = build_quotient(fixtures::cross_polytope());
  try {
    triangle_report(cross, fixtures::lanner_343());
    FAIL("expected an orbifold error");
  } catch (const OrbifoldError& e) {
    // Degree 4 does not divide 6 on the eight classes of each of the four pi/3 types.
    CHECK(e.problems().size() == 32);
  }
  CHECK_THROWS_AS(vertex_report(cross, fixtures::lanner_343()), OrbifoldError);

  auto dbl = build_quotient(fixtures::double_simplex());
  CHECK_NOTHROW(triangle_report(dbl, fixtures::lanner_343()));
  CHECK_THROWS_AS(triangle_report(cross, CoxeterMatrix(4)), std::invalid_argument);
}

TEST_CASE("locus components") {
  const auto& qc = fixtures::cp2();
  const auto& locus = cp2_locus();
  REQUIRE(locus.components.size() == 4);

  std::vector<std::size_t> sizes;
  for (const auto& c : locus.components) sizes.push_back(c.triangles.size());
  CHECK(sizes == std::vector<std::size_t>{2, 4, 4, 10});

  const auto& a4 = locus.component("A4");
  const auto& a2 = locus.component("A2");
  const auto& b = locus.component("B");
  const auto& c = locus.component("C");

  CHECK(member_sets(qc, a4.triangles) == std::set<std::vector<int>>{{0, 1}, {3, 5}, {18, 30}, {31, 43}});
  CHECK(member_sets(qc, a2.triangles) ==
        std::set<std::vector<int>>{{2, 4, 6, 10}, {7, 11, 14, 20}, {28, 40, 41, 51}, {42, 52, 53, 58}});
  CHECK(member_sets(qc, b.triangles) == std::set<std::vector<int>>{{45, 54}, {55, 59}});
  CHECK(member_sets(qc, c.triangles) == member_sets(qc, pi_over_2_exceptions(qc, fixtures::lanner_343())));

  CHECK(a4.weight() == 4);
  CHECK(a2.weight() == 2);
  CHECK(b.weight() == 4);
  CHECK(c.weight() == 2);

  CHECK(b.edges.size() == 3);
  CHECK(b.vertices.size() == 3);
  CHECK(b.euler_characteristic == 2);
  CHECK(b.mirror_edges.empty());
  CHECK(b.mod2_cycle);
  CHECK(b.cycle_signs.has_value());

  for (const auto* part : {&a4, &a2, &c}) {
    CHECK_FALSE(part->cycle_signs.has_value());
    CHECK_FALSE(part->mod2_cycle);
    // The three non-sphere pieces meet along the same four edges.
    CHECK(part->mirror_edges == std::vector<int>{0, 4, 44, 45});
  }

  // Every interior edge is met an even number of times.
  for (const auto& comp : locus.components)
    for (int e : comp.interior_edges) {
      int n = 0;
      for (int t : comp.triangles)
        for (const auto& term : qc.boundary(2, t)) n += term.face == e;
      CHECK(n % 2 == 0);
    }

  // B touches the others only in vertices.
  for (const auto& j : locus.junctions) {
    const bool has_b = locus.components[j.first].name == "B" || locus.components[j.second].name == "B";
    if (has_b) CHECK(j.shared_edges.empty());
  }
}

TEST_CASE("locus decomposition is independent of class numbering") {
  // Relabel simplices by a permutation and compare the component signatures.
  const auto& t = fixtures::cp2_table();
  std::vector<int> perm(60);
  for (int i = 0; i < 60; ++i) perm[i] = (i * 7 + 3) % 60;
  GluingTable shuffled(60);
  for (int j = 0; j < 60; ++j)
    for (int l = 0; l < 5; ++l) shuffled.assign(perm[j], l, perm[*t.partner(j, l)]);
  auto qc = build_quotient(shuffled);
  auto locus = locus_components(qc, fixtures::lanner_343());
  std::multiset<std::tuple<std::size_t, int, int>> ours, theirs;
  for (const auto& c : locus.components) ours.insert({c.triangles.size(), c.weight(), c.euler_characteristic});
  for (const auto& c : cp2_locus().components) theirs.insert({c.triangles.size(), c.weight(), c.euler_characteristic});
  CHECK(ours == theirs);
  std::vector<std::string> names;
  for (const auto& c : locus.components) names.push_back(c.name);
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"A2", "A4", "B", "C"});
}

TEST_CASE("manifold complexes have no locus") {
  auto cross = build_quotient(fixtures::cross_polytope());
  auto locus = locus_components(cross, fixtures::all_right());
  CHECK(locus.components.empty());
  CHECK(locus.junctions.empty());
}

TEST_CASE("vertex local orders") {
  auto records = vertex_report(fixtures::cp2(), fixtures::lanner_343());
  REQUIRE(records.size() == 10);
  std::vector<long long> local;
  std::map<int, int> degree_by_label;
  for (const auto& r : records) {
    CHECK(r.integral);
    CHECK(r.local_order * r.degree == r.group_order);
    local.push_back(r.local_order);
    degree_by_label[r.label] += r.degree;
  }
  CHECK(local == std::vector<long long>{8, 192, 8, 2, 2, 96, 32, 32, 32, 192});
  for (auto [label, sum] : degree_by_label) CHECK(sum == 60);

  CHECK(records[3].label == 3);
  CHECK(records[3].degree == 60);
  CHECK(records[3].diagram == "A4");
  CHECK(records[3].group_order == 120);
  CHECK(records[0].diagram == "B4");
  CHECK(records[0].group_order == 384);
  CHECK(records[1].diagram == "F4");
  CHECK(records[1].group_order == 1152);
  CHECK(records[1].local_order == 192);
}

TEST_CASE("flatness of the locus") {
  const auto& qc = fixtures::cp2();
  auto r = realize_simplex(fixtures::lanner_343());
  for (const auto& c : cp2_locus().components) {
    CAPTURE(c.name);
    auto flat = flatness_check(qc, r, c);
    CHECK(flat.edges.size() == c.interior_edges.size());
    CHECK(flat.passed());
    for (const auto& e : flat.edges) {
      CHECK(e.angle == doctest::Approx(pi).epsilon(1e-9));
      CHECK(e.first != e.second);
    }
  }

  // Negative control: an A4 triangle and a C triangle meeting at a right angle.
  const auto& a4 = cp2_locus().component("A4");
  const auto& cc = cp2_locus().component("C");
  int shared_edge = a4.mirror_edges.front();
  int a4_tri = -1, c_tri = -1;
  for (int t : a4.triangles)
    for (const auto& term : qc.boundary(2, t))
      if (term.face == shared_edge) a4_tri = t;
  for (int t : cc.triangles)
    for (const auto& term : qc.boundary(2, t))
      if (term.face == shared_edge) c_tri = t;
  REQUIRE(a4_tri >= 0);
  REQUIRE(c_tri >= 0);
  auto bent = make_component(qc, {a4_tri, c_tri});
  REQUIRE(bent.interior_edges == std::vector<int>{shared_edge});
  auto flat = flatness_check(qc, r, bent);
  CHECK_FALSE(flat.passed());
  REQUIRE(flat.edges.size() == 1);
  CHECK(flat.edges[0].angle == doctest::Approx(pi / 2).epsilon(1e-9));
}

TEST_CASE("classes of locus chains in H2") {
  const auto& qc = fixtures::cp2();
  auto classes = locus_classes(qc, cp2_locus());
  REQUIRE(classes.size() == 4);
  std::map<std::string, Integer> multiple;
  for (const auto& c : classes) multiple[c.name] = c.multiple;
  CHECK(multiple["B"] == 1);
  CHECK(multiple["A4+A2"] == 2);
  CHECK(multiple["A4+C"] == 4);

  // Every chain found is a genuine cycle with +-1 coefficients.
  HomologyBasis basis(qc, 2);
  for (const auto& c : classes) {
    std::vector<Integer> chain(static_cast<std::size_t>(qc.count(2)), 0);
    for (std::size_t i = 0; i < c.triangles.size(); ++i) {
      CHECK(std::abs(c.signs[i]) == 1);
      chain[c.triangles[i]] += c.signs[i];
    }
    CHECK(std::abs(basis.coordinates(chain).free.at(0)) == c.multiple);
    // Negating the whole chain keeps the absolute class.
    for (auto& x : chain) x = -x;
    CHECK(std::abs(basis.coordinates(chain).free.at(0)) == c.multiple);
  }

  // The pieces other than B admit no cycle on their own.
  const auto& locus = cp2_locus();
  for (const char* name : {"A4", "A2", "C"})
    CHECK_FALSE(evaluate_chain(basis, qc, name, {{&locus.component(name), 1}}).has_value());
  auto a2c = evaluate_chain(basis, qc, "A2+C", {{&locus.component("A2"), 1}, {&locus.component("C"), 1}});
  REQUIRE(a2c.has_value());
  CHECK(a2c->multiple == 2);
}

TEST_CASE("cycle lattice on A4 and C") {
  // Every +-1 cycle on the A4 and C triangles has the same class up to sign.
  const auto& qc = fixtures::cp2();
  const auto& locus = cp2_locus();
  std::vector<int> tris = locus.component("A4").triangles;
  for (int t : locus.component("C").triangles) tris.push_back(t);
  HomologyBasis basis(qc, 2);

  std::set<Integer> classes;
  std::vector<Integer> chain(static_cast<std::size_t>(qc.count(2)), 0);
  for (unsigned mask = 0; mask < (1u << tris.size()); ++mask) {
    std::fill(chain.begin(), chain.end(), 0);
    for (std::size_t i = 0; i < tris.size(); ++i) chain[tris[i]] = (mask >> i) & 1u ? 1 : -1;
    try {
      classes.insert(std::abs(basis.coordinates(chain).free.at(0)));
    } catch (const NotACycle&) {
    }
  }
  CHECK(classes == std::set<Integer>{4});

  auto minus = evaluate_chain(basis, qc, "-A4+C", {{&locus.component("A4"), -1}, {&locus.component("C"), 1}});
  REQUIRE(minus.has_value());
  CHECK(minus->multiple == 4);
}
