#include "doctest.h"

#include <deque>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "orbicheck/quotient.hpp"

using namespace orbicheck;

namespace {

// Face classes by breadth-first closure: for each label set, simplex j reaches
// partner(j, l) for every label l outside the set. Returns the member sets.
std::set<std::vector<int>> closure_classes(const GluingTable& t, LabelSet labels) {
  std::set<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(t.size()), false);
  for (int s = 0; s < t.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> members;
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      int j = queue.front();
      queue.pop_front();
      members.push_back(j);
      for (int l : label_list(t.labels() & ~labels))
        if (auto k = t.partner(j, l); k && !seen[*k]) {
          seen[*k] = true;
          queue.push_back(*k);
        }
    }
    out.insert(fixtures::sorted(members));
  }
  return out;
}

void check_against_closure(const GluingTable& t) {
  auto qc = build_quotient(t);
  for (int d = 0; d <= t.dimension(); ++d)
    for (LabelSet s : subsets_of_size(t.labels(), d + 1)) {
      std::set<std::vector<int>> ours;
      for (const auto& fc : qc.classes(d))
        if (fc.labels == s) ours.insert(fc.members);
      CHECK(ours == closure_classes(t, s));
    }
}

}  // namespace

TEST_CASE("face classes agree with breadth-first closure") {
  check_against_closure(fixtures::cp2_table());
  check_against_closure(fixtures::double_simplex());
  check_against_closure(fixtures::cross_polytope());
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) check_against_closure(fixtures::random_table(rng, 2 + 2 * (i % 5), kAllLabels, i % 2));
}

TEST_CASE("CP2 face counts") {
  const auto& qc = fixtures::cp2();
  CHECK(qc.f_vector() == std::vector<int>{10, 51, 134, 150, 60});
  CHECK(euler_characteristic(qc) == 3);
  CHECK_FALSE(qc.has_boundary());

  std::vector<int> degrees, labels;
  for (const auto& v : qc.classes(0)) {
    degrees.push_back(v.degree());
    labels.push_back(label_list(v.labels).front());
  }
  CHECK(degrees == std::vector<int>{48, 6, 48, 60, 60, 12, 36, 12, 12, 6});
  CHECK(labels == std::vector<int>{0, 1, 2, 3, 4, 1, 1, 0, 2, 1});
}

TEST_CASE("CP2 degree sums per label set") {
  const auto& qc = fixtures::cp2();
  for (int d = 0; d <= 3; ++d) {
    std::map<LabelSet, int> sums;
    for (const auto& fc : qc.classes(d)) sums[fc.labels] += fc.degree();
    CHECK(sums.size() == subsets_of_size(kAllLabels, d + 1).size());
    for (auto [labels, sum] : sums) CHECK(sum == 60);
  }
}

TEST_CASE("CP2 triangles of type (0 1 2)") {
  const std::set<std::vector<int>> expected = {
      {0, 1},
      {2, 4, 6, 10},
      {3, 5},
      {7, 11, 14, 20},
      {8, 9, 12, 13, 17, 19, 23, 24},
      {15, 16, 21, 25, 27, 29, 34, 37},
      {18, 30},
      {22, 33, 35, 36, 46, 47, 48, 56},
      {26, 32, 38, 39, 44, 49, 50, 57},
      {28, 40, 41, 51},
      {31, 43},
      {42, 52, 53, 58},
      {45, 54},
      {55, 59},
  };
  std::set<std::vector<int>> found;
  for (const auto& fc : fixtures::cp2().classes(2))
    if (fc.labels == make_label_set({0, 1, 2})) found.insert(fc.members);
  CHECK(found == expected);
}

TEST_CASE("canonical numbering and lookups") {
  const auto& qc = fixtures::cp2();
  for (int d = 0; d <= 4; ++d) {
    const auto& cls = qc.classes(d);
    for (std::size_t i = 1; i < cls.size(); ++i) {
      auto a = cls[i - 1].representative();
      auto b = cls[i].representative();
      CHECK((a.simplex < b.simplex || (a.simplex == b.simplex && label_less(a.labels, b.labels))));
    }
    for (int id = 0; id < qc.count(d); ++id)
      for (int j : qc.face(d, id).members) CHECK(qc.class_of({j, qc.face(d, id).labels}) == id);
  }
  for (int j = 0; j < 60; ++j) CHECK(qc.face(4, j).members == std::vector<int>{j});
  CHECK_THROWS_AS(qc.face(2, 134), std::out_of_range);
  CHECK_THROWS_AS(face_degree(qc, 0, -1), std::out_of_range);
  CHECK(face_degree(qc, 0, 3) == 60);
  CHECK(qc.vertices_of(2, 0) == std::vector<int>{0, 1, 2});
}

TEST_CASE("boundary terms follow ascending labels with alternating signs") {
  const auto& qc = fixtures::cp2();
  for (int d = 1; d <= 4; ++d)
    for (int id = 0; id < qc.count(d); ++id) {
      const auto& fc = qc.face(d, id);
      const auto& bd = qc.boundary(d, id);
      auto labels = label_list(fc.labels);
      REQUIRE(bd.size() == labels.size());
      for (std::size_t i = 0; i < labels.size(); ++i) {
        CHECK(bd[i].sign == (i % 2 ? -1 : 1));
        CHECK(bd[i].face == qc.class_of({fc.members.front(), static_cast<LabelSet>(fc.labels & ~label_bit(labels[i]))}));
      }
    }
}

TEST_CASE("small fixtures") {
  auto dbl = build_quotient(fixtures::double_simplex());
  CHECK(dbl.f_vector() == std::vector<int>{5, 10, 10, 5, 2});
  CHECK(euler_characteristic(dbl) == 2);

  auto single = build_quotient(GluingTable(1));
  CHECK(single.f_vector() == std::vector<int>{5, 10, 10, 5, 1});
  CHECK(single.has_boundary());
  CHECK(euler_characteristic(single) == 1);

  auto cross = build_quotient(fixtures::cross_polytope());
  CHECK(cross.f_vector() == std::vector<int>{10, 40, 80, 80, 32});
  for (const auto& t : cross.classes(2)) CHECK(t.degree() == 4);

  GluingTable bad(1);
  bad.assign(0, 0, 0);
  CHECK_THROWS_AS(build_quotient(bad), std::invalid_argument);
}

TEST_CASE("cells built by hand") {
  auto loop = QuotientComplex::from_cells({{{}}, {{{0, 1}, {0, -1}}}});
  CHECK(loop.f_vector() == std::vector<int>{1, 1});
  CHECK(euler_characteristic(loop) == 0);
  CHECK_FALSE(loop.table().has_value());
}
