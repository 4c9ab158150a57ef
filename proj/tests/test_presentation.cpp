#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "orbicheck/manifold.hpp"
#include "orbicheck/presentation.hpp"

using namespace orbicheck;

namespace {

Word word(std::initializer_list<int> letters) { return Word(letters); }

Presentation random_presentation(std::mt19937& rng) {
  std::uniform_int_distribution<int> gens(1, 4), rels(0, 5), len(1, 6);
  Presentation p;
  p.generators = gens(rng);
  std::uniform_int_distribution<int> g(0, p.generators - 1), coin(0, 1);
  for (int r = rels(rng); r > 0; --r) {
    Word w;
    for (int i = len(rng); i > 0; --i) w.push_back(letter(g(rng), coin(rng)));
    p.relators.push_back(w);
  }
  return p;
}

}  // namespace

TEST_CASE("words") {
  CHECK(letter(0) == 1);
  CHECK(letter(2, true) == -3);
  CHECK(generator_of(-3) == 2);
  CHECK(free_reduce(word({1, 2, -2, -1, 3})) == word({3}));
  CHECK(free_reduce(word({1, -1})).empty());
}

TEST_CASE("formatting") {
  Presentation p{2, {word({1, -2}), word({2, 2, 2}), {}}};
  CHECK(format_presentation(p) == "<a0, a1 | a0 a1^-1, a1 a1 a1, 1>");
  CHECK(format_presentation(Presentation{}) == "<| >");
}

TEST_CASE("simplification of small presentations") {
  SUBCASE("generators killed in turn") {
    auto s = tietze_simplify({2, {word({1}), word({2, 1})}});
    CHECK(is_trivially_presented(s));
    CHECK(s.relators.empty());
  }
  SUBCASE("cyclic group keeps its generator") {
    auto s = tietze_simplify({1, {word({1, 1, 1}), word({1, 1, 1, 1, 1, 1})}});
    CHECK(s.generators == 1);
    CHECK(format_group(abelianization(s)) == "Z/3");
  }
  SUBCASE("conjugate of a killed generator leaves a free factor") {
    auto s = tietze_simplify({2, {word({1}), word({2, 1, -2})}});
    CHECK(s.generators == 1);
    CHECK(s.relators.empty());
  }
  SUBCASE("free group is untouched") {
    auto s = tietze_simplify({2, {}});
    CHECK(s.generators == 2);
    CHECK(format_group(abelianization(s)) == "Z^2");
  }
  SUBCASE("relators that agree up to rotation and inversion collapse") {
    auto s = tietze_simplify({2, {word({1, 2, -1, -2}), word({2, -1, -2, 1}), word({2, 1, -2, -1})}});
    CHECK(s.relators.size() == 1);
  }
  CHECK_THROWS_AS(tietze_simplify({1, {}}, 0), std::invalid_argument);
}

TEST_CASE("simplification preserves the abelianization") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_presentation(rng);
    auto s = tietze_simplify(p);
    CAPTURE(format_presentation(p));
    CHECK(abelianization(p) == abelianization(s));
    CHECK(s.generators <= p.generators);
  }
}

TEST_CASE("CP2 fundamental group") {
  const auto& qc = fixtures::cp2();
  auto p = presentation(qc);
  CHECK(p.generators == 42);
  CHECK(p.relators.size() == 134);
  CHECK(abelianization(p).is_zero());
  auto s = tietze_simplify(p);
  CHECK(is_trivially_presented(s));
  CHECK(format_presentation(s) == "<| >");
}

TEST_CASE("abelianized presentation matches first homology") {
  auto s4 = presentation(build_quotient(fixtures::double_simplex()));
  CHECK(s4.generators == 10 - 4);
  CHECK(s4.relators.size() == 10);
  CHECK(is_trivially_presented(tietze_simplify(s4)));

  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto qc = build_quotient(fixtures::random_table(rng, 2 + 2 * (trial % 4)));
    if (!is_connected(qc)) continue;
    auto h = homology(qc);
    auto ab = abelianization(tietze_simplify(presentation(qc)));
    CHECK(ab == h[1]);
  }
}
