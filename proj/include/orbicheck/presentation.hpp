#pragma once

#include <string>
#include <vector>

#include "orbicheck/homology.hpp"
#include "orbicheck/quotient.hpp"

namespace orbicheck {

/// A letter is a generator index g encoded as g+1, its inverse as -(g+1).
using Word = std::vector<int>;

inline int letter(int generator, bool inverse = false) { return inverse ? -(generator + 1) : generator + 1; }
inline int generator_of(int letter) { return (letter > 0 ? letter : -letter) - 1; }

struct Presentation {
  int generators = 0;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// `<a0, a1 | a0 a1^-1, a1 a1 a1>`
std::string format_presentation(const Presentation& p);

/// Presentation of the fundamental group from the 2-skeleton. The spanning
/// tree is breadth-first from vertex class 0 scanning edges in class order;
/// generators are the remaining edges in class order and every triangle class
/// gives one relator (possibly empty). Throws std::invalid_argument for a
/// disconnected complex.
Presentation presentation(const QuotientComplex& qc);

inline constexpr int kDefaultPassBudget = 100;

/// Deterministic Tietze simplification. Each sweep applies, in order: free
/// and cyclic reduction with removal of empty or repeated relators, generator
/// elimination through relators where a generator occurs once, and
/// substitution of shorter relators into longer ones. Stops at a fixpoint or
/// after `pass_budget` sweeps.
Presentation tietze_simplify(Presentation p, int pass_budget = kDefaultPassBudget);

bool is_trivially_presented(const Presentation& p);

/// Abelianization as an abelian group (relator exponent-sum matrix, reduced).
HomologyGroup abelianization(const Presentation& p);

/// Free reduction of a linear word.
Word free_reduce(Word w);

}  // namespace orbicheck
