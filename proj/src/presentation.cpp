#include "orbicheck/presentation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orbicheck {

namespace {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word rotate_word(const Word& w, std::size_t start) {
  Word out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(start + i) % w.size()]);
  return out;
}

// Least rotation of w or its inverse; equal keys mean the relators are the
// same up to conjugation and inversion.
Word canonical_key(const Word& w) {
  Word best = w;
  for (const Word& v : {w, inverse(w)})
    for (std::size_t s = 0; s < v.size(); ++s) best = std::min(best, rotate_word(v, s));
  return best;
}

bool normalize(Presentation& p) {
  std::vector<Word> kept;
  std::set<Word> seen;
  for (auto& r : p.relators) {
    Word w = cyclic_reduce(r);
    if (w.empty()) continue;
    if (!seen.insert(canonical_key(w)).second) continue;
    kept.push_back(std::move(w));
  }
  bool changed = kept != p.relators;
  p.relators = std::move(kept);
  return changed;
}

int occurrences(const Word& w, int generator) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [&](int l) { return generator_of(l) == generator; }));
}

// Removes one generator through a relator in which it occurs exactly once.
bool eliminate_one(Presentation& p) {
  int best_rel = -1;
  std::size_t best_pos = 0;
  for (int r = 0; r < static_cast<int>(p.relators.size()); ++r) {
    const Word& w = p.relators[r];
    if (best_rel >= 0 && w.size() >= p.relators[best_rel].size()) continue;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (occurrences(w, generator_of(w[i])) == 1) {
        best_rel = r;
        best_pos = i;
        break;
      }
  }
  if (best_rel < 0) return false;

  // Rotate so the generator leads: x^e t = 1, hence x = t^-1 (e = 1) or x = t.
  Word rotated = rotate_word(p.relators[best_rel], best_pos);
  const int x = generator_of(rotated.front());
  const bool positive = rotated.front() > 0;
  Word rest(rotated.begin() + 1, rotated.end());
  Word image = positive ? inverse(rest) : rest;
  Word image_inv = inverse(image);

  p.relators.erase(p.relators.begin() + best_rel);
  for (auto& w : p.relators) {
    Word out;
    for (int l : w) {
      if (generator_of(l) == x) {
        const Word& sub = l > 0 ? image : image_inv;
        out.insert(out.end(), sub.begin(), sub.end());
      } else {
        out.push_back(l);
      }
    }
    for (int& l : out) {
      int g = generator_of(l);
      if (g > x) l = l > 0 ? letter(g - 1) : letter(g - 1, true);
    }
    w = cyclic_reduce(std::move(out));
  }
  --p.generators;
  return true;
}

// Replaces a piece of r that is more than half of a rotation of s (or s^-1) by
// the inverse of the rest of that rotation. Returns true if r was shortened.
bool shorten_with(Word& r, const Word& s) {
  const std::size_t len = s.size();
  if (len == 0 || r.empty()) return false;
  for (const Word& base : {s, inverse(s)})
    for (std::size_t rot = 0; rot < len; ++rot) {
      Word q = rotate_word(base, rot);
      for (std::size_t start = 0; start < r.size(); ++start) {
        std::size_t m = 0;
        while (m < len && m < r.size() && r[(start + m) % r.size()] == q[m]) ++m;
        if (2 * m <= len) continue;
        Word tail(q.begin() + static_cast<std::ptrdiff_t>(m), q.end());
        Word out = inverse(tail);
        for (std::size_t i = m; i < r.size(); ++i) out.push_back(r[(start + i) % r.size()]);
        r = cyclic_reduce(std::move(out));
        return true;
      }
    }
  return false;
}

bool shorten_all(Presentation& p) {
  bool changed = false;
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (std::size_t j = 0; j < p.relators.size(); ++j) {
      if (i == j) continue;
      const Word& s = p.relators[j];
      Word& r = p.relators[i];
      if (s.empty() || s.size() > r.size()) continue;
      while (!r.empty() && shorten_with(r, s)) changed = true;
    }
  return changed;
}

}  // namespace

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << '<';
  for (int g = 0; g < p.generators; ++g) os << (g ? ", " : "") << 'a' << g;
  os << (p.generators ? " | " : "| ");
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    if (r) os << ", ";
    if (p.relators[r].empty()) os << '1';
    for (std::size_t i = 0; i < p.relators[r].size(); ++i) {
      int l = p.relators[r][i];
      os << (i ? " " : "") << 'a' << generator_of(l) << (l < 0 ? "^-1" : "");
    }
  }
  os << '>';
  return os.str();
}

Presentation presentation(const QuotientComplex& qc) {
  const int nv = qc.count(0);
  const int ne = qc.count(1);
  if (nv == 0) throw std::invalid_argument("complex has no vertices");

  // Edges are oriented from the -1 end to the +1 end of their boundary.
  std::vector<std::pair<int, int>> ends(static_cast<std::size_t>(ne));
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(nv));
  for (int e = 0; e < ne; ++e) {
    const auto& bd = qc.boundary(1, e);
    if (bd.size() != 2) throw std::invalid_argument("edge boundary must have two terms");
    int tail = bd[0].sign < 0 ? bd[0].face : bd[1].face;
    int head = bd[0].sign < 0 ? bd[1].face : bd[0].face;
    ends[e] = {tail, head};
    incident[tail].push_back(e);
    if (head != tail) incident[head].push_back(e);
  }

  std::vector<bool> visited(static_cast<std::size_t>(nv), false);
  std::vector<bool> tree(static_cast<std::size_t>(ne), false);
  std::deque<int> queue{0};
  visited[0] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int e : incident[v]) {  // ascending edge id
      int other = ends[e].first == v ? ends[e].second : ends[e].first;
      if (visited[other]) continue;
      visited[other] = true;
      tree[e] = true;
      queue.push_back(other);
    }
  }
  if (std::find(visited.begin(), visited.end(), false) != visited.end())
    throw std::invalid_argument("complex is disconnected");

  Presentation p;
  std::vector<int> generator(static_cast<std::size_t>(ne), -1);
  for (int e = 0; e < ne; ++e)
    if (!tree[e]) generator[e] = p.generators++;

  auto edge_letter = [&](const BoundaryTerm& t, Word& w) {
    if (generator[t.face] >= 0) w.push_back(letter(generator[t.face], t.sign < 0));
  };
  for (int t = 0; t < qc.count(2); ++t) {
    const auto& bd = qc.boundary(2, t);
    if (bd.size() != 3) throw std::invalid_argument("triangle boundary must have three terms");
    // Faces are [bc], [ac], [ab]; the loop a -> b -> c -> a reads [ab][bc][ac]^-1.
    Word w;
    edge_letter(bd[2], w);
    edge_letter(bd[0], w);
    edge_letter(bd[1], w);
    p.relators.push_back(free_reduce(std::move(w)));
  }
  return p;
}

Presentation tietze_simplify(Presentation p, int pass_budget) {
  if (pass_budget < 1) throw std::invalid_argument("pass budget must be positive");
  for (int pass = 0; pass < pass_budget; ++pass) {
    bool changed = normalize(p);
    while (eliminate_one(p)) {
      changed = true;
      normalize(p);
    }
    changed = shorten_all(p) || changed;
    if (!changed) break;
  }
  normalize(p);
  return p;
}

bool is_trivially_presented(const Presentation& p) { return p.generators == 0; }

HomologyGroup abelianization(const Presentation& p) {
  IntegerMatrix m(static_cast<int>(p.relators.size()), p.generators);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int l : p.relators[r]) {
      int g = generator_of(l);
      m(static_cast<int>(r), g) = checked_add(m(static_cast<int>(r), g), l > 0 ? 1 : -1);
    }
  auto snf = smith_normal_form(m, false);
  HomologyGroup g;
  g.degree = 1;
  g.free_rank = p.generators - snf.rank;
  for (Integer f : snf.factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

}  // namespace orbicheck
