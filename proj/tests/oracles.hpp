// Independent brute-force reference implementations used to validate the
// library. Everything here is deliberately naive (quadratic or worse) and
// shares no code with the library beyond the Word/Alphabet value types.
#ifndef THUE_TEST_ORACLES_HPP
#define THUE_TEST_ORACLES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "thue/system.hpp"
#include "thue/word.hpp"

namespace oracle {

using thue::Alphabet;
using thue::Equation;
using thue::EquationSystem;
using thue::Mode;
using thue::Symbol;
using thue::Word;

// Naive substring scan, overlapping occurrences included.
inline std::vector<std::size_t> occurrences(const Word& hay, const Word& needle) {
  std::vector<std::size_t> out;
  if (needle.empty() || needle.size() > hay.size()) return out;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < needle.size(); ++j)
      if (hay[i + j] != needle[j]) { hit = false; break; }
    if (hit) out.push_back(i);
  }
  return out;
}

// Quadratic border enumeration: every non-empty proper prefix compared
// against the same-length suffix, longest first.
inline std::vector<Word> borders(const Word& w) {
  std::vector<Word> out;
  for (std::size_t len = w.size() - 1; len >= 1; --len) {
    Word pre = thue::slice(w, 0, len);
    Word suf = thue::slice(w, w.size() - len, w.size());
    if (pre == suf) out.push_back(pre);
    if (len == 1) break;
  }
  return out;
}

// Primitive root by trying every divisor of |w| in increasing order.
inline std::pair<Word, std::size_t> primitive_root(const Word& w) {
  for (std::size_t d = 1; d <= w.size(); ++d) {
    if (w.size() % d != 0) continue;
    Word cand = thue::slice(w, 0, d);
    if (thue::repeat(cand, w.size() / d) == w) return {cand, w.size() / d};
  }
  return {w, 1};  // unreachable: d = |w| always matches
}

inline bool commutes(const Word& x, const Word& y) {
  return thue::concat(x, y) == thue::concat(y, x);
}

// All binary words of length exactly n (alphabet size k).
inline std::vector<Word> all_words(std::size_t n, std::size_t k) {
  std::vector<Word> out;
  Word w(n, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == k - 1) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  if (n == 0) out.assign(1, Word{});
  return out;
}

// One-step neighbours by literal splice, both directions.
inline std::set<Word> neighbours(const Word& w, const EquationSystem& sys) {
  std::set<Word> out;
  auto splice = [&](const Word& from, const Word& to) {
    for (std::size_t pos : occurrences(w, from)) {
      Word r = thue::slice(w, 0, pos);
      r.insert(r.end(), to.begin(), to.end());
      Word tail = thue::slice(w, pos + from.size(), w.size());
      r.insert(r.end(), tail.begin(), tail.end());
      out.insert(r);
    }
  };
  for (const auto& eq : sys.equations) {
    splice(eq.lhs, eq.rhs);
    if (sys.mode == Mode::bidirectional) splice(eq.rhs, eq.lhs);
  }
  return out;
}

// Full equivalence closure of {start} restricted to words of length ≤ cap.
inline std::set<Word> closure(const Word& start, const EquationSystem& sys, std::size_t cap) {
  std::set<Word> seen{start};
  std::vector<Word> frontier{start};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (const Word& v : neighbours(w, sys))
        if (v.size() <= cap && seen.insert(v).second) next.push_back(v);
    frontier = std::move(next);
  }
  return seen;
}

// Deterministic random generators shared by the property tests.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng);
  }
  Word word(std::size_t len, std::size_t k) {
    Word w(len);
    for (auto& s : w) s = static_cast<Symbol>(below(k));
    return w;
  }
};

}  // namespace oracle

#endif
