#include "thue/completion.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "thue/rewrite.hpp"

namespace thue {

namespace {

// Memoized word → lexicographically least member of its fixed-length class.
class ClassCache {
 public:
  explicit ClassCache(const EquationSystem& sys) : sys_(sys) {}

  const Word& canonical(const Word& w) {
    if (w.empty()) return empty_;
    auto it = canon_.find(w);
    if (it != canon_.end()) return it->second;
    auto cls = parallel_closure({w}, sys_);
    const Word& rep = *cls.begin();
    for (const Word& member : cls) canon_.emplace(member, rep);
    return canon_.at(w);
  }

  bool same(const Word& a, const Word& b) { return canonical(a) == canonical(b); }

 private:
  const EquationSystem& sys_;
  std::map<Word, Word> canon_;
  Word empty_;
};

std::pair<Word, Word> canonical_pair(const Word& a, const Word& b) {
  return b < a ? std::make_pair(b, a) : std::make_pair(a, b);
}

}  // namespace

const std::set<Word>& CompletionState::null_sequences() const {
  if (s_layers.empty()) throw input_error("empty completion state");
  return s_layers.back();
}

const EquationSystem& CompletionState::equations() const {
  if (e_layers.empty()) throw input_error("empty completion state");
  return e_layers.back();
}

std::vector<EquationWitness> generate_equation_witnesses(const std::set<Word>& words) {
  if (words.empty()) throw input_error("generate_equations: empty word set");
  const std::size_t len = words.begin()->size();
  for (const Word& w : words)
    if (w.size() != len || w.size() < 2)
      throw input_error("generate_equations: words must share a length of at least 2");
  std::map<std::pair<Word, Word>, EquationWitness> out;
  for (const Word& wp : words) {
    for (const Word& wq : words) {
      for (std::size_t ulen = 1; ulen < len; ++ulen) {
        Word u = slice(wp, len - ulen, len);
        if (!is_prefix(u, wq)) continue;
        Word c = slice(wp, 0, len - ulen);
        Word d = slice(wq, ulen, len);
        if (c == d) continue;
        auto key = canonical_pair(c, d);
        out.emplace(key, EquationWitness{{key.first, key.second}, u, wp, wq});
      }
    }
  }
  std::vector<EquationWitness> res;
  for (auto& [key, w] : out) res.push_back(std::move(w));
  return res;
}

EquationSystem generate_equations(const std::set<Word>& words, const Alphabet& alphabet) {
  EquationSystem sys;
  sys.alphabet = alphabet;
  for (const auto& w : generate_equation_witnesses(words)) sys.equations.push_back(w.eq);
  return sys;
}

std::set<Word> expand_null_sequences(const CompletionState& state) {
  return parallel_closure(state.null_sequences(), state.equations());
}

CompletionState complete(const Word& r, const Alphabet& alphabet) {
  if (r.size() < 2) throw input_error("complete: seed needs at least two symbols");
  CompletionState state;
  state.alphabet = alphabet;
  state.seed = r;
  state.s_layers.push_back({r});
  state.e_layers.push_back(generate_equations({r}, alphabet));
  for (;;) {
    ++state.iterations;
    std::set<Word> next_s = expand_null_sequences(state);
    EquationSystem next_e = generate_equations(next_s, alphabet);
    if (next_s == state.s_layers.back() &&
        next_e.equations == state.e_layers.back().equations) {
      state.fixpoint = true;
      return state;
    }
    state.s_layers.push_back(std::move(next_s));
    state.e_layers.push_back(std::move(next_e));
  }
}

namespace {

std::size_t equation_symbols(const Equation& eq) { return eq.lhs.size() + eq.rhs.size(); }

// True when every delta equation's sides coincide under the subset.
bool derives_all(const std::vector<Equation>& delta, const std::vector<Equation>& subset,
                 const Alphabet& alphabet) {
  EquationSystem sys{alphabet, subset, Mode::bidirectional};
  ClassCache cache(sys);
  for (const Equation& eq : delta)
    if (!cache.same(eq.lhs, eq.rhs)) return false;
  return true;
}

std::vector<Equation> pick(const std::vector<Equation>& delta,
                           const std::vector<std::size_t>& idx) {
  std::vector<Equation> out;
  for (std::size_t i : idx) out.push_back(delta[i]);
  return out;
}

}  // namespace

MinimizedSystem minimize(const CompletionState& state) {
  if (!state.fixpoint) throw input_error("minimize: completion state is not at fixpoint");
  const std::vector<Equation>& delta = state.equations().equations;
  const Alphabet& alphabet = state.alphabet;
  MinimizedSystem ms;
  std::vector<Equation> chosen;
  bool found = false;
  if (delta.size() <= 20) {
    // Exhaustive: smallest cardinality first, subsets in index order.
    for (std::size_t k = 0; k <= delta.size() && !found; ++k) {
      std::vector<std::size_t> idx(k);
      for (std::size_t i = 0; i < k; ++i) idx[i] = i;
      for (;;) {
        auto subset = pick(delta, idx);
        if (derives_all(delta, subset, alphabet)) {
          chosen = subset;
          found = true;
          break;
        }
        // next combination
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == delta.size() - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  } else {
    // Greedy: drop the largest equations first while everything stays
    // derivable. Not a certified minimum.
    ms.certified_minimum = false;
    chosen = delta;
    std::vector<Equation> order = delta;
    std::sort(order.begin(), order.end(), [](const Equation& a, const Equation& b) {
      auto sa = equation_symbols(a), sb = equation_symbols(b);
      if (sa != sb) return sa > sb;
      return std::tie(a.lhs, a.rhs) < std::tie(b.lhs, b.rhs);
    });
    for (const Equation& cand : order) {
      std::vector<Equation> without;
      for (const Equation& e : chosen)
        if (!(e == cand)) without.push_back(e);
      if (without.size() != chosen.size() && derives_all(delta, without, alphabet))
        chosen = without;
    }
    found = true;
  }
  if (!found) throw std::logic_error("minimize: no derivable subset found");

  // Prefer equations with fewer symbols: try swapping each member for a
  // smaller delta equation, keeping full derivability.
  std::vector<Equation> candidates = delta;
  std::sort(candidates.begin(), candidates.end(), [](const Equation& a, const Equation& b) {
    auto sa = equation_symbols(a), sb = equation_symbols(b);
    if (sa != sb) return sa < sb;
    return std::tie(a.lhs, a.rhs) < std::tie(b.lhs, b.rhs);
  });
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < chosen.size() && !improved; ++i) {
      for (const Equation& cand : candidates) {
        if (equation_symbols(cand) >= equation_symbols(chosen[i])) break;
        if (std::find(chosen.begin(), chosen.end(), cand) != chosen.end()) continue;
        std::vector<Equation> swapped = chosen;
        swapped[i] = cand;
        if (derives_all(delta, swapped, alphabet)) {
          chosen = swapped;
          improved = true;
          break;
        }
      }
    }
  }

  // Independence sweep: drop any member derivable from the others.
  for (bool removed = true; removed;) {
    removed = false;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      std::vector<Equation> without = chosen;
      without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
      if (derives_all(delta, without, alphabet)) {
        chosen = without;
        removed = true;
        break;
      }
    }
  }

  std::sort(chosen.begin(), chosen.end(), [](const Equation& a, const Equation& b) {
    return std::tie(a.lhs, a.rhs) < std::tie(b.lhs, b.rhs);
  });
  ms.epsilon = {alphabet, chosen, Mode::bidirectional};
  for (const Equation& eq : delta) {
    if (std::find(chosen.begin(), chosen.end(), eq) != chosen.end()) continue;
    auto outcome = decide_fixed_length(eq.lhs, eq.rhs, ms.epsilon);
    if (outcome.verdict != Verdict::equivalent || !outcome.witness)
      throw std::logic_error("minimize: dropped equation lost its derivation");
    ms.provenance.emplace_back(eq, *outcome.witness);
  }
  return ms;
}

bool EpsilonTheoremReport::all_pass() const {
  return no_prefix_residual.pass && no_border_prefix.pass && commutation.pass &&
         nm_decomposition.pass;
}

EpsilonTheoremReport verify_epsilon_theorems(const MinimizedSystem& ms,
                                             const CompletionState& state) {
  EpsilonTheoremReport rep;
  const std::set<Word>& gamma = state.null_sequences();
  const EquationSystem& delta = state.equations();
  const Alphabet& alpha = state.alphabet;
  auto fmt = [&](const Word& w) { return alpha.format(w); };

  auto prefixes_gamma = [&](const Word& x) {
    return std::any_of(gamma.begin(), gamma.end(),
                       [&](const Word& g) { return is_prefix(x, g); });
  };
  auto suffixes_gamma = [&](const Word& x) {
    return std::any_of(gamma.begin(), gamma.end(),
                       [&](const Word& g) { return is_suffix(x, g); });
  };

  for (const Equation& eq : ms.epsilon.equations) {
    std::size_t common = 0;
    while (common < eq.lhs.size() && common < eq.rhs.size() &&
           eq.lhs[common] == eq.rhs[common])
      ++common;
    for (std::size_t t = 1; t <= common; ++t) {
      Word x = slice(eq.lhs, t, eq.lhs.size());
      Word y = slice(eq.rhs, t, eq.rhs.size());
      if (rep.no_prefix_residual.pass && (prefixes_gamma(x) || prefixes_gamma(y))) {
        rep.no_prefix_residual.pass = false;
        rep.no_prefix_residual.counterexample =
            fmt(eq.lhs) + " = " + fmt(eq.rhs) + " with residual starting a null sequence";
      }
      Word s = slice(eq.lhs, 0, t);
      if (rep.no_border_prefix.pass && suffixes_gamma(s)) {
        rep.no_border_prefix.pass = false;
        rep.no_border_prefix.counterexample =
            fmt(eq.lhs) + " = " + fmt(eq.rhs) + " with shared prefix '" + fmt(s) +
            "' ending a null sequence";
      }
    }
  }

  ClassCache cache(delta);
  auto commutes = [&](const Word& w, const Word& r) {
    return cache.same(concat(w, r), concat(r, w));
  };

  for (const auto& ew : generate_equation_witnesses(gamma)) {
    for (const Word& r : gamma) {
      if (commutes(ew.eq.lhs, r) && commutes(ew.eq.rhs, r) && commutes(ew.u, r)) continue;
      rep.commutation.pass = false;
      rep.commutation.counterexample = fmt(ew.eq.lhs) + " = " + fmt(ew.eq.rhs) +
                                       " fails to commute with " + fmt(r);
      break;
    }
    if (!rep.commutation.pass) break;
  }

  for (const Equation& eq : delta.equations) {
    for (const Word* side : {&eq.lhs, &eq.rhs}) {
      for (std::size_t cut = 1; cut < side->size(); ++cut) {
        Word n = slice(*side, 0, cut);
        Word m = slice(*side, cut, side->size());
        if (!prefixes_gamma(m)) continue;
        for (const Word& r : gamma) {
          if (commutes(n, r) && commutes(m, r)) continue;
          rep.nm_decomposition.pass = false;
          rep.nm_decomposition.counterexample =
              "split " + fmt(n) + " | " + fmt(m) + " of side " + fmt(*side) +
              " fails to commute with " + fmt(r);
          break;
        }
        if (!rep.nm_decomposition.pass) break;
      }
      if (!rep.nm_decomposition.pass) break;
    }
    if (!rep.nm_decomposition.pass) break;
  }
  return rep;
}

InsertionOverlapCase classify_insertion_overlap(const Word& r_x, const Word& r_y,
                                                const Word& r_z, const Word& r_mu,
                                                const Word& a, const Word& b, const Word& c,
                                                const Word& d, const Word& u,
                                                const CompletionState& state) {
  const std::set<Word>& gamma = state.null_sequences();
  for (const Word* w : {&r_x, &r_y, &r_z, &r_mu})
    if (!gamma.count(*w))
      throw input_error("classify_insertion_overlap: word outside the null-sequence system");
  if (concat(a, b) != r_x || concat(c, d) != r_y)
    throw input_error("classify_insertion_overlap: splits do not reproduce their words");
  const std::size_t big_l = r_x.size();
  InsertionOverlapCase ic;
  ic.m = concat(a, concat(r_z, b));
  ic.n = concat(c, concat(r_mu, d));
  if (u.empty() || u.size() >= 2 * big_l)
    throw input_error("classify_insertion_overlap: overlap leaves no C or D");
  if (!is_suffix(u, ic.m) || !is_prefix(u, ic.n))
    throw input_error("classify_insertion_overlap: u is not a shared part of M and N");
  ic.u = u;
  ic.cw = slice(ic.m, 0, ic.m.size() - u.size());
  ic.dw = slice(ic.n, u.size(), ic.n.size());

  const std::size_t s = ic.cw.size();
  const std::size_t zs = a.size(), ze = zs + big_l;
  const std::size_t ms = s + c.size(), me = ms + big_l;
  const std::size_t end_m = 2 * big_l;
  Word joined = concat(ic.cw, ic.n);
  if (concat(ic.m, ic.dw) != joined)
    throw std::logic_error("classify_insertion_overlap: inconsistent join");
  auto cut = [&](std::size_t lo, std::size_t hi) {
    return slice(joined, lo, std::max(lo, hi));
  };

  if (s <= zs) {
    if (me <= end_m)
      ic.id = ms >= zs ? 1 : 3;
    else
      ic.id = 2;
  } else if (s < ze) {
    if (ms >= end_m)
      ic.id = 6;
    else
      ic.id = ms < ze ? 4 : 5;
  } else {
    ic.id = ms < end_m ? 7 : 8;
  }

  switch (ic.id) {
    case 1:
      ic.bindings = {{"e", cut(s, zs)}, {"f", cut(zs, ms)}, {"g", cut(ms, ze)},
                     {"h", cut(ze, me)}, {"i", cut(me, end_m)}};
      break;
    case 2:
      ic.bindings = {{"e", cut(s, zs)}, {"f", cut(zs, ms)}, {"g", cut(ms, ze)},
                     {"h", cut(end_m, me)}};
      break;
    case 3:
      ic.bindings = {{"e", cut(ms, zs)}, {"f", cut(zs, me)}, {"g", cut(me, ze)}};
      break;
    case 4:
      ic.bindings = {{"e", cut(zs, s)}, {"f", cut(ms, ze)}, {"g", cut(end_m, me)}};
      break;
    case 5:
      ic.bindings = {{"e", cut(zs, s)}, {"f", cut(s, ze)}, {"g", cut(ze, ms)},
                     {"h", cut(ms, end_m)}, {"i", cut(end_m, me)}};
      break;
    case 6:
      ic.bindings = {{"e", cut(zs, s)}, {"f", cut(s, ze)}, {"g", cut(end_m, ms)}};
      break;
    case 7:
      ic.bindings = {{"e", cut(ze, s)}, {"f", cut(ms, end_m)}, {"g", cut(end_m, me)}};
      break;
    case 8:
      ic.bindings = {{"e", cut(ze, s)}, {"f", cut(s, end_m)}, {"g", cut(end_m, ms)}};
      break;
  }

  ClassCache cache(state.equations());
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("classify_insertion_overlap: ") + what);
  };
  if (ic.id <= 5) {
    ic.lhs = ic.cw;
    ic.rhs = ic.dw;
    require(cache.same(ic.cw, ic.dw), "C = D not derivable");
  } else if (ic.id == 6) {
    Word g = cut(end_m, ms);
    require(ic.dw == concat(g, concat(r_mu, d)), "case 6 layout mismatch");
    require(cache.same(ic.cw, concat(r_x, concat(g, d))), "case 6 reduction not derivable");
    ic.via_removal = true;
    ic.lhs = ic.rhs = concat(g, d);
  } else if (ic.id == 7) {
    Word e = cut(ze, s);
    require(ic.cw == concat(a, concat(r_z, e)), "case 7 layout mismatch");
    require(cache.same(ic.dw, concat(a, concat(e, r_y))), "case 7 reduction not derivable");
    ic.via_removal = true;
    ic.lhs = ic.rhs = concat(a, e);
  } else {
    Word e = cut(ze, s);
    Word g = cut(end_m, ms);
    require(ic.cw == concat(a, concat(r_z, e)), "case 8 layout mismatch");
    require(ic.dw == concat(g, concat(r_mu, d)), "case 8 layout mismatch");
    ic.via_removal = true;
    ic.lhs = concat(a, e);
    ic.rhs = concat(g, d);
    require(cache.same(ic.lhs, ic.rhs), "case 8 conclusion not derivable");
  }
  return ic;
}

}  // namespace thue
