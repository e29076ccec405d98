#include "thue/rewrite.hpp"

#include <algorithm>

#include "thue/overlap.hpp"
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace thue {

namespace {

// Reconstructs a derivation from BFS parent pointers.
Derivation extract_witness(const Word& start, const Word& goal,
                           const std::map<Word, std::pair<Word, Step>>& parent) {
  std::vector<Step> steps;
  Word cur = goal;
  while (cur != start) {
    const auto& [pred, st] = parent.at(cur);
    steps.push_back(st);
    cur = pred;
  }
  std::reverse(steps.begin(), steps.end());
  return {start, steps, goal};
}

}  // namespace

std::vector<std::pair<Word, Step>> similar_steps(const Word& w, const EquationSystem& sys) {
  if (w.empty()) throw input_error("similar_steps: empty word");
  std::vector<std::pair<Word, Step>> out;
  for (std::size_t k = 0; k < sys.equations.size(); ++k) {
    const Equation& eq = sys.equations[k];
    for (std::size_t pos = 0; pos + eq.lhs.size() <= w.size(); ++pos) {
      if (std::equal(eq.lhs.begin(), eq.lhs.end(),
                     w.begin() + static_cast<std::ptrdiff_t>(pos))) {
        Step st{k, Direction::forward, pos};
        out.emplace_back(apply_step(w, sys, st), st);
      }
    }
    if (sys.mode == Mode::forward_only) continue;
    for (std::size_t pos = 0; pos + eq.rhs.size() <= w.size(); ++pos) {
      if (std::equal(eq.rhs.begin(), eq.rhs.end(),
                     w.begin() + static_cast<std::ptrdiff_t>(pos))) {
        Step st{k, Direction::backward, pos};
        out.emplace_back(apply_step(w, sys, st), st);
      }
    }
  }
  return out;
}

DecisionOutcome decide_fixed_length(const Word& p, const Word& q, const EquationSystem& sys) {
  sys.validate();
  if (!sys.length_preserving())
    throw input_error("decide_fixed_length: system is not length-preserving");
  DecisionOutcome out;
  out.budget.max_length_reached = p.size();
  if (p.size() != q.size()) {
    out.verdict = Verdict::not_equivalent;
    return out;
  }
  std::map<Word, std::pair<Word, Step>> parent;
  std::set<Word> seen{p};
  std::deque<Word> frontier{p};
  while (!frontier.empty()) {
    Word cur = frontier.front();
    frontier.pop_front();
    ++out.budget.states_explored;
    if (cur == q) {
      out.verdict = Verdict::equivalent;
      out.witness = extract_witness(p, q, parent);
      return out;
    }
    for (const auto& [next, st] : similar_steps(cur, sys)) {
      if (seen.insert(next).second) {
        parent.emplace(next, std::make_pair(cur, st));
        frontier.push_back(next);
      }
    }
  }
  out.verdict = Verdict::not_equivalent;
  return out;
}

std::string OverlapViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::substring:
      os << "word " << a << " occurs inside word " << b << " at position " << where;
      break;
    case Kind::cross_overlap:
      os << "suffix of word " << a << " of length " << where << " is a prefix of word " << b;
      break;
    case Kind::self_border:
      os << "word " << a << " overlaps itself (border of length " << where << ")";
      break;
  }
  return os.str();
}

std::string NonOverlapReport::describe() const {
  if (ok()) return "no overlaps";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.describe();
  }
  return s;
}

NonOverlapReport check_non_overlapping(const std::vector<Word>& lhs_set) {
  if (lhs_set.empty()) throw input_error("check_non_overlapping: empty word list");
  for (const Word& w : lhs_set)
    if (w.empty()) throw input_error("check_non_overlapping: empty word");
  NonOverlapReport rep;
  for (std::size_t a = 0; a < lhs_set.size(); ++a) {
    for (std::size_t b = 0; b < lhs_set.size(); ++b) {
      const Word& wa = lhs_set[a];
      const Word& wb = lhs_set[b];
      if (a != b && wa.size() <= wb.size()) {
        for (std::size_t pos = 0; pos + wa.size() <= wb.size(); ++pos)
          if (std::equal(wa.begin(), wa.end(), wb.begin() + static_cast<std::ptrdiff_t>(pos)))
            rep.violations.push_back({OverlapViolation::Kind::substring, a, b, pos});
      }
      for (std::size_t len = 1; len < wa.size() && len < wb.size(); ++len) {
        if (std::equal(wa.end() - static_cast<std::ptrdiff_t>(len), wa.end(), wb.begin())) {
          auto kind = a == b ? OverlapViolation::Kind::self_border
                             : OverlapViolation::Kind::cross_overlap;
          rep.violations.push_back({kind, a, b, len});
        }
      }
    }
  }
  return rep;
}

std::pair<Word, Derivation> reduce_to_normal_form(const Word& w, const EquationSystem& sys,
                                                  const Strategy& strategy) {
  sys.validate();
  if (sys.mode != Mode::forward_only)
    throw input_error("reduce_to_normal_form: system must be forward-only");
  if (!sys.length_decreasing())
    throw input_error("reduce_to_normal_form: every rule must strictly shrink");
  std::mt19937_64 rng(strategy.seed);
  Word cur = w;
  Derivation d = trivial_derivation(w);
  for (;;) {
    // Redexes sorted by (position, rule) so the strategies are deterministic.
    std::vector<std::pair<std::size_t, std::size_t>> redexes;  // (pos, rule)
    for (std::size_t k = 0; k < sys.equations.size(); ++k)
      for (std::size_t pos : find_occurrences(cur, sys.equations[k].lhs))
        redexes.emplace_back(pos, k);
    if (redexes.empty()) break;
    std::sort(redexes.begin(), redexes.end());
    std::size_t pick = 0;
    switch (strategy.kind) {
      case Strategy::Kind::leftmost:
        pick = 0;
        break;
      case Strategy::Kind::rightmost: {
        // Largest position; smallest rule index among those.
        std::size_t maxpos = redexes.back().first;
        pick = static_cast<std::size_t>(
            std::find_if(redexes.begin(), redexes.end(),
                         [&](const auto& r) { return r.first == maxpos; }) -
            redexes.begin());
        break;
      }
      case Strategy::Kind::randomized:
        pick = std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng);
        break;
    }
    Step st{redexes[pick].second, Direction::forward, redexes[pick].first};
    cur = apply_step(cur, sys, st);
    d.steps.push_back(st);
  }
  d.end = cur;
  return {cur, d};
}

DecisionOutcome decide_reducing(const Word& p, const Word& q, const EquationSystem& sys) {
  std::vector<Word> lhs_set;
  for (const auto& eq : sys.equations) lhs_set.push_back(eq.lhs);
  auto rep = check_non_overlapping(lhs_set);
  if (!rep.ok())
    throw input_error("decide_reducing: left sides overlap: " + rep.describe());
  auto [nfp, dp] = reduce_to_normal_form(p, sys, Strategy::leftmost());
  auto [nfq, dq] = reduce_to_normal_form(q, sys, Strategy::leftmost());
  DecisionOutcome out;
  out.budget.states_explored = dp.steps.size() + dq.steps.size();
  out.budget.max_length_reached = std::max(p.size(), q.size());
  if (nfp == nfq) {
    out.verdict = Verdict::equivalent;
    out.witness = compose(dp, invert(dq));
  } else {
    out.verdict = Verdict::not_equivalent;
  }
  return out;
}

namespace {

enum class SearchResult { found, saturated, truncated };

SearchResult bounded_closure(const Word& from, const Word& to, const EquationSystem& sys,
                             const Budget& budget, DecisionOutcome& out) {
  std::map<Word, std::pair<Word, Step>> parent;
  std::set<Word> seen{from};
  std::deque<Word> frontier{from};
  bool truncated = false;
  while (!frontier.empty()) {
    Word cur = frontier.front();
    frontier.pop_front();
    ++out.budget.states_explored;
    out.budget.max_length_reached = std::max(out.budget.max_length_reached, cur.size());
    if (cur == to) {
      out.witness = extract_witness(from, to, parent);
      return SearchResult::found;
    }
    for (const auto& [next, st] : similar_steps(cur, sys)) {
      if (next.size() > budget.max_length || seen.size() >= budget.max_states) {
        truncated = true;
        continue;
      }
      if (seen.insert(next).second) {
        parent.emplace(next, std::make_pair(cur, st));
        frontier.push_back(next);
      }
    }
  }
  return truncated ? SearchResult::truncated : SearchResult::saturated;
}

}  // namespace

DecisionOutcome decide_bounded(const Word& p, const Word& q, const EquationSystem& sys,
                               const Budget& budget) {
  sys.validate();
  DecisionOutcome out;
  if (p.size() > budget.max_length || q.size() > budget.max_length) {
    out.verdict = Verdict::unknown;
    return out;
  }
  SearchResult fwd = bounded_closure(p, q, sys, budget, out);
  if (fwd == SearchResult::found) {
    out.verdict = Verdict::equivalent;
    return out;
  }
  if (fwd == SearchResult::saturated) {
    out.verdict = Verdict::not_equivalent;
    return out;
  }
  // Truncated from p: the search from q may still saturate (or reach p),
  // and running it keeps the verdict independent of argument order.
  SearchResult bwd = bounded_closure(q, p, sys, budget, out);
  if (bwd == SearchResult::found) {
    out.witness = invert(*out.witness);
    out.verdict = Verdict::equivalent;
  } else if (bwd == SearchResult::saturated) {
    out.verdict = Verdict::not_equivalent;
    out.witness.reset();
  } else {
    out.verdict = Verdict::unknown;
    out.witness.reset();
  }
  return out;
}

CancellationReport check_cancellation_condition(const EquationSystem& sys) {
  sys.validate();
  CancellationReport rep;
  CancellationCertificate cert;
  for (const auto& eq : sys.equations)
    cert.entries.push_back({eq.lhs.front(), slice(eq.lhs, 1, eq.lhs.size()),
                            eq.rhs.front(), slice(eq.rhs, 1, eq.rhs.size())});
  for (std::size_t i = 0; i < cert.entries.size(); ++i) {
    for (std::size_t j = 0; j < cert.entries.size(); ++j) {
      if (i != j && cert.entries[i].y == cert.entries[j].y) {
        std::ostringstream os;
        os << "equations " << i << " and " << j << " share right-side initial symbol '"
           << sys.alphabet.name(cert.entries[i].y) << "'";
        rep.violation = os.str();
        return rep;
      }
      if (cert.entries[i].y == cert.entries[j].x) {
        std::ostringstream os;
        os << "right-side initial symbol of equation " << i
           << " equals left-side initial symbol of equation " << j << " ('"
           << sys.alphabet.name(cert.entries[i].y) << "')";
        rep.violation = os.str();
        return rep;
      }
    }
  }
  rep.certificate = std::move(cert);
  return rep;
}

namespace {

// A derivation with all intermediate words materialized.
struct Chain {
  std::vector<Word> words;  // words.size() == steps.size() + 1
  std::vector<Step> steps;
};

Chain to_chain(const Derivation& d, const EquationSystem& sys) {
  return {replay(d, sys), d.steps};
}

Derivation to_derivation(const Chain& c) {
  return {c.words.front(), c.steps, c.words.back()};
}

Chain subchain(const Chain& c, std::size_t i, std::size_t j) {
  Chain r;
  r.words.assign(c.words.begin() + static_cast<std::ptrdiff_t>(i),
                 c.words.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  r.steps.assign(c.steps.begin() + static_cast<std::ptrdiff_t>(i),
                 c.steps.begin() + static_cast<std::ptrdiff_t>(j));
  return r;
}

Chain join(const Chain& a, const Chain& b) {
  if (a.words.back() != b.words.front()) throw input_error("chains do not join");
  Chain r = a;
  r.words.insert(r.words.end(), b.words.begin() + 1, b.words.end());
  r.steps.insert(r.steps.end(), b.steps.begin(), b.steps.end());
  return r;
}

// Drops the shared first symbol of every word; valid only when no step
// touches position 0.
Chain strip_head(const Chain& c) {
  Chain r;
  Symbol head = c.words.front().front();
  for (const Word& w : c.words) {
    if (w.empty() || w.front() != head)
      throw input_error("cancellation: chain does not keep its leading symbol");
    r.words.push_back(slice(w, 1, w.size()));
  }
  for (Step st : c.steps) {
    if (st.pos == 0) throw input_error("cancellation: step at the leading symbol");
    --st.pos;
    r.steps.push_back(st);
  }
  return r;
}

Chain prepend(const Chain& c, const Word& prefix) {
  Chain r;
  for (const Word& w : c.words) r.words.push_back(concat(prefix, w));
  for (Step st : c.steps) {
    st.pos += prefix.size();
    r.steps.push_back(st);
  }
  return r;
}

Chain cancel_one(const Chain& c, const EquationSystem& sys);

// Strips a known common prefix from both ends of a chain, one symbol at
// a time.
Chain cancel_prefix(Chain c, const Word& prefix, const EquationSystem& sys) {
  for (std::size_t i = 0; i < prefix.size(); ++i) c = cancel_one(c, sys);
  return c;
}

// Core of the left-cancellation procedure: both endpoint words start with
// the same symbol z; returns an equally-valid chain between the tails
// whose step count never exceeds the input's.
Chain cancel_one(const Chain& c, const EquationSystem& sys) {
  const std::size_t p = c.steps.size();
  if (c.words.front().empty() || c.words.back().empty() ||
      c.words.front().front() != c.words.back().front())
    throw input_error("cancellation: endpoints disagree on the leading symbol");
  if (p == 0) {
    Chain r;
    r.words.push_back(slice(c.words[0], 1, c.words[0].size()));
    return r;
  }
  // Steps away from position 0 leave the head untouched: peel one step.
  if (c.steps[0].pos != 0) {
    Chain first = subchain(c, 0, 1);
    Chain rest = cancel_one(subchain(c, 1, p), sys);
    Step st = first.steps[0];
    --st.pos;
    Chain r;
    r.words.push_back(slice(first.words[0], 1, first.words[0].size()));
    r.words.push_back(rest.words.front());
    r.steps.push_back(st);
    return join(r, rest);
  }
  const Step& st0 = c.steps[0];
  const Equation& eq = sys.equations[st0.rule];
  if (st0.dir == Direction::forward) {
    // z is the rule's left initial symbol; the head becomes y and, by the
    // initial-symbol condition, only the matching backward application can
    // restore it. Find that first return step.
    std::size_t t = p + 1;
    for (std::size_t i = 2; i <= p; ++i) {
      if (c.steps[i - 1].pos == 0) {
        t = i;
        break;
      }
    }
    if (t > p) throw input_error("cancellation: head never restored after rule application");
    const Step& ret = c.steps[t - 1];
    if (ret.rule != st0.rule || ret.dir != Direction::backward)
      throw input_error("cancellation: unexpected head step");
    Word pk = slice(eq.lhs, 1, eq.lhs.size());
    Word qk = slice(eq.rhs, 1, eq.rhs.size());
    // Inner stretch: all words start with y; strip it, cancel Q, restore P.
    Chain inner = strip_head(subchain(c, 1, t - 1));
    Chain mid = prepend(cancel_prefix(inner, qk, sys), pk);
    Chain rest = cancel_one(subchain(c, t, p), sys);
    return join(mid, rest);
  }
  // Backward application: z is the rule's right initial symbol y. The head
  // becomes x and may bounce among equal-x rules; only the matching forward
  // application can produce y again, so take the last head step.
  std::size_t s = 0;
  for (std::size_t i = p; i >= 2; --i) {
    if (c.steps[i - 1].pos == 0) {
      s = i;
      break;
    }
  }
  if (s == 0) throw input_error("cancellation: head never restored after rule removal");
  const Step& ret = c.steps[s - 1];
  if (ret.rule != st0.rule || ret.dir != Direction::forward)
    throw input_error("cancellation: unexpected head step");
  Word pk = slice(eq.lhs, 1, eq.lhs.size());
  Word qk = slice(eq.rhs, 1, eq.rhs.size());
  // Middle stretch: both ends start with x; recurse, cancel P, restore Q.
  Chain middle = cancel_one(subchain(c, 1, s - 1), sys);
  Chain mid = prepend(cancel_prefix(middle, pk, sys), qk);
  Chain rest = strip_head(subchain(c, s, p));
  return join(mid, rest);
}

}  // namespace

Derivation cancel_left(const Word& c, const Word& m, const Word& d, const Word& n,
                       const EquationSystem& sys, const Derivation& proof,
                       const Derivation& cproof) {
  auto rep = check_cancellation_condition(sys);
  if (!rep.certificate)
    throw input_error("cancel_left: no cancellation certificate: " + rep.violation);
  if (proof.start != concat(c, m) || proof.end != concat(d, n))
    throw input_error("cancel_left: proof endpoints do not match c·m, d·n");
  if (cproof.start != c || cproof.end != d)
    throw input_error("cancel_left: cproof endpoints do not match c, d");
  replay(proof, sys);
  replay(cproof, sys);
  // c·m = d·n = c·n, then cancel the symbols of c one by one.
  Derivation full = compose(proof, embed(invert(cproof), Word{}, n));
  Chain chain = to_chain(full, sys);
  for (std::size_t i = 0; i < c.size(); ++i) chain = cancel_one(chain, sys);
  Derivation out = to_derivation(chain);
  if (out.start != m || out.end != n)
    throw std::logic_error("cancel_left: cancelled derivation has wrong endpoints");
  replay(out, sys);
  return out;
}

bool RotationReport::all_equivalent() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const RotationCheck& c) { return c.verdict == Verdict::equivalent; });
}

RotationReport cyclic_shift_family(const Word& t, const EquationSystem& sys,
                                   const Budget& budget) {
  if (t.empty()) throw input_error("cyclic_shift_family: empty word");
  // Collect the (budget-bounded) equivalence class of t.
  std::set<Word> cls{t};
  std::deque<Word> frontier{t};
  while (!frontier.empty() && cls.size() < budget.max_states) {
    Word cur = frontier.front();
    frontier.pop_front();
    for (const auto& [next, st] : similar_steps(cur, sys)) {
      (void)st;
      if (next.size() > budget.max_length) continue;
      if (cls.size() >= budget.max_states) break;
      if (cls.insert(next).second) frontier.push_back(next);
    }
  }
  RotationReport rep;
  std::set<Word> done;
  for (const Word& src : cls) {
    for (std::size_t k = 0; k < src.size(); ++k) {
      Word rot = concat(slice(src, k, src.size()), slice(src, 0, k));
      if (!done.insert(rot).second) continue;
      auto outcome = decide_bounded(rot, t, sys, budget);
      rep.checks.push_back({src, rot, outcome.verdict});
    }
  }
  return rep;
}

}  // namespace thue
