#include "thue/nullseq.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "thue/overlap.hpp"

namespace thue {

void NullSystem::validate() const {
  if (r.empty()) throw input_error("null sequence must be non-empty");
  for (Symbol s : r)
    if (s >= alphabet.size()) throw input_error("null sequence symbol outside alphabet");
  eqs.validate();
  for (const auto& eq : eqs.equations) {
    if (eq.lhs.size() != eq.rhs.size())
      throw input_error("null-system equation changes length");
    std::map<Symbol, int> count;
    for (Symbol s : eq.lhs) ++count[s];
    for (Symbol s : eq.rhs) --count[s];
    for (const auto& [sym, n] : count)
      if (n != 0) throw input_error("null-system equation changes symbol counts");
  }
}

std::vector<NullStep> similar_null(const Word& w, const Word& r, std::size_t max_len) {
  if (r.empty()) throw input_error("similar_null: empty null sequence");
  std::vector<NullStep> out;
  if (!w.empty()) {
    for (std::size_t pos : find_occurrences(w, r)) {
      Word res = slice(w, 0, pos);
      Word tail = slice(w, pos + r.size(), w.size());
      res.insert(res.end(), tail.begin(), tail.end());
      out.push_back({std::move(res), pos, NullMove::erase});
    }
  }
  if (w.size() + r.size() <= max_len) {
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
      Word res = slice(w, 0, pos);
      res.insert(res.end(), r.begin(), r.end());
      Word tail = slice(w, pos, w.size());
      res.insert(res.end(), tail.begin(), tail.end());
      out.push_back({std::move(res), pos, NullMove::insert});
    }
  }
  return out;
}

DecisionOutcome parallel(const Word& p, const Word& q, const NullSystem& ns) {
  return decide_fixed_length(p, q, ns.eqs);
}

bool CompleteReport::complete() const {
  return !entries.empty() &&
         std::all_of(entries.begin(), entries.end(),
                     [](const Entry& e) { return e.verdict == Verdict::equivalent; });
}

std::vector<Symbol> CompleteReport::failing() const {
  std::vector<Symbol> out;
  for (const auto& e : entries)
    if (e.verdict != Verdict::equivalent) out.push_back(e.z);
  return out;
}

CompleteReport check_complete(const NullSystem& ns) {
  ns.validate();
  CompleteReport rep;
  for (std::size_t z = 0; z < ns.alphabet.size(); ++z) {
    Word zw{static_cast<Symbol>(z)};
    auto outcome = parallel(concat(zw, ns.r), concat(ns.r, zw), ns);
    rep.entries.push_back({static_cast<Symbol>(z), outcome.verdict, outcome.witness});
  }
  return rep;
}

std::set<Word> parallel_closure(const std::set<Word>& seed, const EquationSystem& sys) {
  std::set<Word> cls = seed;
  std::deque<Word> frontier(seed.begin(), seed.end());
  while (!frontier.empty()) {
    Word cur = frontier.front();
    frontier.pop_front();
    for (const auto& [next, st] : similar_steps(cur, sys)) {
      (void)st;
      if (cls.insert(next).second) frontier.push_back(next);
    }
  }
  return cls;
}

namespace {

// Memoized map word → lexicographically least member of its ∥-class.
class ClassCache {
 public:
  explicit ClassCache(const EquationSystem& sys) : sys_(sys) {}

  const Word& canonical(const Word& w) {
    auto it = canon_.find(w);
    if (it != canon_.end()) return it->second;
    auto cls = parallel_closure({w}, sys_);
    const Word& rep = *cls.begin();
    for (const Word& member : cls) canon_.emplace(member, rep);
    return canon_.at(w);
  }

 private:
  const EquationSystem& sys_;
  std::map<Word, Word> canon_;
};

// All words of the given length over the alphabet, lexicographic.
void enumerate_words(std::size_t alpha_size, std::size_t len,
                     const std::function<void(const Word&)>& fn) {
  Word w(len, 0);
  for (;;) {
    fn(w);
    std::size_t i = len;
    while (i > 0 && w[i - 1] + 1u == alpha_size) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
}

}  // namespace

PerfectBoundedResult check_perfect_bounded(const NullSystem& ns, std::size_t max_len) {
  ns.validate();
  if (max_len < ns.r.size() + 1)
    throw input_error("check_perfect_bounded: bound must exceed |r|");
  PerfectBoundedResult res;
  ClassCache cache(ns.eqs);
  for (std::size_t len = 1; len + ns.r.size() <= max_len; ++len) {
    // Group the words A of this length by the ∥-class of r·A; within a
    // group every pair satisfies rA ∥ rB, so all must share an A-class.
    std::map<Word, std::pair<Word, Word>> groups;  // canon(rA) → (A, canon(A))
    bool failed = false;
    enumerate_words(ns.alphabet.size(), len, [&](const Word& a) {
      if (failed) return;
      ++res.words_checked;
      Word ra_canon = cache.canonical(concat(ns.r, a));
      Word a_canon = cache.canonical(a);
      auto [it, fresh] = groups.emplace(ra_canon, std::make_pair(a, a_canon));
      if (!fresh && it->second.second != a_canon) {
        res.counterexample = {it->second.first, a};
        failed = true;
      }
    });
    if (failed) return res;
  }
  res.pass = true;
  return res;
}

std::optional<CancellationCertificate> check_perfect_syntactic(const NullSystem& ns) {
  ns.validate();
  return check_cancellation_condition(ns.eqs).certificate;
}

std::set<Word> IrreducibleSystem::terminal(const Word& r) const {
  std::set<Word> out;
  if (layers.empty()) return out;
  for (const Word& w : layers.back())
    if (find_occurrences(w, r).empty()) out.insert(w);
  return out;
}

IrreducibleSystem irreducible_system(const Word& s, const NullSystem& ns, std::size_t max_len) {
  ns.validate();
  if (s.empty()) throw input_error("irreducible_system: empty word");
  auto complete_rep = check_complete(ns);
  if (!complete_rep.complete())
    throw input_error("irreducible_system: system is not complete");
  if (!check_perfect_syntactic(ns)) {
    std::size_t bound = std::max({max_len, s.size(), ns.r.size() + 1});
    auto perfect = check_perfect_bounded(ns, bound);
    if (!perfect.pass)
      throw input_error("irreducible_system: system is not perfect up to the required bound");
  }
  IrreducibleSystem sys;
  std::set<Word> layer = parallel_closure({s}, ns.eqs);
  sys.layers.push_back(layer);
  for (;;) {
    std::set<Word> next;
    bool any_occurrence = false;
    for (const Word& w : layer) {
      for (const auto& step : similar_null(w, ns.r, /*max_len=*/0)) {
        if (step.move != NullMove::erase) continue;
        any_occurrence = true;
        if (step.result.empty())
          sys.empty_marker = true;
        else
          next.insert(step.result);
      }
    }
    if (!any_occurrence || next.empty()) break;
    layer = parallel_closure(next, ns.eqs);
    sys.layers.push_back(layer);
  }
  return sys;
}

DecisionOutcome decide_problem_two(const Word& p, const Word& q, const NullSystem& ns,
                                   std::size_t max_len) {
  auto ip = irreducible_system(p, ns, max_len);
  auto iq = irreducible_system(q, ns, max_len);
  DecisionOutcome out;
  bool same = ip.terminal(ns.r) == iq.terminal(ns.r) && ip.empty_marker == iq.empty_marker;
  out.verdict = same ? Verdict::equivalent : Verdict::not_equivalent;
  out.budget.max_length_reached = std::max(p.size(), q.size());
  return out;
}

std::vector<Equation> overlap_equation(const Word& r) {
  if (r.size() < 2) throw input_error("overlap_equation: need at least two symbols");
  std::vector<Equation> out;
  for (const Word& u : borders(r))
    out.push_back({slice(r, 0, r.size() - u.size()), slice(r, u.size(), r.size())});
  return out;
}

}  // namespace thue
