#include "thue/system.hpp"

#include <algorithm>

namespace thue {

void EquationSystem::validate() const {
  for (const auto& eq : equations) {
    if (eq.lhs.empty() || eq.rhs.empty()) throw input_error("equation with an empty side");
    for (Symbol s : eq.lhs)
      if (s >= alphabet.size()) throw input_error("equation symbol outside alphabet");
    for (Symbol s : eq.rhs)
      if (s >= alphabet.size()) throw input_error("equation symbol outside alphabet");
  }
}

bool EquationSystem::length_preserving() const {
  return std::all_of(equations.begin(), equations.end(),
                     [](const Equation& e) { return e.lhs.size() == e.rhs.size(); });
}

bool EquationSystem::length_decreasing() const {
  return std::all_of(equations.begin(), equations.end(),
                     [](const Equation& e) { return e.lhs.size() > e.rhs.size(); });
}

Word apply_step(const Word& w, const EquationSystem& sys, const Step& st) {
  if (st.rule >= sys.equations.size()) throw input_error("step references unknown rule");
  const Equation& eq = sys.equations[st.rule];
  const Word& from = st.dir == Direction::forward ? eq.lhs : eq.rhs;
  const Word& to = st.dir == Direction::forward ? eq.rhs : eq.lhs;
  if (st.pos + from.size() > w.size() ||
      !std::equal(from.begin(), from.end(), w.begin() + static_cast<std::ptrdiff_t>(st.pos)))
    throw input_error("step does not match at its position");
  Word out = slice(w, 0, st.pos);
  out.insert(out.end(), to.begin(), to.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(st.pos + from.size()), w.end());
  return out;
}

std::vector<Word> replay(const Derivation& d, const EquationSystem& sys) {
  std::vector<Word> chain{d.start};
  for (const Step& st : d.steps) chain.push_back(apply_step(chain.back(), sys, st));
  if (chain.back() != d.end) throw input_error("derivation does not reach its recorded end");
  return chain;
}

Derivation trivial_derivation(const Word& w) { return {w, {}, w}; }

Derivation compose(const Derivation& a, const Derivation& b) {
  if (a.end != b.start) throw input_error("derivations do not compose");
  Derivation r{a.start, a.steps, b.end};
  r.steps.insert(r.steps.end(), b.steps.begin(), b.steps.end());
  return r;
}

Derivation invert(const Derivation& d) {
  Derivation r{d.end, {}, d.start};
  for (auto it = d.steps.rbegin(); it != d.steps.rend(); ++it) {
    Step st = *it;
    st.dir = st.dir == Direction::forward ? Direction::backward : Direction::forward;
    r.steps.push_back(st);
  }
  return r;
}

Derivation embed(const Derivation& d, const Word& left, const Word& right) {
  Derivation r{concat(left, concat(d.start, right)), d.steps,
               concat(left, concat(d.end, right))};
  for (Step& st : r.steps) st.pos += left.size();
  return r;
}

Budget default_budget(const Word& p, const Word& q, const EquationSystem& sys) {
  std::size_t longest = 0;
  for (const auto& eq : sys.equations)
    longest = std::max({longest, eq.lhs.size(), eq.rhs.size()});
  Budget b;
  b.max_length = std::max(p.size() + 2 * longest, std::max(p.size(), q.size()));
  return b;
}

}  // namespace thue
