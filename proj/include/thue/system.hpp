#ifndef THUE_SYSTEM_HPP
#define THUE_SYSTEM_HPP

#include <optional>
#include <vector>

#include "thue/word.hpp"

namespace thue {

/// One replacement rule lhs ↔ rhs (or lhs → rhs in one-directional mode).
struct Equation {
  Word lhs, rhs;

  bool operator==(const Equation& o) const = default;
};

/// bidirectional: both replacement directions allowed; forward_only: lhs→rhs.
enum class Mode { bidirectional, forward_only };

struct EquationSystem {
  Alphabet alphabet;
  std::vector<Equation> equations;
  Mode mode = Mode::bidirectional;

  /// Throws input_error unless every side is non-empty and every symbol
  /// index is valid for the alphabet.
  void validate() const;

  bool length_preserving() const;
  bool length_decreasing() const;  // every rule strictly shrinks
};

enum class Direction { forward, backward };

/// One rewrite: rule `rule` applied in `dir` at offset `pos`.
struct Step {
  std::size_t rule = 0;
  Direction dir = Direction::forward;
  std::size_t pos = 0;

  bool operator==(const Step& o) const = default;
};

/// A replayable chain start ~ C_1 ~ … ~ end.
struct Derivation {
  Word start;
  std::vector<Step> steps;
  Word end;
};

/// Applies one step; throws input_error when the rule does not match at pos.
Word apply_step(const Word& w, const EquationSystem& sys, const Step& st);

/// All intermediate words start, C_1, …, end; throws when the chain does
/// not replay or the final word differs from d.end.
std::vector<Word> replay(const Derivation& d, const EquationSystem& sys);

/// start ≡ end ≡ w, no steps.
Derivation trivial_derivation(const Word& w);

/// end-of-a followed by b (requires a.end ≡ b.start).
Derivation compose(const Derivation& a, const Derivation& b);

/// The same chain walked backwards: each step's direction flips.
Derivation invert(const Derivation& d);

/// The chain embedded in a context: every word becomes left·w·right.
Derivation embed(const Derivation& d, const Word& left, const Word& right);

enum class Verdict { equivalent, not_equivalent, unknown };

struct BudgetReport {
  std::size_t states_explored = 0;
  std::size_t max_length_reached = 0;
};

struct DecisionOutcome {
  Verdict verdict = Verdict::unknown;
  std::optional<Derivation> witness;
  BudgetReport budget;
};

struct Budget {
  std::size_t max_length = 0;
  std::size_t max_states = 1000000;
};

/// max_length = |p| + 2·|longest equation side| (at least max(|p|,|q|)),
/// max_states = 10^6.
Budget default_budget(const Word& p, const Word& q, const EquationSystem& sys);

}  // namespace thue

#endif
