#ifndef THUE_REWRITE_HPP
#define THUE_REWRITE_HPP

#include <cstdint>
#include <string>

#include "thue/system.hpp"

namespace thue {

/// All words one rewrite away from w, in (rule, direction, position) order.
/// Forward-only systems contribute no backward steps.
std::vector<std::pair<Word, Step>> similar_steps(const Word& w, const EquationSystem& sys);

/// Exact decision for length-preserving systems: exhaustive closure over
/// words of length |p|. Rejects systems that change lengths.
DecisionOutcome decide_fixed_length(const Word& p, const Word& q, const EquationSystem& sys);

struct OverlapViolation {
  enum class Kind { substring, cross_overlap, self_border };
  Kind kind;
  std::size_t a = 0, b = 0;   // indices of the offending pair (a == b for borders)
  std::size_t where = 0;      // occurrence position, or overlap length
  std::string describe() const;
};

struct NonOverlapReport {
  std::vector<OverlapViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

/// Passes iff no word is a substring of another and no non-empty proper
/// suffix of any word equals a non-empty proper prefix of any word
/// (including against itself, i.e. no word has a border).
NonOverlapReport check_non_overlapping(const std::vector<Word>& lhs_set);

struct Strategy {
  enum class Kind { leftmost, rightmost, randomized };
  Kind kind = Kind::leftmost;
  std::uint64_t seed = 0;

  static Strategy leftmost() { return {Kind::leftmost, 0}; }
  static Strategy rightmost() { return {Kind::rightmost, 0}; }
  static Strategy randomized(std::uint64_t seed) { return {Kind::randomized, seed}; }
};

/// Repeated forward reduction until no rule matches. Requires a
/// forward-only, strictly length-decreasing system.
std::pair<Word, Derivation> reduce_to_normal_form(const Word& w, const EquationSystem& sys,
                                                  const Strategy& strategy);

/// Exact decision for forward-only, strictly length-decreasing systems
/// whose left sides are mutually non-overlapping: equivalent iff the
/// normal forms coincide. Rejects systems outside that fragment.
DecisionOutcome decide_reducing(const Word& p, const Word& q, const EquationSystem& sys);

/// Bounded bidirectional closure from p. "not-equivalent" only when the
/// closure saturates under budget; "unknown" on budget exhaustion.
DecisionOutcome decide_bounded(const Word& p, const Word& q, const EquationSystem& sys,
                               const Budget& budget);

/// Per-equation split lhs ≡ x·P, rhs ≡ y·Q.
struct CancelEntry {
  Symbol x = 0;
  Word p;
  Symbol y = 0;
  Word q;
};

struct CancellationCertificate {
  std::vector<CancelEntry> entries;
};

struct CancellationReport {
  std::optional<CancellationCertificate> certificate;
  std::string violation;  // names the first failure when absent
};

/// Initial-symbol condition: writing each equation as xP ↔ yQ, every y
/// must differ from every other y and from every x (orientation as stored).
CancellationReport check_cancellation_condition(const EquationSystem& sys);

/// Left-cancellation: from derivations c·m = d·n and c = d over a system
/// holding a cancellation certificate, constructs a derivation m = n whose
/// step count never exceeds the steps processed.
Derivation cancel_left(const Word& c, const Word& m, const Word& d, const Word& n,
                       const EquationSystem& sys, const Derivation& proof,
                       const Derivation& cproof);

struct RotationCheck {
  Word source;    // a word equivalent to t
  Word rotation;  // one of its rotations
  Verdict verdict = Verdict::unknown;
};

struct RotationReport {
  std::vector<RotationCheck> checks;
  bool all_equivalent() const;
};

/// Checks every rotation of every word equivalent to t (within budget)
/// for equivalence with t.
RotationReport cyclic_shift_family(const Word& t, const EquationSystem& sys,
                                   const Budget& budget);

}  // namespace thue

#endif
