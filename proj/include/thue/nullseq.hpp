#ifndef THUE_NULLSEQ_HPP
#define THUE_NULLSEQ_HPP

#include <set>

#include "thue/rewrite.hpp"
#include "thue/system.hpp"

namespace thue {

/// A nullable word r together with a length-preserving equation system.
struct NullSystem {
  Alphabet alphabet;
  Word r;
  EquationSystem eqs;

  /// Throws input_error unless r is non-empty and every equation keeps
  /// both length and per-symbol counts.
  void validate() const;
};

enum class NullMove { insert, erase };

struct NullStep {
  Word result;  // empty exactly at the deletion-of-whole-word boundary
  std::size_t pos = 0;
  NullMove move = NullMove::erase;
};

/// All single deletions of r from w, plus all single insertions of r
/// whose result stays within max_len. A deletion yielding the empty word
/// is reported with an empty result; closures skip it.
std::vector<NullStep> similar_null(const Word& w, const Word& r, std::size_t max_len);

/// Equivalence via length-preserving steps only (exact closure).
DecisionOutcome parallel(const Word& p, const Word& q, const NullSystem& ns);

struct CompleteReport {
  struct Entry {
    Symbol z = 0;
    Verdict verdict = Verdict::unknown;
    std::optional<Derivation> witness;  // z·r = r·z when equivalent
  };
  std::vector<Entry> entries;
  bool complete() const;
  std::vector<Symbol> failing() const;
};

/// For every symbol z: does z·r ∥ r·z hold?
CompleteReport check_complete(const NullSystem& ns);

struct PerfectBoundedResult {
  bool pass = false;
  std::optional<std::pair<Word, Word>> counterexample;  // A, B with rA ∥ rB but A ∦ B
  std::size_t words_checked = 0;
};

/// Checks r·A ∥ r·B ⟹ A ∥ B for all A, B with |A| = |B| ≤ max_len − |r|.
/// A pass is only "perfect up to the bound".
PerfectBoundedResult check_perfect_bounded(const NullSystem& ns, std::size_t max_len);

/// Certificate implying perfection outright: the equations satisfy the
/// initial-symbol cancellation condition.
std::optional<CancellationCertificate> check_perfect_syntactic(const NullSystem& ns);

struct IrreducibleSystem {
  std::vector<std::set<Word>> layers;  // each closed under ∥, equal lengths
  bool empty_marker = false;           // a deletion of r reached the empty word

  /// The r-free words of the final layer.
  std::set<Word> terminal(const Word& r) const;
};

/// The layered deletion structure: layer 0 is the ∥-closure of {s}; each
/// next layer is the ∥-closure of all single r-deletions; stops when a
/// layer is r-free. Requires a complete system whose perfection is
/// established (certificate, or bounded check covering |s|).
IrreducibleSystem irreducible_system(const Word& s, const NullSystem& ns, std::size_t max_len);

/// Equivalent iff the two words' irreducible systems have identical
/// terminal sets (including the empty-word marker). No witness derivation
/// is produced on this path.
DecisionOutcome decide_problem_two(const Word& p, const Word& q, const NullSystem& ns,
                                   std::size_t max_len);

/// For every border U of r (longest first), the equation C = D from
/// r ≡ C·U ≡ U·D.
std::vector<Equation> overlap_equation(const Word& r);

/// The ∥-closure of a word set (fixed-length BFS under sys).
std::set<Word> parallel_closure(const std::set<Word>& seed, const EquationSystem& sys);

}  // namespace thue

#endif
