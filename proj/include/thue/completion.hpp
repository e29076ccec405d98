#ifndef THUE_COMPLETION_HPP
#define THUE_COMPLETION_HPP

#include <set>
#include <string>

#include "thue/nullseq.hpp"
#include "thue/system.hpp"

namespace thue {

/// The growing series S_1 ⊆ S_2 ⊆ … of null sequences and E_1 ⊆ E_2 ⊆ …
/// of equations generated from a seed word.
struct CompletionState {
  Alphabet alphabet;
  Word seed;
  std::vector<std::set<Word>> s_layers;
  std::vector<EquationSystem> e_layers;
  bool fixpoint = false;
  std::size_t iterations = 0;

  const std::set<Word>& null_sequences() const;  // final S-layer
  const EquationSystem& equations() const;       // final E-layer
};

/// Overlap metadata for a generated equation: the shared part u between
/// source words src_a (suffix) and src_b (prefix).
struct EquationWitness {
  Equation eq;
  Word u;
  Word src_a, src_b;
};

/// For every ordered pair of words (self-pairs included) and every shared
/// part U (proper suffix of the first, proper prefix of the second), the
/// equation C = D from first ≡ C·U, second ≡ U·D. Unordered duplicates
/// and identities C ≡ D are dropped; the smaller side is stored first.
EquationSystem generate_equations(const std::set<Word>& words, const Alphabet& alphabet);

/// Same scan, keeping one witness per surviving equation.
std::vector<EquationWitness> generate_equation_witnesses(const std::set<Word>& words);

/// Fixed-length closure of the final S-layer under the final E-layer.
std::set<Word> expand_null_sequences(const CompletionState& state);

/// Alternates equation generation and closure from S_1 = {r} until both
/// series are stationary.
CompletionState complete(const Word& r, const Alphabet& alphabet);

struct MinimizedSystem {
  EquationSystem epsilon;
  /// Each dropped equation with a derivation of it from epsilon.
  std::vector<std::pair<Equation, Derivation>> provenance;
  bool certified_minimum = true;  // false when the greedy fallback ran
};

/// Chooses a minimum subset of the generated equations from which every
/// generated equation follows (exhaustive subset search when the system
/// has at most 20 equations, greedy otherwise), then prefers equations
/// with fewer symbols within inter-derivability.
MinimizedSystem minimize(const CompletionState& state);

struct EpsilonTheoremReport {
  struct Check {
    bool pass = true;
    std::string counterexample;  // human-readable description when failing
  };
  Check no_prefix_residual;  // no TX = TY with X starting a null sequence
  Check no_border_prefix;    // no SX = SY with S ending a null sequence
  Check commutation;         // PR = RP, QR = RQ, UR = RU for all equations
  Check nm_decomposition;    // NR = RN, MR = RM for splits C ≡ NM
  bool all_pass() const;
};

EpsilonTheoremReport verify_epsilon_theorems(const MinimizedSystem& ms,
                                             const CompletionState& state);

/// One classified overlap between two insertion words M ≡ a·R_z·b and
/// N ≡ c·R_μ·d with M ≡ C·U, N ≡ U·D.
struct InsertionOverlapCase {
  int id = 0;  // 1–8
  Word m, n;
  Word cw, u, dw;                                     // C, U, D
  std::vector<std::pair<std::string, Word>> bindings;  // named sub-words
  bool via_removal = false;  // cases 6–8: conclusion after removing R's
  Word lhs, rhs;             // the concluded pair (C = D, or the reduced words)
};

/// Identifies which of the eight configurations holds and verifies the
/// case's conclusion against the generated equations.
InsertionOverlapCase classify_insertion_overlap(const Word& r_x, const Word& r_y,
                                                const Word& r_z, const Word& r_mu,
                                                const Word& a, const Word& b, const Word& c,
                                                const Word& d, const Word& u,
                                                const CompletionState& state);

}  // namespace thue

#endif
