#ifndef THUE_OVERLAP_HPP
#define THUE_OVERLAP_HPP

#include <optional>
#include <utility>
#include <vector>

#include "thue/word.hpp"

namespace thue {

/// Certifies that two words share a part: first ≡ c·u and second ≡ u·d.
/// All three parts are non-empty; src_a/src_b identify the source pair
/// when the witness came from a word collection.
struct OverlapWitness {
  Word c, u, d;
  std::size_t src_a = 0;
  std::size_t src_b = 0;
};

/// One stage of the Euclidean overlap chain: u_prev ≡ c·u ≡ u·d.
struct OverlapStage {
  Word u, c, d;
};
using OverlapChain = std::vector<OverlapStage>;

/// w ≡ root^exponent with root primitive.
struct RootDecomposition {
  Word root;
  std::size_t exponent = 0;
};

/// Result of max_self_overlap: s ≡ c·u ≡ u·d with u the longest border,
/// together with the regular pattern s ≡ (alpha·beta)^n·alpha,
/// c ≡ alpha·beta, d ≡ beta·alpha, u ≡ (alpha·beta)^(n-1)·alpha.
/// alpha may be empty; when it is not, alpha·beta and beta·alpha differ.
struct SelfOverlap {
  Word c, u, d;
  Word alpha, beta;
  std::size_t n = 0;
};

struct MinimalExtension {
  Word t, x, y;
};

/// All start offsets of needle in haystack, ascending, overlaps included.
std::vector<std::size_t> find_occurrences(const Word& haystack, const Word& needle);

/// All non-empty words that are simultaneously a proper prefix and a
/// proper suffix of w, longest first.
std::vector<Word> borders(const Word& w);

RootDecomposition primitive_root(const Word& w);

/// Shared primitive root and exponents when x·y ≡ y·x, absent otherwise.
std::optional<std::pair<RootDecomposition, RootDecomposition>> commute_root(
    const Word& x, const Word& y);

std::optional<SelfOverlap> max_self_overlap(const Word& s);

OverlapChain overlap_chain(const Word& u0);

/// All self-overlap witnesses (p, n, q) of s whose shared part n has at
/// least |alpha·beta| symbols; each n equals alpha·(beta·alpha)^m.
std::vector<OverlapWitness> intermediate_overlaps(const Word& s);

/// The shortest t with t ≡ x·m ≡ m·y extending m so that m becomes the
/// largest self-overlap of t.
MinimalExtension minimal_extension(const Word& m);

}  // namespace thue

#endif
