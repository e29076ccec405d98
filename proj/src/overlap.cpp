#include "thue/overlap.hpp"

#include <algorithm>

namespace thue {

namespace {

// KMP failure table: fail[i] = length of the longest proper border of w[0..i).
std::vector<std::size_t> failure_table(const Word& w) {
  std::vector<std::size_t> fail(w.size() + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k];
    if (w[i] == w[k]) ++k;
    fail[i + 1] = k;
  }
  return fail;
}

}  // namespace

std::vector<std::size_t> find_occurrences(const Word& haystack, const Word& needle) {
  if (needle.empty()) throw input_error("find_occurrences: empty needle");
  std::vector<std::size_t> out;
  if (needle.size() > haystack.size()) return out;
  auto fail = failure_table(needle);
  std::size_t k = 0;
  for (std::size_t i = 0; i < haystack.size(); ++i) {
    while (k > 0 && haystack[i] != needle[k]) k = fail[k];
    if (haystack[i] == needle[k]) ++k;
    if (k == needle.size()) {
      out.push_back(i + 1 - k);
      k = fail[k];
    }
  }
  return out;
}

std::vector<Word> borders(const Word& w) {
  if (w.empty()) throw input_error("borders: empty word");
  std::vector<Word> out;
  auto fail = failure_table(w);
  for (std::size_t len = fail[w.size()]; len > 0; len = fail[len])
    out.push_back(slice(w, 0, len));
  return out;
}

RootDecomposition primitive_root(const Word& w) {
  if (w.empty()) throw input_error("primitive_root: empty word");
  auto fail = failure_table(w);
  std::size_t period = w.size() - fail[w.size()];
  if (w.size() % period != 0) return {w, 1};
  return {slice(w, 0, period), w.size() / period};
}

std::optional<std::pair<RootDecomposition, RootDecomposition>> commute_root(
    const Word& x, const Word& y) {
  if (x.empty() || y.empty()) throw input_error("commute_root: empty word");
  if (concat(x, y) != concat(y, x)) return std::nullopt;
  return std::make_pair(primitive_root(x), primitive_root(y));
}

std::optional<SelfOverlap> max_self_overlap(const Word& s) {
  if (s.empty()) throw input_error("max_self_overlap: empty word");
  auto bs = borders(s);
  if (bs.empty()) return std::nullopt;

  SelfOverlap r;
  r.u = bs.front();
  std::size_t clen = s.size() - r.u.size();
  r.c = slice(s, 0, clen);
  r.d = slice(s, r.u.size(), s.size());
  r.n = s.size() / clen;
  r.alpha = slice(s, r.n * clen, s.size());
  r.beta = slice(r.c, r.alpha.size(), clen);

  // The §IV pattern must hold exactly; anything else is a bug.
  Word ab = concat(r.alpha, r.beta);
  Word ba = concat(r.beta, r.alpha);
  if (ab != r.c || ba != r.d) throw std::logic_error("self-overlap decomposition mismatch");
  if (concat(repeat(ab, r.n), r.alpha) != s)
    throw std::logic_error("self-overlap power form mismatch");
  if (!r.alpha.empty() && ab == ba)
    throw std::logic_error("alpha*beta commutes in self-overlap decomposition");
  return r;
}

OverlapChain overlap_chain(const Word& u0) {
  OverlapChain chain;
  Word cur = u0;
  while (auto so = max_self_overlap(cur)) {
    chain.push_back({so->u, so->c, so->d});
    cur = so->u;
  }
  return chain;
}

std::vector<OverlapWitness> intermediate_overlaps(const Word& s) {
  auto so = max_self_overlap(s);
  if (!so) throw input_error("intermediate_overlaps: word has no border");
  std::size_t min_len = so->alpha.size() + so->beta.size();
  std::vector<OverlapWitness> out;
  for (const Word& n : borders(s)) {
    if (n.size() < min_len) continue;
    bool matched = false;
    for (std::size_t m = 0; m < so->n; ++m) {
      if (concat(so->alpha, repeat(concat(so->beta, so->alpha), m)) == n) {
        matched = true;
        break;
      }
    }
    if (!matched) throw std::logic_error("intermediate overlap outside alpha(beta alpha)^m");
    out.push_back({slice(s, 0, s.size() - n.size()), n, slice(s, n.size(), s.size())});
  }
  return out;
}

MinimalExtension minimal_extension(const Word& m) {
  if (m.empty()) throw input_error("minimal_extension: empty word");
  auto bs = borders(m);
  Word n = bs.empty() ? Word{} : bs.front();
  MinimalExtension r;
  r.x = slice(m, 0, m.size() - n.size());
  r.y = slice(m, n.size(), m.size());
  r.t = concat(r.x, m);
  if (concat(m, r.y) != r.t) throw std::logic_error("minimal extension identity mismatch");
  auto tb = borders(r.t);
  if (tb.empty() || tb.front() != m)
    throw std::logic_error("minimal extension: m is not the largest overlap of t");
  return r;
}

}  // namespace thue
