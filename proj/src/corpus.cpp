#include "thue/corpus.hpp"

#include <algorithm>

#include "thue/rewrite.hpp"

namespace thue {

namespace {

// X_r, X_{r-1}, …, X_1 with X_{i-1} ≡ (X_i Y_i)^{n_i} X_i; index 0 is X_r.
std::vector<Word> nested_words(const std::vector<std::size_t>& n, Symbol x_r,
                               const std::vector<Symbol>& ys) {
  std::vector<Word> xs{{x_r}};  // xs[k] is X_{r-k}
  for (std::size_t i = n.size(); i >= 1; --i) {
    const Word& inner = xs.back();
    Word next = concat(repeat(concat(inner, {ys[i - 1]}), n[i - 1]), inner);
    xs.push_back(next);
  }
  return xs;
}

}  // namespace

ExampleSpec example1(const std::vector<std::size_t>& n,
                     const std::vector<std::string>& extra) {
  const std::size_t r = n.size();
  if (r == 0) throw input_error("example1: at least one level required");
  for (std::size_t ni : n)
    if (ni == 0) throw input_error("example1: exponents must be positive");
  std::vector<std::string> names;
  if (r == 1) {
    names = {"y", "x"};
  } else {
    for (std::size_t i = 1; i <= r; ++i) names.push_back("y" + std::to_string(i));
    names.push_back("x");
  }
  names.insert(names.end(), extra.begin(), extra.end());
  Alphabet alpha(names);
  std::vector<Symbol> ys;
  for (std::size_t i = 0; i < r; ++i) ys.push_back(static_cast<Symbol>(i));
  Symbol x_r = static_cast<Symbol>(r);

  auto xs = nested_words(n, x_r, ys);  // xs[r - i] is X_i; xs[r] is X_0 ≡ R
  ExampleSpec ex;
  ex.id = 1;
  ex.ns.alphabet = alpha;
  ex.ns.r = xs[r];
  ex.ns.eqs.alphabet = alpha;
  for (std::size_t q = 0; q < r; ++q) {
    Word lhs, rhs;
    for (std::size_t i = 1; i <= q; ++i)
      lhs = concat(lhs, repeat(concat(xs[r - i], {ys[i - 1]}), n[i - 1]));
    lhs = concat(lhs, concat(xs[r - (q + 1)], {ys[q]}));
    rhs = concat(Word{ys[q]}, xs[r - (q + 1)]);
    for (std::size_t i = q; i >= 1; --i)
      rhs = concat(rhs, repeat(concat(Word{ys[i - 1]}, xs[r - i]), n[i - 1]));
    ex.ns.eqs.equations.push_back({lhs, rhs});
  }
  for (std::size_t k = 0; k < extra.size(); ++k) {
    Word delta{static_cast<Symbol>(r + 1 + k)};
    ex.ns.eqs.equations.push_back({concat(ex.ns.r, delta), concat(delta, ex.ns.r)});
  }
  ex.ns.validate();
  return ex;
}

std::pair<Word, Word> example1_power_family(const ExampleSpec& ex,
                                            const std::vector<std::size_t>& n,
                                            std::size_t q, std::size_t m) {
  if (ex.id != 1) throw input_error("example1_power_family: wrong example");
  const std::size_t r = n.size();
  if (q >= r) throw input_error("example1_power_family: q out of range");
  std::vector<Symbol> ys;
  for (std::size_t i = 0; i < r; ++i) ys.push_back(static_cast<Symbol>(i));
  auto xs = nested_words(n, static_cast<Symbol>(r), ys);
  Word lhs, rhs;
  for (std::size_t i = 1; i <= q; ++i)
    lhs = concat(lhs, repeat(concat(xs[r - i], {ys[i - 1]}), n[i - 1]));
  lhs = concat(lhs, repeat(concat(xs[r - (q + 1)], {ys[q]}), m));
  rhs = repeat(concat(Word{ys[q]}, xs[r - (q + 1)]), m);
  for (std::size_t i = q; i >= 1; --i)
    rhs = concat(rhs, repeat(concat(Word{ys[i - 1]}, xs[r - i]), n[i - 1]));
  return {lhs, rhs};
}

ExampleSpec example2() {
  Alphabet alpha({"a", "b", "c"});
  ExampleSpec ex;
  ex.id = 2;
  ex.ns.alphabet = alpha;
  ex.ns.r = alpha.parse("abbcab");
  ex.ns.eqs.alphabet = alpha;
  ex.ns.eqs.equations = {{alpha.parse("abbc"), alpha.parse("bcab")},
                         {alpha.parse("abbca"), alpha.parse("cabab")}};
  ex.ns.validate();
  return ex;
}

ExampleSpec example3(const std::string& a, const std::string& c, std::size_t n) {
  if (n < 3) throw input_error("example3: n must be at least 3");
  std::vector<std::string> names;
  for (char ch : a + c) {
    std::string s(1, ch);
    if (std::find(names.begin(), names.end(), s) == names.end()) names.push_back(s);
  }
  Alphabet alpha(names);
  Word wa = alpha.parse(a);
  Word wc = alpha.parse(c);
  if (wa.empty() || wc.empty()) throw input_error("example3: empty part");
  auto rep = check_non_overlapping({wa, wc});
  if (!rep.ok()) throw input_error("example3: parts overlap: " + rep.describe());
  Word u = concat(wa, concat(wc, wa));
  Word aba = repeat(u, n);
  Word b = slice(aba, wa.size(), aba.size() - wa.size());
  // Consistency with the closed form B ≡ (CA)·U^{n-2}·(AC).
  Word x = concat(wc, wa);
  Word y = concat(wa, wc);
  if (concat(x, concat(repeat(u, n - 2), y)) != b)
    throw std::logic_error("example3: closed form mismatch");
  ExampleSpec ex;
  ex.id = 3;
  ex.ns.alphabet = alpha;
  ex.ns.r = concat(aba, concat(b, wa));  // A B A B A
  ex.ns.eqs.alphabet = alpha;
  ex.ns.eqs.equations = {{concat(wa, wc), concat(wc, wa)}};
  ex.ns.validate();
  return ex;
}

ExampleSpec example4(std::size_t n) {
  if (n == 0) throw input_error("example4: n must be positive");
  Alphabet alpha({"x", "y"});
  Word xn = repeat(alpha.parse("x"), n);
  ExampleSpec ex;
  ex.id = 4;
  ex.ns.alphabet = alpha;
  ex.ns.r = concat(xn, concat(alpha.parse("y"), xn));
  ex.ns.eqs.alphabet = alpha;
  ex.ns.eqs.equations = {{alpha.parse("xy"), alpha.parse("yx")}};
  ex.ns.validate();
  return ex;
}

ExampleSpec example5(std::size_t n, std::size_t p) {
  if (n < 2 || p < 2) throw input_error("example5: n and p must exceed 1");
  Alphabet alpha({"x", "y"});
  Word xn = repeat(alpha.parse("x"), n);
  Word yp = repeat(alpha.parse("y"), p);
  ExampleSpec ex;
  ex.id = 5;
  ex.ns.alphabet = alpha;
  ex.ns.r = concat(xn, repeat(concat(alpha.parse("y"), xn), p));
  ex.ns.eqs.alphabet = alpha;
  ex.ns.eqs.equations = {{concat(xn, alpha.parse("y")), concat(alpha.parse("y"), xn)},
                         {concat(yp, alpha.parse("x")), concat(alpha.parse("x"), yp)}};
  ex.ns.validate();
  return ex;
}

}  // namespace thue
