#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "thue/corpus.hpp"
#include "thue/overlap.hpp"
#include "thue/rewrite.hpp"

using namespace thue;

TEST_CASE("example1: closed forms and cascade equations") {
  auto ex = example1({1});
  CHECK(ex.ns.alphabet.format(ex.ns.r) == "xyx");
  REQUIRE(ex.ns.eqs.equations.size() == 1);
  CHECK(ex.ns.alphabet.format(ex.ns.eqs.equations[0].lhs) == "xy");
  CHECK(ex.ns.alphabet.format(ex.ns.eqs.equations[0].rhs) == "yx");

  ex = example1({2});
  CHECK(ex.ns.alphabet.format(ex.ns.r) == "xyxyx");

  ex = example1({1, 1});
  // X_2 = x, X_1 = x y2 x, R = X_1 y1 X_1.
  CHECK(ex.ns.alphabet.format(ex.ns.r) == "x y2 x y1 x y2 x");
  REQUIRE(ex.ns.eqs.equations.size() == 2);
  CHECK(ex.ns.alphabet.format(ex.ns.eqs.equations[0].lhs) == "x y2 x y1");
  CHECK(ex.ns.alphabet.format(ex.ns.eqs.equations[0].rhs) == "y1 x y2 x");
  // The level-2 equivalence carries the level-1 prefix context.
  CHECK(ex.ns.alphabet.format(ex.ns.eqs.equations[1].lhs) == "x y2 x y1 x y2");
  CHECK(ex.ns.alphabet.format(ex.ns.eqs.equations[1].rhs) == "y2 x y1 x y2 x");

  // The nesting identity R ≡ (X_1 Y_1)^{n_1} X_1 by re-concatenation.
  ex = example1({2, 2});
  Word x1 = ex.ns.alphabet.parse("x y2 x y2 x");
  Word y1{ex.ns.alphabet.index("y1")};
  CHECK(concat(repeat(concat(x1, y1), 2), x1) == ex.ns.r);

  // Extra symbols add commuting rules R·d = d·R.
  auto withd = example1({1}, {"d"});
  REQUIRE(withd.ns.eqs.equations.size() == 2);
  Word d{withd.ns.alphabet.index("d")};
  CHECK(withd.ns.eqs.equations[1].lhs == concat(withd.ns.r, d));
  CHECK(withd.ns.eqs.equations[1].rhs == concat(d, withd.ns.r));

  CHECK_THROWS_AS(example1({}), input_error);
  CHECK_THROWS_AS(example1({0}), input_error);
}

TEST_CASE("example1: power-family pairs are parallel") {
  for (std::vector<std::size_t> n : {std::vector<std::size_t>{1}, {2}, {1, 1}}) {
    auto ex = example1(n);
    for (std::size_t q = 0; q < n.size(); ++q)
      for (std::size_t m = 0; m <= 2; ++m) {
        auto [lhs, rhs] = example1_power_family(ex, n, q, m);
        CHECK(lhs.size() == rhs.size());
        if (!lhs.empty())
          CHECK(decide_fixed_length(lhs, rhs, ex.ns.eqs).verdict == Verdict::equivalent);
      }
  }
}

TEST_CASE("example2: the fixed published instance") {
  auto ex = example2();
  CHECK(ex.ns.alphabet.format(ex.ns.r) == "abbcab");
  REQUIRE(ex.ns.eqs.equations.size() == 2);
  CHECK(ex.ns.alphabet.format(ex.ns.eqs.equations[0].lhs) == "abbc");
  CHECK(ex.ns.alphabet.format(ex.ns.eqs.equations[0].rhs) == "bcab");
  CHECK(ex.ns.alphabet.format(ex.ns.eqs.equations[1].lhs) == "abbca");
  CHECK(ex.ns.alphabet.format(ex.ns.eqs.equations[1].rhs) == "cabab");
  CHECK(borders(ex.ns.r) == std::vector<Word>{ex.ns.alphabet.parse("ab")});
  CHECK(check_complete(ex.ns).complete());
  CHECK(check_perfect_bounded(ex.ns, ex.ns.r.size() + 2).pass);
}

TEST_CASE("example3: construction and overlap rejection") {
  auto ex = example3("a", "c", 3);
  const Alphabet& al = ex.ns.alphabet;
  Word u = al.parse("aca");
  Word aba = repeat(u, 3);
  CHECK(al.format(aba) == "acaacaaca");
  Word b = al.parse("caacaac");
  // R ≡ ABABA with A = "a".
  Word expect = concat(aba, concat(b, al.parse("a")));
  CHECK(ex.ns.r == expect);
  REQUIRE(ex.ns.eqs.equations.size() == 1);
  CHECK(al.format(ex.ns.eqs.equations[0].lhs) == "ac");
  CHECK(al.format(ex.ns.eqs.equations[0].rhs) == "ca");

  // The derived equation relates parallel words.
  CHECK(decide_fixed_length(al.parse("ac"), al.parse("ca"), ex.ns.eqs).verdict ==
        Verdict::equivalent);

  CHECK_THROWS_AS(example3("ab", "ba", 3), input_error);
  CHECK_THROWS_AS(example3("a", "c", 2), input_error);
}

TEST_CASE("example4: powers of x around a single y") {
  auto ex = example4(1);
  CHECK(ex.ns.alphabet.format(ex.ns.r) == "xyx");
  ex = example4(2);
  CHECK(ex.ns.alphabet.format(ex.ns.r) == "xxyxx");
  REQUIRE(ex.ns.eqs.equations.size() == 1);
  CHECK(ex.ns.alphabet.format(ex.ns.eqs.equations[0].lhs) == "xy");
  CHECK(check_complete(ex.ns).complete());
  CHECK(check_perfect_syntactic(ex.ns).has_value());
  ex = example4(3);
  CHECK(ex.ns.alphabet.format(ex.ns.r) == "xxxyxxx");
  CHECK_THROWS_AS(example4(0), input_error);
}

TEST_CASE("example5: closed form, completeness, bounded perfection") {
  auto ex = example5(2, 2);
  CHECK(ex.ns.alphabet.format(ex.ns.r) == "xxyxxyxx");
  REQUIRE(ex.ns.eqs.equations.size() == 2);
  CHECK(ex.ns.alphabet.format(ex.ns.eqs.equations[0].lhs) == "xxy");
  CHECK(ex.ns.alphabet.format(ex.ns.eqs.equations[0].rhs) == "yxx");
  CHECK(ex.ns.alphabet.format(ex.ns.eqs.equations[1].lhs) == "yyx");
  CHECK(ex.ns.alphabet.format(ex.ns.eqs.equations[1].rhs) == "xyy");

  // Closed form x^n (y x^n)^p by re-concatenation.
  Word xn = repeat(ex.ns.alphabet.parse("x"), 2);
  CHECK(concat(xn, repeat(concat(ex.ns.alphabet.parse("y"), xn), 2)) == ex.ns.r);

  CHECK(check_complete(ex.ns).complete());
  CHECK(check_perfect_bounded(ex.ns, ex.ns.r.size() + 3).pass);
  // The initial-symbol certificate does not apply here.
  CHECK(!check_perfect_syntactic(ex.ns).has_value());

  auto ex32 = example5(3, 2);
  CHECK(ex32.ns.alphabet.format(ex32.ns.r) == "xxxyxxxyxxx");
  CHECK_THROWS_AS(example5(1, 2), input_error);
  CHECK_THROWS_AS(example5(2, 1), input_error);
}

TEST_CASE("every example passes completeness; perfection as documented") {
  auto e1 = example1({1, 1});
  CHECK(check_complete(e1.ns).complete());
  CHECK(check_perfect_syntactic(e1.ns).has_value());

  auto e3 = example3("a", "c", 3);
  CHECK(check_complete(e3.ns).complete());
  CHECK(check_perfect_bounded(e3.ns, e3.ns.r.size() + 2).pass);
}
