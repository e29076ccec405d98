#ifndef THUE_CORPUS_HPP
#define THUE_CORPUS_HPP

#include "thue/nullseq.hpp"

namespace thue {

/// A worked example: a null sequence with its published equation system.
struct ExampleSpec {
  int id = 0;
  NullSystem ns;
};

/// Nested power construction: R ≡ X_0 with X_{i-1} ≡ (X_i Y_i)^{n_i} X_i
/// over distinct symbols Y_1…Y_r and X_r, plus the cascade of r equations
/// (X_1Y_1)^{n_1}…(X_qY_q)^{n_q} X_{q+1}Y_{q+1} = Y_{q+1}X_{q+1}…(Y_1X_1)^{n_1}.
/// Extra symbols contribute R·δ = δ·R rules (the enlarged system H).
ExampleSpec example1(const std::vector<std::size_t>& n,
                     const std::vector<std::string>& extra = {});

/// The parallel power family for example 1: the pair of words
/// (X_1Y_1)^{n_1}…(X_qY_q)^{n_q} (X_{q+1}Y_{q+1})^m  and
/// (Y_{q+1}X_{q+1})^m (Y_qX_q)^{n_q}…(Y_1X_1)^{n_1}, 0 ≤ q < r.
std::pair<Word, Word> example1_power_family(const ExampleSpec& ex,
                                            const std::vector<std::size_t>& n,
                                            std::size_t q, std::size_t m);

/// R = abbcab over {a,b,c} with {abbc = bcab, abbca = cabab}.
ExampleSpec example2();

/// R ≡ ABABA built from non-overlapping words A, C via U ≡ ACA,
/// ABA ≡ U^n, with the single equation AC = CA. Requires n ≥ 3.
ExampleSpec example3(const std::string& a, const std::string& c, std::size_t n);

/// R = x^n y x^n with xy = yx.
ExampleSpec example4(std::size_t n);

/// R = x^n (y x^n)^p with {x^n y = y x^n, y^p x = x y^p}. Requires
/// n > 1, p > 1.
ExampleSpec example5(std::size_t n, std::size_t p);

}  // namespace thue

#endif
