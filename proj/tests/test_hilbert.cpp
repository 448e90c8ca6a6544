#include <doctest.h>

#include "helpers.hpp"
#include "seqcm/lexideal.hpp"

using namespace seqcm;

TEST_CASE("series of a small monomial quotient") {
  // k[x1,x2]/(x1^2, x1 x2): dimensions 1, 2, 1, 1, ...
  HilbertSeries H = hilbert_series(th::mon(2, "x1^2, x1*x2"));
  CHECK(H == reduce_series({{0, 1}, {1, 1}, {2, -1}}, 1));
  CHECK(hilbert_function(H, 0) == 1);
  CHECK(hilbert_function(H, 1) == 2);
  CHECK(hilbert_function(H, 7) == 1);
}

TEST_CASE("series reduction cancels common factors") {
  CHECK(reduce_series({{0, 1}, {1, -1}}, 2) == reduce_series({{0, 1}}, 1));
  CHECK(reduce_series({{0, 1}, {1, -1}}, 1) == reduce_series({{0, 1}}, 0));
  CHECK(reduce_series({}, 3).is_zero());
}

TEST_CASE("hilbert function agrees with a direct monomial count") {
  Rng rng(2024);
  for (int t = 0; t < 25; ++t) {
    int n = 2 + (int)rng.uniform(0, 2);
    MonIdeal I = th::random_mon_ideal(rng, n, 5, 4);
    HilbertSeries H = hilbert_series(I);
    for (int d = 0; d <= 8; ++d) {
      long count = 0;
      for (const Monomial& m : monomials_of_degree(n, d))
        if (!contains(I, m)) ++count;
      CHECK(hilbert_function(H, d) == count);
    }
  }
}

TEST_CASE("module and ideal series agree on cyclic presentations") {
  Rng rng(3001);
  for (int t = 0; t < 10; ++t) {
    MonIdeal I = th::random_mon_ideal(rng, 3, 4, 3);
    ModulePresentation M = th::pres_of(FieldSpec::rationals(), I);
    CHECK(hilbert_series(M) == hilbert_series(I));
    CHECK(dimension(M) == dimension_mod(I));
  }
}

TEST_CASE("twisted free modules") {
  ModulePresentation M;
  M.field = FieldSpec::rationals();
  M.layout = FreeModuleLayout{3, {0, 1}};
  CHECK(hilbert_series(M) == reduce_series({{0, 1}, {1, 1}}, 3));
  CHECK(dimension(M) == 3);
  CHECK_FALSE(is_zero_module(M));
}

TEST_CASE("zero module conventions") {
  ModulePresentation Z = th::pres(2, "1");
  CHECK(is_zero_module(Z));
  CHECK(dimension(Z) == -1);
  CHECK(hilbert_series(Z).is_zero());
}

TEST_CASE("graded dual of a polynomial series") {
  HilbertSeries H = reduce_series({{2, 1}, {5, 3}}, 0);
  LCHilbert D = dualize(H);
  CHECK(lc_coefficient(D, -2) == 1);
  CHECK(lc_coefficient(D, -5) == 3);
  CHECK(lc_coefficient(D, 0) == 0);
}

TEST_CASE("graded dual of a positive-dimensional series") {
  // dual of 1/(1-z) is supported in degrees <= 0 with all ones
  LCHilbert D = dualize(reduce_series({{0, 1}}, 1));
  CHECK(lc_coefficient(D, 0) == 1);
  CHECK(lc_coefficient(D, -4) == 1);
  CHECK(lc_coefficient(D, 1) == 0);
  CHECK(D == reduce_lc({{1, 1}}, 1));
}

TEST_CASE("laurent arithmetic") {
  LCHilbert a = reduce_lc({{1, 1}}, 0);
  LCHilbert b = reduce_lc({{0, 1}}, 1);
  LCHilbert s = add(a, b);
  CHECK(lc_coefficient(s, 1) == 1);
  // 1/(z-1) is supported in degrees <= -1
  CHECK(lc_coefficient(s, 0) == 0);
  CHECK(lc_coefficient(s, -3) == 1);
  CHECK(add(a, a) == reduce_lc({{1, 2}}, 0));
  CHECK(reduce_lc({{1, 1}, {0, -1}}, 1) == reduce_lc({{0, 1}}, 0));
}

TEST_CASE("dimension from the pole order") {
  CHECK(dimension_mod(th::mon(2, "x1^2, x1*x2")) == 1);
  CHECK(dimension_mod(MonIdeal(3, {})) == 3);
  CHECK(dimension_mod(MonIdeal::unit(3)) == -1);
}
