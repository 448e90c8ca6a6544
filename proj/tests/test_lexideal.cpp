#include <doctest.h>

#include "helpers.hpp"
#include "seqcm/lexideal.hpp"

using namespace seqcm;

TEST_CASE("binomial growth bounds") {
  CHECK(macaulay_bound(3, 1) == 6);
  CHECK(macaulay_bound(4, 2) == 5);
  CHECK(macaulay_bound(0, 3) == 0);
  CHECK(macaulay_bound(1, 5) == 1);
}

TEST_CASE("monomials of a degree in lex order") {
  auto ms = monomials_of_degree(3, 2);
  REQUIRE(ms.size() == 6);
  CHECK(ms.front() == th::mono(3, "x1^2"));
  CHECK(ms[1] == th::mono(3, "x1*x2"));
  CHECK(ms.back() == th::mono(3, "x3^2"));
}

TEST_CASE("lexsegment ideal from finitely many values") {
  CHECK(lex_ideal(2, {mpz_class(1), mpz_class(2), mpz_class(1)}) ==
        th::mon(2, "x1^2, x1*x2"));
  CHECK(lex_ideal(2, {mpz_class(1)}) == MonIdeal(2, {}));
  CHECK(lex_ideal(2, {mpz_class(0)}).is_unit());
}

TEST_CASE("non realisable growth is rejected") {
  CHECK_THROWS_AS(lex_ideal(3, {mpz_class(1), mpz_class(3), mpz_class(9)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(lex_ideal(2, {mpz_class(2)}), std::invalid_argument);
  CHECK_THROWS_AS(lex_ideal(2, {mpz_class(1), mpz_class(3)}), std::invalid_argument);
}

TEST_CASE("lexsegment ideal of a full series") {
  // quotient values 1, 3, 4, 4, 4, ...
  HilbertSeries H = reduce_series({{0, 1}, {2, -2}, {4, 1}}, 3);
  CHECK(lex_ideal(3, H) == th::mon(3, "x1^2, x1*x2, x1*x3^2, x2^4"));
}

TEST_CASE("lexification preserves the Hilbert series") {
  Rng rng(909);
  for (int t = 0; t < 20; ++t) {
    MonIdeal I = th::random_mon_ideal(rng, 3, 4, 3);
    HilbertSeries H = hilbert_series(I);
    MonIdeal L = lex_ideal(3, H);
    CHECK(hilbert_series(L) == H);
    // lexifying twice is stable
    CHECK(lex_ideal(3, hilbert_series(L)) == L);
  }
}
