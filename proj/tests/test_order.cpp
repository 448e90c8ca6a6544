#include <doctest.h>

#include "helpers.hpp"

using namespace seqcm;

TEST_CASE("monomial basics") {
  Monomial a = th::mono(3, "x1*x3");
  Monomial b = th::mono(3, "x2^2");
  CHECK(a.deg == 2);
  CHECK(mul(a, b).deg == 4);
  CHECK(divides(a, mul(a, b)));
  CHECK_FALSE(divides(b, a));
  CHECK(quotient(mul(a, b), a) == b);
  CHECK(lcm(a, b) == mul(a, b));
  CHECK(coprime(a, b));
  CHECK(support(a) == std::vector<int>{1, 3});
  CHECK(is_squarefree(a));
  CHECK_FALSE(is_squarefree(b));
}

TEST_CASE("degrevlex compares by last exponent difference") {
  MonomialOrder o = MonomialOrder::degrevlex(3);
  FreeModuleLayout L = FreeModuleLayout::ring(3);
  ModTerm a{0, th::mono(3, "x1*x3")}, b{0, th::mono(3, "x2^2")};
  CHECK(compare(o, L, b, a) > 0);  // x2^2 > x1x3
  CHECK(compare(o, L, a, a) == 0);
}

TEST_CASE("rev_2 weight comparison can tie on distinct monomials") {
  // both have weight vector (-1, 0) under the rows (0,0,0,-1), (0,0,-1,0)
  Monomial a = th::mono(4, "x1^5*x4"), b = th::mono(4, "x2*x4");
  CHECK(compare_partial(2, a, b) == PartialCmp::EQ);
  Monomial c = th::mono(4, "x3^2");
  CHECK(compare_partial(1, c, a) == PartialCmp::GT);  // x4-exponent 0 beats 1
}

TEST_CASE("rev_n refinement equals classical degrevlex") {
  Rng rng(41);
  MonomialOrder drl = MonomialOrder::degrevlex(4);
  MonomialOrder rev4 = MonomialOrder::rev_partial(/*r=*/4, /*n=*/4);
  FreeModuleLayout L = FreeModuleLayout::ring(4);
  for (int t = 0; t < 10000; ++t) {
    Monomial a(4), b(4);
    for (int j = 0; j < 4; ++j) {
      a.e[j] = (int32_t)rng.uniform(0, 4);
      b.e[j] = (int32_t)rng.uniform(0, 4);
      a.deg += a.e[j];
      b.deg += b.e[j];
    }
    ModTerm ta{0, a}, tb{0, b};
    int x = compare(drl, L, ta, tb), y = compare(rev4, L, ta, tb);
    CHECK((x < 0) == (y < 0));
    CHECK((x == 0) == (y == 0));
  }
}

TEST_CASE("order axioms: antisymmetry, transitivity, multiplicativity") {
  Rng rng(7);
  MonomialOrder o = MonomialOrder::degrevlex(3);
  FreeModuleLayout L = FreeModuleLayout::ring(3);
  auto rand_mono = [&] {
    Monomial m(3);
    for (int j = 0; j < 3; ++j) {
      m.e[j] = (int32_t)rng.uniform(0, 3);
      m.deg += m.e[j];
    }
    return m;
  };
  for (int t = 0; t < 2000; ++t) {
    Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
    ModTerm ta{0, a}, tb{0, b}, tc{0, c};
    CHECK(compare(o, L, ta, tb) == -compare(o, L, tb, ta));
    if (compare(o, L, ta, tb) > 0 && compare(o, L, tb, tc) > 0)
      CHECK(compare(o, L, ta, tc) > 0);
    if (compare(o, L, ta, tb) > 0)
      CHECK(compare(o, L, ModTerm{0, mul(a, c)}, ModTerm{0, mul(b, c)}) > 0);
  }
}

TEST_CASE("module positions break ties with smaller index greater") {
  MonomialOrder o = MonomialOrder::degrevlex(2);
  FreeModuleLayout L{2, {0, 0}};
  Monomial m = th::mono(2, "x1");
  CHECK(compare(o, L, ModTerm{0, m}, ModTerm{1, m}) > 0);
}

TEST_CASE("orders reject monomials of the wrong dimension") {
  MonomialOrder o = MonomialOrder::degrevlex(3);
  FreeModuleLayout L = FreeModuleLayout::ring(3);
  ModTerm bad{0, th::mono(2, "x1")};
  CHECK_THROWS_AS(compare(o, L, bad, bad), std::invalid_argument);
}
