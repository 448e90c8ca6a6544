#include <doctest.h>

#include "helpers.hpp"
#include "seqcm/lexideal.hpp"
#include "seqcm/resolution.hpp"

using namespace seqcm;

TEST_CASE("Koszul resolution of the irrelevant ideal") {
  ModulePresentation M = th::pres(3, "x1, x2, x3");
  Resolution R = minimal_free_resolution(M);
  auto betti = betti_numbers(R);
  std::map<std::pair<int, int>, int> expected = {
      {{0, 0}, 1}, {{1, 1}, 3}, {{2, 2}, 3}, {{3, 3}, 1}};
  CHECK(betti == expected);
  CHECK(depth_mod(M) == 0);
  CHECK(regularity(M) == 0);
  CHECK(is_cohen_macaulay(M));
}

TEST_CASE("depth and regularity of a non-saturated quotient") {
  ModulePresentation M = th::pres(2, "x1^2, x1*x2");
  CHECK(depth_mod(M) == 0);
  CHECK(dimension(M) == 1);
  CHECK(regularity(M) == 1);
  CHECK_FALSE(is_cohen_macaulay(M));
  auto betti = betti_numbers(minimal_free_resolution(M));
  std::map<std::pair<int, int>, int> expected = {{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}};
  CHECK(betti == expected);
}

TEST_CASE("free modules and the zero module") {
  ModulePresentation F = th::pres(3, "0");
  F.gens.clear();
  CHECK(depth_mod(F) == 3);
  CHECK(is_cohen_macaulay(F));
  ModulePresentation Z = th::pres(2, "1");
  CHECK(depth_mod(Z) == DEPTH_INFINITY);
  CHECK(is_cohen_macaulay(Z));
}

TEST_CASE("a toric surface with a singular vertex is not Cohen-Macaulay") {
  // homogeneous coordinate ring of the degree-4 rational curve through
  // z1 = s^4, z2 = s^3 t, z3 = s t^3, z4 = t^4
  ModulePresentation M = th::pres(
      4, "x2*x3 - x1*x4, x2^3 - x1^2*x3, x3^3 - x2*x4^2, x1*x3^2 - x2^2*x4");
  CHECK(dimension(M) == 2);
  CHECK(depth_mod(M) == 1);
  CHECK_FALSE(is_cohen_macaulay(M));
}

TEST_CASE("minimal generators drop redundancies") {
  Context ctx = th::ring_ctx(2);
  std::vector<Element> g = minimal_generators(ctx, th::gens(2, "x1, x1^2, x1*x2, x2^3"));
  CHECK(g.size() == 2);
}

TEST_CASE("duals of a free quotient") {
  ModulePresentation R3 = th::pres(3, "0");
  R3.gens.clear();
  ModulePresentation E0 = ext_module(R3, 0);
  CHECK(hilbert_series(E0) == reduce_series({{3, 1}}, 3));
  CHECK(is_zero_module(ext_module(R3, 1)));
  CHECK(is_zero_module(ext_module(R3, 3)));
}

TEST_CASE("local cohomology of a small quotient") {
  ModulePresentation M = th::pres(2, "x1^2, x1*x2");
  CHECK(lc_hilbert(M, 0) == reduce_lc({{1, 1}}, 0));  // the socle element x1
  CHECK(lc_hilbert(M, 1) == reduce_lc({{0, 1}}, 1));  // the line k[x2]
  CHECK(lc_hilbert(M, 2).is_zero());
}

TEST_CASE("top local cohomology of the ring itself") {
  ModulePresentation R2 = th::pres(2, "0");
  R2.gens.clear();
  CHECK(lc_hilbert(R2, 0).is_zero());
  CHECK(lc_hilbert(R2, 1).is_zero());
  LCHilbert top = lc_hilbert(R2, 2);
  CHECK(top == reduce_lc({{0, 1}}, 2));
  CHECK(lc_coefficient(top, -2) == 1);
  CHECK(lc_coefficient(top, -3) == 2);
  CHECK(lc_coefficient(top, -1) == 0);
}

TEST_CASE("vanishing window and deficiency dimensions") {
  Rng rng(555);
  FieldSpec k = FieldSpec::rationals();
  for (int t = 0; t < 8; ++t) {
    MonIdeal I = th::random_mon_ideal(rng, 3, 4, 3);
    ModulePresentation M = th::pres_of(k, I);
    int n = 3, dep = depth_mod(M), dim = dimension(M);
    for (int i = 0; i <= n; ++i) {
      LCHilbert h = lc_hilbert(M, i);
      if (i < dep || i > dim) CHECK(h.is_zero());
      // the deficiency module at i has dimension at most i
      ModulePresentation E = ext_module(M, n - i);
      CHECK(dimension(E) <= i);
    }
    CHECK_FALSE(lc_hilbert(M, dep).is_zero());
    if (dim >= 0) CHECK_FALSE(lc_hilbert(M, dim).is_zero());
  }
}

TEST_CASE("alternating betti ranks cancel for torsion modules") {
  Rng rng(808);
  for (int t = 0; t < 6; ++t) {
    MonIdeal I = th::random_mon_ideal(rng, 3, 4, 3);
    ModulePresentation M = th::pres_of(FieldSpec::rationals(), I);
    auto betti = betti_numbers(minimal_free_resolution(M));
    long chi = 0;
    for (const auto& [kd, b] : betti) chi += (kd.first % 2 ? -b : b);
    CHECK(chi == 0);  // rank of F/I is zero for a nonzero ideal
  }
}
