#include <benchmark/benchmark.h>

#include "seqcm/lexideal.hpp"
#include "seqcm/report.hpp"
#include "seqcm/rng.hpp"
#include "seqcm/scm.hpp"
#include "seqcm/simplicial.hpp"

using namespace seqcm;

namespace {

const FieldSpec Q = FieldSpec::rationals();

MonIdeal parse_ideal(int n, const std::string& csv) {
  InputDocument doc =
      parse_input("ring Q[x1..x" + std::to_string(n) + "]\nideal I = " + csv + "\n");
  Context ctx = Context::ring(Q, n);
  std::vector<Monomial> ms;
  for (const RawPoly& p : doc.objects[0].gens)
    ms.push_back(materialize(ctx, p).lt().m);
  return MonIdeal(n, std::move(ms));
}

MonIdeal stable4() {
  return parse_ideal(4, "x1^4, x1^2*x2^2, x1^3*x3, x1^2*x2*x3, x1^2*x2*x4");
}

MonIdeal wide7() {
  return parse_ideal(7,
                     "x1^3, x1^2*x2*x4, x1*x5, x1*x6, x2*x5, x2*x6, x2^2*x7^2, "
                     "x3*x5, x3*x6, x3*x7, x4*x5, x4*x6, x4*x7, x7^3");
}

std::vector<Element> toric3() {
  InputDocument doc = parse_input(
      "ring Q[x1..x4]\n"
      "ideal I = x2*x3 - x1*x4, x2^3 - x1^2*x3, x3^3 - x2*x4^2, x1*x3^2 - x2^2*x4\n");
  Context ctx = Context::ring(Q, 4);
  std::vector<Element> out;
  for (const RawPoly& p : doc.objects[0].gens) out.push_back(materialize(ctx, p));
  return out;
}

void BM_buchberger_toric(benchmark::State& state) {
  Context ctx = Context::ring(Q, 4);
  std::vector<Element> gens = toric3();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ctx, gens));
}
BENCHMARK(BM_buchberger_toric);

void BM_gin_stable4(benchmark::State& state) {
  MonIdeal I = stable4();
  Context ctx = Context::ring(Q, 4);
  std::vector<Element> gens;
  for (const Monomial& m : I.gens) gens.push_back(ctx.make({{ModTerm{0, m}, 1}}));
  uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(gin(ctx, gens, 2, seed++));
}
BENCHMARK(BM_gin_stable4);

void BM_hilbert_series_wide7(benchmark::State& state) {
  MonIdeal I = wide7();
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(I));
}
BENCHMARK(BM_hilbert_series_wide7);

void BM_dimension_filtration_wide7(benchmark::State& state) {
  MonModule U = MonModule::from_ideal(wide7());
  for (auto _ : state) benchmark::DoNotOptimize(dimension_filtration(Q, U));
}
BENCHMARK(BM_dimension_filtration_wide7);

void BM_resolution_wide7(benchmark::State& state) {
  ModulePresentation M = ModulePresentation::cyclic(Q, wide7());
  for (auto _ : state) benchmark::DoNotOptimize(minimal_free_resolution(M));
}
BENCHMARK(BM_resolution_wide7);

void BM_lc_hilbert_stable4(benchmark::State& state) {
  ModulePresentation M = ModulePresentation::cyclic(Q, stable4());
  for (auto _ : state)
    for (int i = 0; i <= 4; ++i) benchmark::DoNotOptimize(lc_hilbert(M, i));
}
BENCHMARK(BM_lc_hilbert_stable4);

void BM_scm_schenzel_wide7(benchmark::State& state) {
  MonModule U = MonModule::from_ideal(wide7());
  for (auto _ : state) benchmark::DoNotOptimize(scm_schenzel(Q, U));
}
BENCHMARK(BM_scm_schenzel_wide7);

void BM_lex_ideal(benchmark::State& state) {
  HilbertSeries H = hilbert_series(stable4());
  for (auto _ : state) benchmark::DoNotOptimize(lex_ideal(4, H, 64));
}
BENCHMARK(BM_lex_ideal);

void BM_duval_random_complexes(benchmark::State& state) {
  std::vector<SimplicialComplex> cs;
  Rng rng(7);
  for (int t = 0; t < 8; ++t) {
    std::vector<std::vector<int>> facets;
    for (int f = 0; f < 3; ++f) {
      std::vector<int> face;
      for (int v = 1; v <= 6; ++v)
        if (rng.uniform(0, 2) == 0) face.push_back(v);
      if (face.empty()) face.push_back(1);
      facets.push_back(std::move(face));
    }
    cs.push_back(SimplicialComplex::from_facets(6, facets));
  }
  for (auto _ : state)
    for (const SimplicialComplex& D : cs)
      benchmark::DoNotOptimize(is_scm_duval(D, Q));
}
BENCHMARK(BM_duval_random_complexes);

}  // namespace

BENCHMARK_MAIN();
