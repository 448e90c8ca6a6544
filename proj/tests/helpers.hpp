#pragma once

#include <string>
#include <vector>

#include "seqcm/filtration.hpp"
#include "seqcm/rng.hpp"
#include "seqcm/textio.hpp"

namespace th {

using namespace seqcm;

inline Context ring_ctx(int n) { return Context::ring(FieldSpec::rationals(), n); }

// comma-separated polynomial list in x1..xn over Q
inline std::vector<Element> gens(int n, const std::string& csv) {
  InputDocument doc =
      parse_input("ring Q[x1..x" + std::to_string(n) + "]\nideal I = " + csv + "\n");
  Context ctx = ring_ctx(n);
  std::vector<Element> out;
  for (const RawPoly& p : doc.objects.at(0).gens) out.push_back(materialize(ctx, p));
  return out;
}

inline Monomial mono(int n, const std::string& text) {
  std::vector<Element> g = gens(n, text);
  return g.at(0).lt().m;
}

inline MonIdeal mon(int n, const std::string& csv) {
  std::vector<Monomial> ms;
  for (const Element& e : gens(n, csv)) ms.push_back(e.lt().m);
  return MonIdeal(n, std::move(ms));
}

inline ModulePresentation pres(int n, const std::string& csv) {
  ModulePresentation M;
  M.field = FieldSpec::rationals();
  M.layout = FreeModuleLayout::ring(n);
  M.gens = gens(n, csv);
  return M;
}

inline ModulePresentation pres_of(FieldSpec k, const MonIdeal& I) {
  return ModulePresentation::cyclic(k, I);
}

// random monomial ideal: up to `max_gens` generators of degree <= max_deg
inline MonIdeal random_mon_ideal(Rng& rng, int n, int max_gens, int max_deg) {
  std::vector<Monomial> ms;
  int g = 1 + (int)rng.uniform(0, max_gens - 1);
  for (int t = 0; t < g; ++t) {
    int d = 1 + (int)rng.uniform(0, max_deg - 1);
    Monomial m(n);
    for (int j = 0; j < d; ++j) {
      int v = (int)rng.uniform(0, n - 1);
      m.e[v] += 1;
      m.deg += 1;
    }
    ms.push_back(std::move(m));
  }
  return MonIdeal(n, std::move(ms));
}

}  // namespace th
