#include "seqcm/filtration.hpp"

#include <algorithm>
#include <stdexcept>

#include "seqcm/resolution.hpp"

namespace seqcm {

MonModule MonModule::from_terms(const FreeModuleLayout& L, const std::vector<ModTerm>& gens) {
  MonModule U;
  U.layout = L;
  U.comps.assign(L.rank(), MonIdeal(L.nvars));
  std::vector<std::vector<Monomial>> per(L.rank());
  for (const ModTerm& t : gens) {
    if (t.comp < 0 || t.comp >= L.rank())
      throw std::invalid_argument("component index out of range");
    per[t.comp].push_back(t.m);
  }
  for (int j = 0; j < L.rank(); ++j) U.comps[j] = MonIdeal(L.nvars, std::move(per[j]));
  return U;
}

MonModule MonModule::from_ideal(const MonIdeal& I) {
  MonModule U;
  U.layout = FreeModuleLayout::ring(I.n);
  U.comps = {I};
  return U;
}

std::vector<ModTerm> MonModule::term_gens() const {
  std::vector<ModTerm> out;
  for (int j = 0; j < layout.rank(); ++j)
    for (const Monomial& m : comps[j].gens) out.push_back(ModTerm{j, m});
  return out;
}

ModulePresentation quotient_presentation(FieldSpec k, const MonModule& U) {
  ModulePresentation M;
  M.field = k;
  M.layout = U.layout;
  Context ctx = M.context();
  for (const ModTerm& t : U.term_gens()) M.gens.push_back(ctx.term(t));
  return M;
}

std::vector<std::vector<int>> associated_primes(const MonModule& U) {
  std::vector<std::vector<int>> primes;
  for (const MonIdeal& I : U.comps) {
    if (I.is_unit()) continue;  // zero summand
    if (I.is_zero()) {
      primes.push_back({});  // free summand: the zero prime
      continue;
    }
    for (auto& p : associated_primes(I)) primes.push_back(std::move(p));
  }
  std::sort(primes.begin(), primes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

int dimension_mod(const MonModule& U) {
  int d = -1;
  for (const MonIdeal& I : U.comps) d = std::max(d, dimension_mod(I));
  return d;
}

MonIdeal product(const MonIdeal& I, const MonIdeal& J) {
  std::vector<Monomial> g;
  for (const Monomial& a : I.gens)
    for (const Monomial& b : J.gens) g.push_back(mul(a, b));
  return MonIdeal(I.n, std::move(g));
}

MonModule bracket(const MonModule& U, int i) {
  int n = U.layout.nvars;
  MonIdeal a = MonIdeal::unit(n);
  for (const auto& p : associated_primes(U)) {
    int dim = n - (int)p.size();
    if (dim <= i) a = product(a, MonIdeal::variable_prime(n, p));
  }
  MonModule out = U;
  if (a.is_unit()) return out;
  for (MonIdeal& I : out.comps) I = saturate(I, a);
  return out;
}

DimensionFiltration dimension_filtration(FieldSpec k, const MonModule& U) {
  DimensionFiltration F;
  F.d = dimension_mod(U);
  if (F.d < 0) return F;  // zero module: empty filtration
  Context ctx = quotient_presentation(k, U).context();
  MonModule prev = U;  // U^{<-1>} = U
  for (int i = 0; i <= F.d; ++i) {
    FiltrationStep step;
    step.i = i;
    step.bracket = bracket(U, i);
    std::vector<Element> outer, inner;
    for (const ModTerm& t : step.bracket.term_gens()) outer.push_back(ctx.term(t));
    for (const ModTerm& t : prev.term_gens()) inner.push_back(ctx.term(t));
    ModulePresentation Q = subquotient(ctx, outer, inner);
    minimize_presentation(Q);
    step.quotient_hilbert = hilbert_series(Q);
    step.quotient_zero = step.quotient_hilbert.is_zero();
    step.quotient_dim = step.quotient_zero ? -1 : step.quotient_hilbert.pole;
    step.quotient_cm = is_cohen_macaulay(Q);
    if (!step.quotient_zero && step.quotient_dim != i) step.quotient_cm = false;
    prev = step.bracket;
    F.steps.push_back(std::move(step));
  }
  return F;
}

int max_variable(const MonIdeal& I) {
  int m = 0;
  for (const Monomial& g : I.gens) {
    auto s = support(g);
    if (!s.empty()) m = std::max(m, s.back());
  }
  return m;
}

bool is_weakly_stable(const MonIdeal& I, std::optional<WeaklyStableWitness>* witness) {
  if (witness) witness->reset();
  // saturations with respect to each variable, computed once
  std::vector<MonIdeal> sat;
  for (int j = 1; j <= I.n; ++j) sat.push_back(saturate(I, Monomial::var(I.n, j)));
  for (const Monomial& u : I.gens)
    for (int i : support(u)) {
      Monomial v = u;
      v.deg -= v.e[i - 1];
      v.e[i - 1] = 0;
      for (int j = 1; j < i; ++j)
        if (!contains(sat[j - 1], v)) {
          if (witness) *witness = WeaklyStableWitness{u, i, j};
          return false;
        }
    }
  return true;
}

std::vector<MonIdeal> weakly_stable_filtration(const MonIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("filtration of the zero ideal");
  std::vector<MonIdeal> chain{I};
  while (!chain.back().is_unit()) {
    int m = max_variable(chain.back());
    if (m == 0) throw std::logic_error("proper ideal with no variables");
    MonIdeal next = saturate(chain.back(), Monomial::var(I.n, m));
    if (next == chain.back())
      throw std::logic_error("saturation chain stalled; input is not weakly stable");
    chain.push_back(std::move(next));
  }
  return chain;
}

}  // namespace seqcm
