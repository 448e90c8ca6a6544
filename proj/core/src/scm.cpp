#include "seqcm/scm.hpp"

#include <algorithm>
#include <stdexcept>

#include "seqcm/lexideal.hpp"

namespace seqcm {

namespace {

std::string join_indices(const std::vector<int>& v) {
  std::string s;
  for (int i : v) {
    if (!s.empty()) s += ",";
    s += std::to_string(i);
  }
  return s;
}

std::vector<int> deficiency_failures(const ModulePresentation& M, int from, int to) {
  int n = M.layout.nvars;
  std::vector<int> failing;
  for (int i = std::max(from, 0); i <= to; ++i) {
    ModulePresentation E = ext_module(M, n - i);
    if (is_zero_module(E)) continue;
    if (depth_mod(E) != i || dimension(E) != i) failing.push_back(i);
  }
  return failing;
}

RouteResult peskine_from(const ModulePresentation& M, int from) {
  int d = dimension(M);
  RouteResult r;
  if (d < 0) {
    r.verdict = true;
    r.certificate = "zero module";
    return r;
  }
  std::vector<int> failing = deficiency_failures(M, from, d);
  r.verdict = failing.empty();
  if (from <= 0) {
    // restricted variant: indices 1..d-1 must reach the same verdict
    bool restricted = deficiency_failures(M, 1, d - 1).empty();
    if (restricted != r.verdict)
      throw std::logic_error("full and restricted deficiency criteria disagree");
  }
  r.certificate = r.verdict ? "all deficiency modules Cohen-Macaulay"
                            : "deficiency modules fail at i=" + join_indices(failing);
  return r;
}

RouteResult schenzel_from(FieldSpec k, const MonModule& U, int from) {
  DimensionFiltration F = dimension_filtration(k, U);
  RouteResult r;
  std::vector<int> failing;
  for (const FiltrationStep& s : F.steps) {
    if (s.i < from) continue;
    if (!s.quotient_zero && !s.quotient_cm) failing.push_back(s.i);
  }
  r.verdict = failing.empty();
  r.certificate = r.verdict ? "filtration quotients Cohen-Macaulay"
                            : "filtration quotients fail at i=" + join_indices(failing);
  return r;
}

RouteResult gin_from(const ModulePresentation& M, int from, int trials, uint64_t seed) {
  Context ctx = M.context();
  int d = dimension(M);
  RouteResult r;
  if (d < 0) {
    r.verdict = true;
    r.certificate = "zero module";
    return r;
  }
  GinResult G = gin(ctx, M.gens, trials, seed);
  ModulePresentation MG = M;
  MG.gens = G.gens;
  std::vector<int> failing;
  for (int i = std::max(from, 0); i <= d; ++i)
    if (lc_hilbert(M, i) != lc_hilbert(MG, i)) failing.push_back(i);
  r.verdict = failing.empty();
  r.certificate = r.verdict
                      ? "local cohomology preserved by the generic initial module"
                      : "local cohomology changes at i=" + join_indices(failing);
  return r;
}

ScmReport aggregate(const ModulePresentation& M, int from,
                    const std::optional<MonModule>& monomial,
                    const std::vector<std::string>& routes, int trials, uint64_t seed) {
  ScmReport rep;
  for (const std::string& name : routes) {
    if (name == "peskine") {
      if (from > 0)
        throw std::invalid_argument(
            "the deficiency route only decides the full property, not partial levels");
      rep.routes[name] = peskine_from(M, from);
    } else if (name == "schenzel") {
      if (!monomial)
        throw std::invalid_argument("the schenzel route needs monomial generators");
      rep.routes[name] = schenzel_from(M.field, *monomial, from);
    } else if (name == "gin") {
      rep.routes[name] = gin_from(M, from, trials, seed);
      rep.probabilistic = true;
    } else {
      throw std::invalid_argument("unknown route: " + name);
    }
  }
  if (rep.routes.empty()) throw std::invalid_argument("no route selected");
  rep.verdict = rep.routes.begin()->second.verdict;
  for (const auto& [name, r] : rep.routes)
    if (r.verdict != rep.verdict)
      throw std::logic_error("routes disagree on sequential Cohen-Macaulayness");
  return rep;
}

}  // namespace

RouteResult scm_peskine(const ModulePresentation& M) { return peskine_from(M, 0); }

RouteResult scm_schenzel(FieldSpec k, const MonModule& U) { return schenzel_from(k, U, 0); }

RouteResult scm_gin(const ModulePresentation& M, int trials, uint64_t seed) {
  return gin_from(M, 0, trials, seed);
}

ScmReport is_scm(const ModulePresentation& M, const std::optional<MonModule>& monomial,
                 const std::vector<std::string>& routes, int trials, uint64_t seed) {
  return aggregate(M, 0, monomial, routes, trials, seed);
}

ScmReport is_i_scm(const ModulePresentation& M, int i,
                   const std::optional<MonModule>& monomial,
                   const std::vector<std::string>& routes, int trials, uint64_t seed) {
  if (i < 0) throw std::invalid_argument("partial index must be nonnegative");
  return aggregate(M, i, monomial, routes, trials, seed);
}

bool edepth_gin_equiv(const ModulePresentation& M, int r, int trials, uint64_t seed) {
  int n = M.layout.nvars;
  if (r < 0 || r > n) throw std::invalid_argument("partial index out of range");
  if (r == 0) return true;
  Context ctx = M.context();
  // for r < n the initial submodule depends on the sampled coordinates, but
  // its local cohomology series do not; demand unanimity at that level
  auto candidates = gin_partial_candidates(ctx, r, M.gens, trials, seed);
  std::vector<LCHilbert> reference;
  bool equal = true;
  for (size_t t = 0; t < candidates.size(); ++t) {
    ModulePresentation MG = M;
    MG.gens = candidates[t];
    for (int i = 0; i <= n; ++i) {
      LCHilbert h = lc_hilbert(MG, i);
      if (t == 0)
        reference.push_back(h);
      else if (h != reference[(size_t)i])
        throw GinDisagreement(std::move(candidates));
    }
  }
  for (int i = 0; i <= n; ++i)
    if (reference[(size_t)i] != lc_hilbert(M, i)) equal = false;
  return equal;
}

EdepthReport edepth(const ModulePresentation& M, bool with_gin_route, int trials,
                    uint64_t seed) {
  if (is_zero_module(M)) throw std::invalid_argument("E-depth of the zero module");
  int n = M.layout.nvars;
  EdepthReport rep;
  int bound = n;
  for (int j = 0; j <= n; ++j) {
    ModulePresentation E = ext_module(M, j);
    if (is_zero_module(E)) {
      rep.ext_depths[j] = DEPTH_INFINITY;
      continue;
    }
    int dep = depth_mod(E);
    rep.ext_depths[j] = dep;
    if (dep < n - j) bound = std::min(bound, dep);
  }
  rep.edepth = bound;
  if (with_gin_route) {
    rep.probabilistic = true;
    int largest = 0;
    for (int r = 1; r <= n; ++r) {
      bool ok = edepth_gin_equiv(M, r, trials, seed);
      rep.gin_checks[r] = ok;
      if (ok) largest = std::max(largest, r);
    }
    if (largest != rep.edepth)
      throw std::logic_error("homological and generic-initial E-depth disagree");
  }
  return rep;
}

namespace {

bool finite_length_mult_kernel(const ModulePresentation& M,
                               const std::vector<std::pair<Monomial, mpq_class>>& l) {
  Context ctx = M.context();
  std::vector<Element> gb = buchberger(ctx, M.gens);
  std::vector<Element> ker = colon_by(ctx, gb, l);
  ModulePresentation K = subquotient(ctx, ker, gb);
  return dimension(K) <= 0;
}

void check_linear(const Context& ctx,
                  const std::vector<std::pair<Monomial, mpq_class>>& l) {
  Element e = ctx.make([&] {
    std::vector<std::pair<ModTerm, mpq_class>> ts;
    for (const auto& [m, c] : l) ts.push_back({ModTerm{0, m}, c});
    return ts;
  }());
  if (e.is_zero() || !ctx.is_homogeneous(e) || e.lt().m.deg != 1)
    throw std::invalid_argument("a homogeneous linear form is required");
}

}  // namespace

bool is_filter_regular(const ModulePresentation& M,
                       const std::vector<std::pair<Monomial, mpq_class>>& l) {
  check_linear(Context::ring(M.field, M.layout.nvars), l);
  return finite_length_mult_kernel(M, l);
}

bool is_strictly_filter_regular(const ModulePresentation& M,
                                const std::vector<std::pair<Monomial, mpq_class>>& l) {
  check_linear(Context::ring(M.field, M.layout.nvars), l);
  int n = M.layout.nvars;
  for (int j = 0; j <= n; ++j) {
    ModulePresentation E = ext_module(M, j);
    if (is_zero_module(E)) continue;
    if (!finite_length_mult_kernel(E, l)) return false;
  }
  return true;
}

LexComparison lex_comparison(FieldSpec k, const MonIdeal& I, int i, int trials,
                             uint64_t seed) {
  if (i < 1) throw std::invalid_argument("cohomological index must be at least 1");
  LexComparison out;
  int n = I.n;
  ModulePresentation M = ModulePresentation::cyclic(k, I);
  out.lex = lex_ideal(n, hilbert_series(I));
  ModulePresentation L = ModulePresentation::cyclic(k, out.lex);
  GinResult G = gin(M.context(), M.gens, trials, seed);
  ModulePresentation MG = M;
  MG.gens = G.gens;
  out.h_ideal = lc_hilbert(M, i);
  out.h_gin = lc_hilbert(MG, i);
  out.h_lex = lc_hilbert(L, i);
  out.eq_ideal_lex = out.h_ideal == out.h_lex;
  out.eq_gin_lex = out.h_gin == out.h_lex;
  out.eq_tail = true;
  for (int j = i; j <= n && out.eq_tail; ++j)
    out.eq_tail = lc_hilbert(M, j) == lc_hilbert(L, j);
  // compare coefficientwise on a window covering all numerators and a tail
  int hi = 0, lo = 0;
  for (const LCHilbert* h : {&out.h_ideal, &out.h_gin, &out.h_lex})
    if (!h->is_zero()) {
      hi = std::max(hi, h->num.rbegin()->first);
      lo = std::min(lo, h->num.begin()->first - h->pole);
    }
  out.window_hi = hi;
  out.window_lo = lo - n - 2;
  out.dominated = true;
  for (int d = out.window_lo; d <= out.window_hi && out.dominated; ++d)
    out.dominated = lc_coefficient(out.h_ideal, d) <= lc_coefficient(out.h_gin, d) &&
                    lc_coefficient(out.h_gin, d) <= lc_coefficient(out.h_lex, d);
  return out;
}

}  // namespace seqcm
