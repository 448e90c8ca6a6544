#pragma once

#include <map>
#include <optional>
#include <string>

#include "seqcm/filtration.hpp"
#include "seqcm/groebner.hpp"
#include "seqcm/resolution.hpp"

namespace seqcm {

struct RouteResult {
  bool verdict = false;
  std::string certificate;
};

struct ScmReport {
  bool verdict = false;
  bool probabilistic = false;  // a generic-coordinates route contributed
  std::map<std::string, RouteResult> routes;
};

// Deficiency-module route: every Ext^{n-i}(M, R(-n)) is zero or
// Cohen-Macaulay of dimension i. Also evaluates the variant restricted to
// 1 <= i <= d-1 and checks that both agree.
RouteResult scm_peskine(const ModulePresentation& M);

// Filtration route for monomial submodules: the dimension filtration has
// Cohen-Macaulay quotients.
RouteResult scm_schenzel(FieldSpec k, const MonModule& U);

// Generic initial route: local cohomology series of F/U and F/Gin(U) agree.
RouteResult scm_gin(const ModulePresentation& M, int trials, uint64_t seed);

// Aggregates the requested routes ("peskine", "schenzel", "gin") and demands
// unanimity; disagreement is a hard error.
ScmReport is_scm(const ModulePresentation& M, const std::optional<MonModule>& monomial,
                 const std::vector<std::string>& routes, int trials, uint64_t seed);

// i-partial variant: conditions only from dimension i upwards. i > d holds
// vacuously.
ScmReport is_i_scm(const ModulePresentation& M, int i,
                   const std::optional<MonModule>& monomial,
                   const std::vector<std::string>& routes, int trials, uint64_t seed);

struct EdepthReport {
  int edepth = 0;
  // depth of Ext^j(M, R) for j = 0..n; DEPTH_INFINITY marks the zero module
  std::map<int, int> ext_depths;
  // r -> whether the partial generic initial module for r preserves all local
  // cohomology series; empty when the gin route was not run
  std::map<int, bool> gin_checks;
  bool probabilistic = false;
};

EdepthReport edepth(const ModulePresentation& M, bool with_gin_route, int trials,
                    uint64_t seed);

// h^i equality between F/U and F/gin_r(U) for one r.
bool edepth_gin_equiv(const ModulePresentation& M, int r, int trials, uint64_t seed);

// Kernel of multiplication by l on M itself has finite length.
bool is_filter_regular(const ModulePresentation& M,
                       const std::vector<std::pair<Monomial, mpq_class>>& l);

// l is strictly filter regular for M: multiplication by l has finite-length
// kernel on every deficiency module.
bool is_strictly_filter_regular(const ModulePresentation& M,
                                const std::vector<std::pair<Monomial, mpq_class>>& l);

struct LexComparison {
  MonIdeal lex;
  LCHilbert h_ideal, h_gin, h_lex;  // local cohomology at the requested index
  bool eq_ideal_lex = false;        // h^i(R/I)    = h^i(R/lex)
  bool eq_gin_lex = false;          // h^i(R/Gin)  = h^i(R/lex)
  bool eq_tail = false;             // h^j(R/I)    = h^j(R/lex) for all j >= i
  bool dominated = true;  // h_ideal <= h_gin <= h_lex coefficientwise, window
  int window_lo = 0, window_hi = 0;
};

LexComparison lex_comparison(FieldSpec k, const MonIdeal& I, int i, int trials,
                             uint64_t seed);

}  // namespace seqcm
