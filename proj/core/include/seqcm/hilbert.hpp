#pragma once

#include <map>

#include "seqcm/element.hpp"
#include "seqcm/groebner.hpp"
#include "seqcm/monomial_ideal.hpp"

namespace seqcm {

// Finitely presented graded module F/U, U generated by gens inside F.
struct ModulePresentation {
  FieldSpec field;
  FreeModuleLayout layout;
  std::vector<Element> gens;
  int degree_cap = 64;

  Context context() const {
    Context c(field, layout, MonomialOrder::degrevlex(layout.nvars));
    c.degree_cap = degree_cap;
    return c;
  }

  static ModulePresentation cyclic(FieldSpec k, const MonIdeal& I);
};

// Hilbert series as num(z)/(1-z)^pole, fully reduced: either num = 0 and
// pole = 0, or num(1) != 0. Numerator exponents may be negative (twists).
struct HilbertSeries {
  std::map<int, mpz_class> num;
  int pole = 0;

  bool is_zero() const { return num.empty(); }
  bool operator==(const HilbertSeries&) const = default;
};

HilbertSeries reduce_series(std::map<int, mpz_class> num, int pole);
mpz_class hilbert_function(const HilbertSeries& H, int d);

// Laurent series at infinity: num(z)/(z-1)^pole, fully reduced. This is the
// shape taken by Hilbert series of local cohomology, supported in degrees
// bounded above.
struct LCHilbert {
  std::map<int, mpz_class> num;
  int pole = 0;

  bool is_zero() const { return num.empty(); }
  bool operator==(const LCHilbert&) const = default;
};

LCHilbert reduce_lc(std::map<int, mpz_class> num, int pole);
LCHilbert add(const LCHilbert& a, const LCHilbert& b);
// Substitute z -> 1/z into a (finite-dimensional-per-degree) Hilbert series:
// the graded dual. Used for local duality.
LCHilbert dualize(const HilbertSeries& H);
mpz_class lc_coefficient(const LCHilbert& h, int d);

// Numerator of Hilb(R/I) over (1-z)^n.
std::map<int, mpz_class> numerator(const MonIdeal& I);

HilbertSeries hilbert_series(const MonIdeal& I);
HilbertSeries hilbert_series(const ModulePresentation& M);

// Krull dimension from the Hilbert series pole order; -1 for the zero module.
int dimension(const ModulePresentation& M);

bool is_zero_module(const ModulePresentation& M);

std::string to_string(const HilbertSeries& H);
std::string to_string(const LCHilbert& h);

}  // namespace seqcm
