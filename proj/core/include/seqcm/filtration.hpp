#pragma once

#include <optional>

#include "seqcm/hilbert.hpp"
#include "seqcm/monomial_ideal.hpp"

namespace seqcm {

// Monomial submodule of a graded free module, stored componentwise:
// U = I_1 e_1 + ... + I_r e_r.
struct MonModule {
  FreeModuleLayout layout;
  std::vector<MonIdeal> comps;

  static MonModule from_terms(const FreeModuleLayout& L, const std::vector<ModTerm>& gens);
  static MonModule from_ideal(const MonIdeal& I);

  std::vector<ModTerm> term_gens() const;
  bool operator==(const MonModule&) const = default;
};

ModulePresentation quotient_presentation(FieldSpec k, const MonModule& U);

// Associated primes of F/U as variable index sets; the empty set stands for
// the zero prime (free summands).
std::vector<std::vector<int>> associated_primes(const MonModule& U);

int dimension_mod(const MonModule& U);

// U^{<i>} = U : a_i^infinity, a_i the product of the associated primes of
// dimension at most i (the unit ideal when there are none).
MonModule bracket(const MonModule& U, int i);

// Dimension filtration delta_0 <= ... <= delta_d of F/U, delta_i represented
// by its preimage U^{<i>}.
struct FiltrationStep {
  int i = 0;
  MonModule bracket;        // U^{<i>}
  bool quotient_zero = true;    // delta_i / delta_{i-1}
  bool quotient_cm = true;
  int quotient_dim = -1;
  HilbertSeries quotient_hilbert;
};

struct DimensionFiltration {
  int d = -1;
  std::vector<FiltrationStep> steps;  // i = 0..d
};

DimensionFiltration dimension_filtration(FieldSpec k, const MonModule& U);

// Largest variable index appearing in a minimal generator.
int max_variable(const MonIdeal& I);

struct WeaklyStableWitness {
  Monomial gen;
  int i = 0;  // variable dividing gen
  int j = 0;  // smaller variable with no power working
};

bool is_weakly_stable(const MonIdeal& I, std::optional<WeaklyStableWitness>* witness = nullptr);

// Chain I = J_0 subset J_1 subset ... subset (1) with
// J_{k+1} = J_k : x_{m(J_k)}^infinity; defined for weakly stable ideals.
std::vector<MonIdeal> weakly_stable_filtration(const MonIdeal& I);

MonIdeal product(const MonIdeal& I, const MonIdeal& J);

}  // namespace seqcm
