#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "seqcm/coordchange.hpp"
#include "seqcm/element.hpp"

namespace seqcm {

// Reduced Groebner basis of the submodule generated by gens (all homogeneous).
// Output is monic, interreduced, sorted with decreasing leading terms.
std::vector<Element> buchberger(const Context& ctx, std::vector<Element> gens);

// Full normal form of f modulo a Groebner basis.
Element normal_form(const Context& ctx, const Element& f, const std::vector<Element>& gb);

// Leading terms of a reduced Groebner basis: the minimal monomial generators
// of the initial module.
std::vector<ModTerm> initial_module(const Context& ctx, const std::vector<Element>& gens);

// rev_r-initial forms of a Groebner basis computed under the rev_r-refined
// order; generates the Z x Z^r graded initial module.
std::vector<Element> initial_module_partial(const Context& ctx, int r,
                                            const std::vector<Element>& gens);

// Syzygy module of the given generators: relations (a_1..a_t) with
// sum a_i gens_i = 0, as elements of a rank-t free module whose basis degrees
// are the degrees of the generators. Returned as a Groebner basis.
struct SyzygyResult {
  FreeModuleLayout layout;  // rank = #gens
  std::vector<Element> gens;
};
SyzygyResult syzygies(const Context& ctx, const std::vector<Element>& gens);

// Groebner basis maintained across insertions; add() reports whether the new
// element enlarged the submodule.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(const Context& ctx);
  ~IncrementalBasis();
  IncrementalBasis(IncrementalBasis&&) noexcept;

  bool add(const Element& f);
  const std::vector<Element>& basis() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Does f lie in the submodule generated by gens; if so, fills coeffs with a
// representation f = sum coeffs_i gens_i (ring polynomials).
bool lift(const Context& ctx, const Element& f, const std::vector<Element>& gens,
          std::vector<std::vector<std::pair<Monomial, mpq_class>>>* coeffs = nullptr);

// U : f for a ring element f (given as polynomial terms).
std::vector<Element> colon_by(const Context& ctx, const std::vector<Element>& gens,
                              const std::vector<std::pair<Monomial, mpq_class>>& f);

// U : f^infinity, by iterating colon until the reduced basis stabilises.
std::vector<Element> saturate_by(const Context& ctx, const std::vector<Element>& gens,
                                 const std::vector<std::pair<Monomial, mpq_class>>& f);

// Intersection of two submodules of the same free module.
std::vector<Element> intersect_modules(const Context& ctx, const std::vector<Element>& a,
                                       const std::vector<Element>& b);

// Generic initial module. Runs `trials` independent random changes of
// coordinates (coefficients uniform in [-bound, bound] \ {0}) and demands that
// all trials agree; disagreement raises GinDisagreement. For r < n the change
// fixes x_1..x_{n-r} and the rev_r-refined order is used; for r = n this is
// the classical gin under degree reverse lexicographic order.
struct GinResult {
  std::vector<Element> gens;  // reduced basis of the initial module
  int r = 0;
  int trials_agreed = 0;
  int trials_total = 0;
  uint64_t seed = 0;
};

struct GinDisagreement : std::runtime_error {
  std::vector<std::vector<Element>> candidates;
  explicit GinDisagreement(std::vector<std::vector<Element>> c)
      : std::runtime_error(
            "random coordinate changes disagree on the generic initial module; "
            "raise the trial count or the coefficient bound"),
        candidates(std::move(c)) {}
};

GinResult gin(const Context& ctx, const std::vector<Element>& gens, int trials, uint64_t seed,
              long bound = 997);

// One initial module per random trial, each a reduced basis of the rev_r
// initial forms of gU for an independent change g fixing x_1..x_{n-r}.
// For r < n the submodule itself varies with g; only generic properties are
// shared, so callers compare the invariants they need across the candidates.
std::vector<std::vector<Element>> gin_partial_candidates(const Context& ctx, int r,
                                                         const std::vector<Element>& gens,
                                                         int trials, uint64_t seed,
                                                         long bound = 997);

}  // namespace seqcm
