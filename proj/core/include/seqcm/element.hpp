#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqcm/field.hpp"
#include "seqcm/order.hpp"

namespace seqcm {

// Element of a graded free module: terms sorted strictly decreasing under the
// order of the Context that produced it.
struct Element {
  std::vector<std::pair<ModTerm, mpq_class>> terms;

  bool is_zero() const { return terms.empty(); }
  const ModTerm& lt() const { return terms.front().first; }
  const mpq_class& lc() const { return terms.front().second; }

  bool operator==(const Element&) const = default;
};

// Bundle of field, layout and order; all element arithmetic goes through it.
struct Context {
  FieldSpec field;
  FreeModuleLayout layout;
  MonomialOrder order;
  int degree_cap = 64;

  Context() = default;
  Context(FieldSpec k, FreeModuleLayout L, MonomialOrder o)
      : field(k), layout(std::move(L)), order(std::move(o)) {}

  static Context ring(FieldSpec k, int n) {
    return Context(k, FreeModuleLayout::ring(n), MonomialOrder::degrevlex(n));
  }

  int cmp(const ModTerm& a, const ModTerm& b) const { return compare(order, layout, a, b); }

  Element make(std::vector<std::pair<ModTerm, mpq_class>> terms) const;
  Element term(ModTerm t, mpq_class c = mpq_class(1)) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element scale(const mpq_class& c, const Element& a) const;
  // a * (c * m), component preserved.
  Element term_mul(const mpq_class& c, const Monomial& m, const Element& a) const;
  Element monic(const Element& a) const;

  bool is_homogeneous(const Element& a) const;
  // Degree of a homogeneous nonzero element.
  int degree(const Element& a) const;

  void check_degree_cap(int deg) const;
};

// Product of a ring polynomial (list of (monomial, coeff)) with a module element.
Element ring_mul(const Context& ctx, const std::vector<std::pair<Monomial, mpq_class>>& p,
                 const Element& a);

// Ring-polynomial entry of a at the given component.
std::vector<std::pair<Monomial, mpq_class>> component_entry(const Element& a, int comp);

// Sum of the terms whose rev_r weight vector is maximal (the Z x Z^r leading
// form). Errors on the zero element.
Element initial_form_partial(const Context& ctx, int r, const Element& a);

std::string to_string(const Context& ctx, const Element& a);

}  // namespace seqcm
