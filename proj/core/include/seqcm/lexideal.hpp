#pragma once

#include <functional>

#include "seqcm/hilbert.hpp"
#include "seqcm/monomial_ideal.hpp"

namespace seqcm {

// Macaulay upper bound for the next value of an O-sequence: h^{<d>} computed
// through the d-th binomial expansion of h.
mpz_class macaulay_bound(const mpz_class& h, int d);

// Unique lexsegment ideal with the given Hilbert function of the quotient.
// `values` covers degrees 0..values.size()-1; beyond that range the ideal
// receives no new generators. Throws std::invalid_argument when the values
// are not realisable in n variables.
MonIdeal lex_ideal(int n, const std::vector<mpz_class>& values);

// Lexsegment ideal matching a full Hilbert series; construction stops once
// minimal growth persists (no further generators can occur).
MonIdeal lex_ideal(int n, const HilbertSeries& H, int degree_cap = 64);

// All monomials of the given degree, sorted lex descending.
std::vector<Monomial> monomials_of_degree(int n, int d);

}  // namespace seqcm
