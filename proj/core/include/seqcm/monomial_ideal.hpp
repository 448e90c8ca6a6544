#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqcm/monomial.hpp"

namespace seqcm {

// Monomial ideal in k[x1..xn], kept as its unique minimal generating set,
// sorted. gens empty = zero ideal; the unit ideal is generated by 1.
struct MonIdeal {
  int n = 0;
  std::vector<Monomial> gens;

  MonIdeal() = default;
  explicit MonIdeal(int nvars) : n(nvars) {}
  MonIdeal(int nvars, std::vector<Monomial> g);

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const { return gens.size() == 1 && gens[0].is_one(); }

  static MonIdeal zero(int n) { return MonIdeal(n); }
  static MonIdeal unit(int n) { return MonIdeal(n, {Monomial::one(n)}); }
  // prime ideal generated by the variables with the given 1-based indices
  static MonIdeal variable_prime(int n, const std::vector<int>& vars);

  bool operator==(const MonIdeal&) const = default;
};

bool contains(const MonIdeal& I, const Monomial& m);
bool contains(const MonIdeal& I, const MonIdeal& J);  // J subset of I
MonIdeal sum(const MonIdeal& I, const MonIdeal& J);
MonIdeal intersect(const MonIdeal& I, const MonIdeal& J);
MonIdeal colon(const MonIdeal& I, const Monomial& m);
MonIdeal colon(const MonIdeal& I, const MonIdeal& J);
// I : m^infinity by exponent truncation of the variable(s) of m.
MonIdeal saturate(const MonIdeal& I, const Monomial& m);
MonIdeal saturate(const MonIdeal& I, const MonIdeal& J);
// Support of the radical's minimal primes via the irreducible decomposition.
MonIdeal radical(const MonIdeal& I);

// Irredundant irreducible decomposition; components are generated by pure
// powers of variables. The unit ideal yields an empty list; the zero ideal is
// not irreducible-decomposable and is rejected.
std::vector<MonIdeal> irreducible_decomposition(const MonIdeal& I);

// Associated primes of R/I as sorted lists of 1-based variable indices.
// Proper nonzero I only.
std::vector<std::vector<int>> associated_primes(const MonIdeal& I);

// Krull dimension of R/I: n - min height of an associated prime; -1 for the
// unit ideal (zero module), n for the zero ideal.
int dimension_mod(const MonIdeal& I);

std::string to_string(const MonIdeal& I);

}  // namespace seqcm
