#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace seqcm {

// Monomial in x1..xn, exponent vector plus cached total degree.
struct Monomial {
  std::vector<int32_t> e;
  int32_t deg = 0;

  Monomial() = default;
  explicit Monomial(int n) : e(n, 0), deg(0) {}
  explicit Monomial(std::vector<int32_t> exps);

  int nvars() const { return (int)e.size(); }
  bool is_one() const { return deg == 0; }

  static Monomial one(int n) { return Monomial(n); }
  static Monomial var(int n, int i, int32_t power = 1);

  bool operator==(const Monomial&) const = default;
};

Monomial mul(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial quotient(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
std::vector<int> support(const Monomial& a);
bool is_squarefree(const Monomial& a);

// Fixed tie-break orders on bare monomials (no grading, no weights).
bool lex_less(const Monomial& a, const Monomial& b);
// Pure reverse lexicographic: a < b iff the last nonzero entry of a-b is positive.
bool revlex_less(const Monomial& a, const Monomial& b);

std::string to_string(const Monomial& a);

}  // namespace seqcm
