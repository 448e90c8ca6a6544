#include "seqcm/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace seqcm {

Monomial::Monomial(std::vector<int32_t> exps) : e(std::move(exps)) {
  for (int32_t x : e) {
    if (x < 0) throw std::invalid_argument("negative exponent");
    deg += x;
  }
}

Monomial Monomial::var(int n, int i, int32_t power) {
  if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
  Monomial m(n);
  m.e[i - 1] = power;
  m.deg = power;
  return m;
}

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
  r.deg += b.deg;
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r = b;
  for (size_t i = 0; i < r.e.size(); ++i) {
    r.e[i] -= a.e[i];
    if (r.e[i] < 0) throw std::invalid_argument("monomial quotient is not a monomial");
  }
  r.deg -= a.deg;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.deg = 0;
  for (size_t i = 0; i < r.e.size(); ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.deg = 0;
  for (size_t i = 0; i < r.e.size(); ++i) {
    r.e[i] = std::min(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

std::vector<int> support(const Monomial& a) {
  std::vector<int> s;
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0) s.push_back((int)i + 1);
  return s;
}

bool is_squarefree(const Monomial& a) {
  for (int32_t x : a.e)
    if (x > 1) return false;
  return true;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

bool revlex_less(const Monomial& a, const Monomial& b) {
  for (size_t i = a.e.size(); i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

std::string to_string(const Monomial& a) {
  if (a.is_one()) return "1";
  std::string s;
  for (size_t i = 0; i < a.e.size(); ++i) {
    if (a.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (a.e[i] > 1) s += "^" + std::to_string(a.e[i]);
  }
  return s;
}

}  // namespace seqcm
