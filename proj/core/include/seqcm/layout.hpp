#pragma once

#include <stdexcept>
#include <vector>

#include "seqcm/monomial.hpp"

namespace seqcm {

// Graded free module F = R(-s_1) + ... + R(-s_r) over R = k[x1..xn].
// Basis vector e_i has degree shifts[i]; a term m*e_i has degree deg(m)+shifts[i].
struct FreeModuleLayout {
  int nvars = 0;
  std::vector<int> shifts;

  FreeModuleLayout() = default;
  FreeModuleLayout(int n, std::vector<int> s) : nvars(n), shifts(std::move(s)) {
    if (n < 1 || n > 64) throw std::invalid_argument("number of variables must be in 1..64");
  }
  static FreeModuleLayout ring(int n) { return FreeModuleLayout(n, {0}); }

  int rank() const { return (int)shifts.size(); }

  bool operator==(const FreeModuleLayout&) const = default;
};

// Monomial term of a free module: m * e_comp (comp is 0-based).
struct ModTerm {
  int comp = 0;
  Monomial m;

  bool operator==(const ModTerm&) const = default;
};

inline int term_degree(const FreeModuleLayout& L, const ModTerm& t) {
  return t.m.deg + L.shifts[t.comp];
}

std::string to_string(const FreeModuleLayout& L);

}  // namespace seqcm
