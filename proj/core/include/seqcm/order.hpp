#pragma once

#include <cstdint>
#include <vector>

#include "seqcm/layout.hpp"

namespace seqcm {

// Term order on a graded free module. Terms are compared by:
//   0. elimination side, when elim_split >= 0 (components < elim_split win);
//   1. degree including basis shifts, when degree_first;
//   2. the weight rows, lexicographically on first difference;
//   3. the monomial tie-break (pure revlex or lex);
//   4. position: smaller component index is greater.
// rev_r carries the weight rows w_j = -e_{n+1-j}, j = 1..r, so that for r = n
// the comparison coincides with degree reverse lexicographic order.
struct MonomialOrder {
  int nvars = 0;
  std::vector<std::vector<int64_t>> weight_rows;
  enum class Tiebreak { RevLex, Lex };
  Tiebreak tiebreak = Tiebreak::RevLex;
  bool degree_first = true;
  int elim_split = -1;

  static MonomialOrder degrevlex(int n);
  static MonomialOrder lex(int n);
  static MonomialOrder rev_partial(int r, int n);
};

// Strict total comparison: -1, 0 (identical terms), +1.
// Throws std::invalid_argument when the dimensions disagree.
int compare(const MonomialOrder& ord, const FreeModuleLayout& L, const ModTerm& a,
            const ModTerm& b);

enum class PartialCmp { LT, EQ, GT };

// Partial preorder given by the weight rows of rev_r alone; EQ means the two
// monomials share all r weight values (equal in the partial order).
PartialCmp compare_partial(int r, const Monomial& a, const Monomial& b);

// Z x Z^r multidegree of a term: total degree in x1..x_{n-r} plus the basis
// shift first, then the exponents of the last r variables.
std::vector<int> multidegree(int r, const FreeModuleLayout& L, const ModTerm& t);

}  // namespace seqcm
