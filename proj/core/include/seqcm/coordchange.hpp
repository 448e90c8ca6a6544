#pragma once

#include <vector>

#include "seqcm/element.hpp"
#include "seqcm/rng.hpp"

namespace seqcm {

// Linear change of coordinates x_i -> sum_j mat[i][j] x_j. For partial changes
// (fixed_prefix = n - r) the first rows are the identity.
struct CoordinateChange {
  int n = 0;
  std::vector<std::vector<mpq_class>> mat;

  bool is_invertible(const FieldSpec& k) const;
  CoordinateChange inverse(const FieldSpec& k) const;

  static CoordinateChange identity(int n);
  // Random invertible change; rows < fixed_prefix stay identity. Entries are
  // uniform in [-bound, bound] \ {0}. Redraws until invertible.
  static CoordinateChange random(const FieldSpec& k, int n, int fixed_prefix, Rng& rng,
                                 long bound);
};

// Substitute the change into every term of a module element.
Element apply_change(const Context& ctx, const CoordinateChange& g, const Element& a);

}  // namespace seqcm
