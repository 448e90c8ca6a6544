#pragma once

#include <cstdint>
#include <map>

#include "seqcm/hilbert.hpp"
#include "seqcm/monomial_ideal.hpp"

namespace seqcm {

// Simplicial complex on vertices 1..n (n <= 16), faces stored as bitmasks.
// Distinguishes the void complex (no faces at all) from {emptyset}.
struct SimplicialComplex {
  int n = 0;
  bool is_void = false;
  std::vector<uint32_t> facets;  // maximal faces; empty and !is_void = {emptyset}

  static SimplicialComplex void_complex(int n);
  static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facets);
  static SimplicialComplex full_simplex(int n);

  // -1 for {emptyset}; rejected for the void complex.
  int dim() const;
  bool has_face(uint32_t f) const;
  std::vector<uint32_t> faces() const;  // all faces including the empty face
  bool is_pure() const;

  bool operator==(const SimplicialComplex&) const = default;
};

// Stanley-Reisner ideal: generated by the minimal non-faces; the unit ideal
// for the void complex.
MonIdeal stanley_reisner_ideal(const SimplicialComplex& D);
// Inverse: complex of a squarefree monomial ideal.
SimplicialComplex complex_of_ideal(const MonIdeal& I);

SimplicialComplex pure_skeleton(const SimplicialComplex& D, int i);
SimplicialComplex link(const SimplicialComplex& D, uint32_t face);
SimplicialComplex alexander_dual(const SimplicialComplex& D);

// Dimensions of reduced simplicial homology over the coefficient field,
// indexed -1..dim. Empty map for the void complex.
std::map<int, int> reduced_homology(const SimplicialComplex& D, const FieldSpec& k);

// Reisner criterion for Cohen-Macaulayness of k[D].
bool is_cm_reisner(const SimplicialComplex& D, const FieldSpec& k);

// All pure skeletons Cohen-Macaulay.
bool is_scm_duval(const SimplicialComplex& D, const FieldSpec& k);

// Every degree component generates an ideal with linear resolution.
bool is_componentwise_linear(FieldSpec k, const MonIdeal& I);

// Hilbert series of the i-th local cohomology of k[D], straight from the
// homology of links.
LCHilbert hochster_lc(const SimplicialComplex& D, int i, const FieldSpec& k);

std::string to_string(const SimplicialComplex& D);

}  // namespace seqcm
