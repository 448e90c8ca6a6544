#pragma once

#include <climits>

#include "seqcm/hilbert.hpp"

namespace seqcm {

// Minimal graded free resolution 0 <- F/U <- F_0 <- F_1 <- ... <- F_p <- 0.
// maps[k] lists the images of the basis of F_{k+1} inside F_k.
struct Resolution {
  std::vector<FreeModuleLayout> frees;
  std::vector<std::vector<Element>> maps;

  int length() const { return (int)maps.size(); }
};

// Cancel basis vectors hit by unit entries of the generators; afterwards every
// generator has all entries in the irrelevant maximal ideal.
void minimize_presentation(ModulePresentation& M);

// Minimal generating set of the submodule generated by gens (all homogeneous).
std::vector<Element> minimal_generators(const Context& ctx, std::vector<Element> gens);

Resolution minimal_free_resolution(const ModulePresentation& M);

// Graded Betti numbers beta_{k,d} read off the minimal resolution.
std::map<std::pair<int, int>, int> betti_numbers(const Resolution& R);

// Sentinel for the depth of the zero module.
inline constexpr int DEPTH_INFINITY = INT_MAX;

int depth_mod(const ModulePresentation& M);
int regularity(const ModulePresentation& M);
bool is_cohen_macaulay(const ModulePresentation& M);

// Presentation of <sub_gens> / <inner_gens>; inner_gens must lie inside the
// submodule generated by sub_gens.
ModulePresentation subquotient(const Context& ctx, const std::vector<Element>& sub_gens,
                               const std::vector<Element>& inner_gens);

// Ext^i(F/U, R(-n)) as a finitely presented graded module.
ModulePresentation ext_module(const ModulePresentation& M, int i);

// Hilbert series of the i-th local cohomology of F/U with support in the
// irrelevant maximal ideal, through graded local duality.
LCHilbert lc_hilbert(const ModulePresentation& M, int i);

}  // namespace seqcm
