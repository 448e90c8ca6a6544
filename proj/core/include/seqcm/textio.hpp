#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "seqcm/element.hpp"
#include "seqcm/simplicial.hpp"

namespace seqcm {

struct ParseError : std::runtime_error {
  int line = 0, col = 0;
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
};

// Generator as written: term list in input order, not yet tied to an order.
struct RawPoly {
  std::vector<std::pair<ModTerm, mpq_class>> terms;
  int line = 0;
};

struct ObjectDecl {
  enum class Kind { Ideal, Module, Complex } kind = Kind::Ideal;
  std::string name;
  FreeModuleLayout layout;  // rank 1 with shift 0 for ideals
  std::vector<RawPoly> gens;
  SimplicialComplex complex;  // only for Kind::Complex
  int line = 0;
};

struct Request {
  enum class Kind { Scm, Iscm, Edepth, Gin, Filtration, HilbLc, LexCmp } kind;
  std::string target;
  int arg = -1;  // iscm level, gin r (-1 = full), hilb-lc / lexcmp index
  int line = 0;
};

struct InputDocument {
  int nvars = 0;
  std::string field_token = "Q";  // Q, or F<p> for a prime field
  std::vector<ObjectDecl> objects;
  std::vector<Request> requests;

  const ObjectDecl* find(const std::string& name) const;
};

// Input language, one statement per line (lines ending in ',', '=', '+', '-'
// or '(' continue on the next; '#' starts a comment):
//   ring Q[x1..x4]
//   ideal I = x1^4, x1^2*x2^2 - x3^4
//   module M in F(0,-1) = x1^2*e1, x2*e2 - x1*e1
//   complex D on 5 = {1,2,3} {1,4}
//   check scm I | check iscm 3 I | check edepth M
//   gin I r=2 | filtration I | hilb-lc I i=2 | lexcmp I i=1
InputDocument parse_input(const std::string& text);

// Canonical printer; print_input(parse_input(s)) is a fixed point.
std::string print_input(const InputDocument& doc);

// Sorts and merges the raw terms under the context's order; rejects
// inhomogeneous or zero results per the declaration's meaning upstream.
Element materialize(const Context& ctx, const RawPoly& p);

std::string to_string(const Request& r);

}  // namespace seqcm
