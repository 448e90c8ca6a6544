#include "seqcm/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "seqcm/lexideal.hpp"
#include "seqcm/resolution.hpp"

namespace seqcm {

namespace {

void check_vertices(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("vertex count must be in 1..16");
}

std::vector<uint32_t> maximalize(std::vector<uint32_t> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<uint32_t> out;
  for (uint32_t f : faces) {
    bool covered = false;
    for (uint32_t g : faces)
      if (g != f && (f & g) == f) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [](uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa > pb;
    return a < b;
  });
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(int n) {
  check_vertices(n);
  SimplicialComplex D;
  D.n = n;
  D.is_void = true;
  return D;
}

SimplicialComplex SimplicialComplex::from_facets(int n,
                                                 const std::vector<std::vector<int>>& facets) {
  check_vertices(n);
  SimplicialComplex D;
  D.n = n;
  std::vector<uint32_t> fs;
  for (const auto& f : facets) {
    uint32_t mask = 0;
    for (int v : f) {
      if (v < 1 || v > n) throw std::invalid_argument("vertex out of range");
      mask |= 1u << (v - 1);
    }
    fs.push_back(mask);
  }
  D.facets = maximalize(std::move(fs));
  // a single empty facet means {emptyset}
  if (D.facets.size() == 1 && D.facets[0] == 0) D.facets.clear();
  return D;
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
  check_vertices(n);
  SimplicialComplex D;
  D.n = n;
  D.facets = {(uint32_t)((1u << n) - 1)};
  return D;
}

int SimplicialComplex::dim() const {
  if (is_void) throw std::invalid_argument("dimension of the void complex");
  int d = -1;
  for (uint32_t f : facets) d = std::max(d, std::popcount(f) - 1);
  return d;
}

bool SimplicialComplex::has_face(uint32_t f) const {
  if (is_void) return false;
  if (f == 0) return true;
  for (uint32_t g : facets)
    if ((f & g) == f) return true;
  return false;
}

std::vector<uint32_t> SimplicialComplex::faces() const {
  if (is_void) return {};
  std::set<uint32_t> fs{0};
  for (uint32_t f : facets) {
    // all subsets of f
    uint32_t s = f;
    for (;;) {
      fs.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  return {fs.begin(), fs.end()};
}

bool SimplicialComplex::is_pure() const {
  if (is_void || facets.empty()) return true;
  int d = dim();
  for (uint32_t f : facets)
    if (std::popcount(f) - 1 != d) return false;
  return true;
}

MonIdeal stanley_reisner_ideal(const SimplicialComplex& D) {
  if (D.is_void) return MonIdeal::unit(D.n);
  std::vector<Monomial> gens;
  // minimal non-faces: subsets not in D all of whose proper subsets are in D
  for (uint32_t s = 1; s < (1u << D.n); ++s) {
    if (D.has_face(s)) continue;
    bool minimal = true;
    for (int v = 0; v < D.n && minimal; ++v)
      if ((s >> v) & 1)
        if (!D.has_face(s & ~(1u << v))) minimal = false;
    if (!minimal) continue;
    Monomial m(D.n);
    for (int v = 0; v < D.n; ++v)
      if ((s >> v) & 1) {
        m.e[v] = 1;
        ++m.deg;
      }
    gens.push_back(std::move(m));
  }
  return MonIdeal(D.n, std::move(gens));
}

SimplicialComplex complex_of_ideal(const MonIdeal& I) {
  check_vertices(I.n);
  for (const Monomial& g : I.gens)
    if (!is_squarefree(g)) throw std::invalid_argument("ideal is not squarefree");
  if (I.is_unit()) return SimplicialComplex::void_complex(I.n);
  SimplicialComplex D;
  D.n = I.n;
  std::vector<uint32_t> faces;
  for (uint32_t s = 0; s < (1u << I.n); ++s) {
    Monomial m(I.n);
    for (int v = 0; v < I.n; ++v)
      if ((s >> v) & 1) {
        m.e[v] = 1;
        ++m.deg;
      }
    if (!contains(I, m)) faces.push_back(s);
  }
  D.facets = maximalize(std::move(faces));
  if (D.facets.size() == 1 && D.facets[0] == 0) D.facets.clear();
  return D;
}

SimplicialComplex pure_skeleton(const SimplicialComplex& D, int i) {
  if (D.is_void) throw std::invalid_argument("skeleton of the void complex");
  if (i < -1 || i > D.dim()) throw std::invalid_argument("skeleton dimension out of range");
  SimplicialComplex S;
  S.n = D.n;
  if (i == -1) return S;  // {emptyset}
  std::vector<uint32_t> fs;
  for (uint32_t f : D.faces())
    if (std::popcount(f) == i + 1) fs.push_back(f);
  S.facets = maximalize(std::move(fs));
  return S;
}

SimplicialComplex link(const SimplicialComplex& D, uint32_t face) {
  if (!D.has_face(face)) throw std::invalid_argument("link of a non-face");
  SimplicialComplex L;
  L.n = D.n;
  std::vector<uint32_t> fs;
  for (uint32_t f : D.facets)
    if ((face & f) == face) fs.push_back(f & ~face);
  L.facets = maximalize(std::move(fs));
  if (L.facets.size() == 1 && L.facets[0] == 0) L.facets.clear();
  return L;
}

SimplicialComplex alexander_dual(const SimplicialComplex& D) {
  uint32_t full = (1u << D.n) - 1;
  if (D.is_void) return SimplicialComplex::full_simplex(D.n);
  MonIdeal I = stanley_reisner_ideal(D);
  if (I.is_zero()) return SimplicialComplex::void_complex(D.n);
  SimplicialComplex A;
  A.n = D.n;
  std::vector<uint32_t> fs;
  for (const Monomial& g : I.gens) {
    uint32_t s = 0;
    for (int v = 0; v < D.n; ++v)
      if (g.e[v] > 0) s |= 1u << v;
    fs.push_back(full & ~s);
  }
  A.facets = maximalize(std::move(fs));
  if (A.facets.size() == 1 && A.facets[0] == 0) A.facets.clear();
  return A;
}

namespace {

int matrix_rank(const FieldSpec& k, std::vector<std::vector<mpq_class>> m) {
  if (m.empty() || m[0].empty()) return 0;
  int rows = (int)m.size(), cols = (int)m[0].size();
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (field::normalize(k, m[r][col]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    mpq_class inv = field::inv(k, m[rank][col]);
    for (int c = col; c < cols; ++c) m[rank][c] = field::mul(k, m[rank][c], inv);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      mpq_class f = field::normalize(k, m[r][col]);
      if (f == 0) continue;
      for (int c = col; c < cols; ++c)
        m[r][c] = field::sub(k, m[r][c], field::mul(k, f, m[rank][c]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::map<int, int> reduced_homology(const SimplicialComplex& D, const FieldSpec& k) {
  std::map<int, int> h;
  if (D.is_void) return h;
  int d = D.dim();
  // faces grouped by dimension
  std::vector<std::vector<uint32_t>> by_dim(d + 2);  // index i+1 for dimension i
  for (uint32_t f : D.faces()) by_dim[std::popcount(f)].push_back(f);
  for (auto& v : by_dim) std::sort(v.begin(), v.end());
  // rank of the boundary map C_i -> C_{i-1}
  auto boundary_rank = [&](int i) -> int {
    if (i < 0 || i > d) return 0;
    const auto& dom = by_dim[i + 1];
    const auto& cod = by_dim[i];
    if (dom.empty() || cod.empty()) return 0;
    std::vector<std::vector<mpq_class>> m(cod.size(), std::vector<mpq_class>(dom.size(), 0));
    for (size_t c = 0; c < dom.size(); ++c) {
      uint32_t f = dom[c];
      int sign = 1;
      for (int v = 0; v < D.n; ++v)
        if ((f >> v) & 1) {
          uint32_t sub = f & ~(1u << v);
          auto it = std::lower_bound(cod.begin(), cod.end(), sub);
          m[it - cod.begin()][c] = sign;
          sign = -sign;
        }
    }
    return matrix_rank(k, std::move(m));
  };
  std::vector<int> brank(d + 2, 0);
  for (int i = 0; i <= d; ++i) brank[i + 1] = boundary_rank(i);
  for (int i = -1; i <= d; ++i) {
    int ci = (int)by_dim[i + 1].size();
    h[i] = ci - brank[i + 1] - (i + 2 <= d + 1 ? brank[i + 2] : 0);
  }
  return h;
}

bool is_cm_reisner(const SimplicialComplex& D, const FieldSpec& k) {
  if (D.is_void) return true;  // zero module
  for (uint32_t f : D.faces()) {
    SimplicialComplex L = link(D, f);
    int dl = L.dim();
    for (const auto& [i, dim_h] : reduced_homology(L, k))
      if (i < dl && dim_h != 0) return false;
  }
  return true;
}

bool is_scm_duval(const SimplicialComplex& D, const FieldSpec& k) {
  if (D.is_void) return true;
  int d = D.dim();
  for (int i = 0; i <= d; ++i)
    if (!is_cm_reisner(pure_skeleton(D, i), k)) return false;
  return true;
}

bool is_componentwise_linear(FieldSpec k, const MonIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("componentwise linearity needs a proper nonzero ideal");
  int lo = I.gens.front().deg, hi = I.gens.back().deg;  // gens sorted by degree
  for (int d = lo; d <= hi; ++d) {
    std::vector<Monomial> comp;
    for (const Monomial& m : monomials_of_degree(I.n, d))
      if (contains(I, m)) comp.push_back(m);
    if (comp.empty()) continue;
    MonIdeal Id(I.n, std::move(comp));
    ModulePresentation M = ModulePresentation::cyclic(k, Id);
    if (regularity(M) != d - 1) return false;
  }
  return true;
}

LCHilbert hochster_lc(const SimplicialComplex& D, int i, const FieldSpec& k) {
  LCHilbert total;
  if (D.is_void) return total;
  for (uint32_t f : D.faces()) {
    int fsize = std::popcount(f);
    SimplicialComplex L = link(D, f);
    auto h = reduced_homology(L, k);
    auto it = h.find(i - fsize - 1);
    if (it == h.end() || it->second == 0) continue;
    LCHilbert part{{{0, mpz_class(it->second)}}, fsize};
    total = add(total, part);
  }
  return total;
}

std::string to_string(const SimplicialComplex& D) {
  if (D.is_void) return "void";
  if (D.facets.empty()) return "{}";
  std::string s;
  for (uint32_t f : D.facets) {
    if (!s.empty()) s += " ";
    s += "{";
    bool first = true;
    for (int v = 0; v < D.n; ++v)
      if ((f >> v) & 1) {
        if (!first) s += ",";
        s += std::to_string(v + 1);
        first = false;
      }
    s += "}";
  }
  return s;
}

}  // namespace seqcm
