#include "seqcm/coordchange.hpp"

#include <map>
#include <stdexcept>

namespace seqcm {

namespace {

// Gaussian elimination over the field; returns the rank.
int rank_of(const FieldSpec& k, std::vector<std::vector<mpq_class>> m) {
  int n = (int)m.size();
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (field::normalize(k, m[r][col]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    mpq_class inv = field::inv(k, m[rank][col]);
    for (int c = col; c < n; ++c) m[rank][c] = field::mul(k, m[rank][c], inv);
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      mpq_class f = field::normalize(k, m[r][col]);
      if (f == 0) continue;
      for (int c = col; c < n; ++c)
        m[r][c] = field::sub(k, m[r][c], field::mul(k, f, m[rank][c]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool CoordinateChange::is_invertible(const FieldSpec& k) const {
  return rank_of(k, mat) == n;
}

CoordinateChange CoordinateChange::inverse(const FieldSpec& k) const {
  std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = mat[i][j];
    aug[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (field::normalize(k, aug[r][col]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("coordinate change is not invertible");
    std::swap(aug[col], aug[piv]);
    mpq_class inv = field::inv(k, aug[col][col]);
    for (int c = 0; c < 2 * n; ++c) aug[col][c] = field::mul(k, aug[col][c], inv);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      mpq_class f = field::normalize(k, aug[r][col]);
      if (f == 0) continue;
      for (int c = 0; c < 2 * n; ++c)
        aug[r][c] = field::sub(k, aug[r][c], field::mul(k, f, aug[col][c]));
    }
  }
  CoordinateChange g;
  g.n = n;
  g.mat.assign(n, std::vector<mpq_class>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.mat[i][j] = aug[i][n + j];
  return g;
}

CoordinateChange CoordinateChange::identity(int n) {
  CoordinateChange g;
  g.n = n;
  g.mat.assign(n, std::vector<mpq_class>(n, 0));
  for (int i = 0; i < n; ++i) g.mat[i][i] = 1;
  return g;
}

CoordinateChange CoordinateChange::random(const FieldSpec& k, int n, int fixed_prefix,
                                          Rng& rng, long bound) {
  for (;;) {
    CoordinateChange g = identity(n);
    for (int i = fixed_prefix; i < n; ++i)
      for (int j = 0; j < n; ++j)
        g.mat[i][j] = field::normalize(k, mpq_class((long)rng.nonzero(bound)));
    if (g.is_invertible(k)) return g;
  }
}

Element apply_change(const Context& ctx, const CoordinateChange& g, const Element& a) {
  if (g.n != ctx.layout.nvars) throw std::invalid_argument("coordinate change dimension mismatch");
  int n = g.n;
  // images of the variables as ring polynomials
  std::vector<std::vector<std::pair<Monomial, mpq_class>>> img(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mpq_class c = field::normalize(ctx.field, g.mat[i][j]);
      if (c != 0) img[i].emplace_back(Monomial::var(n, j + 1), c);
    }
  // cache of variable powers as ring polynomials
  Context ring = Context::ring(ctx.field, n);
  ring.degree_cap = ctx.degree_cap;
  std::map<std::pair<int, int>, Element> pow_cache;
  auto as_element = [&](const std::vector<std::pair<Monomial, mpq_class>>& p) {
    std::vector<std::pair<ModTerm, mpq_class>> ts;
    for (const auto& [m, c] : p) ts.push_back({ModTerm{0, m}, c});
    return ring.make(std::move(ts));
  };
  auto var_power = [&](int i, int k) -> const Element& {
    if (auto it = pow_cache.find({i, k}); it != pow_cache.end()) return it->second;
    Element cur = ring.term(ModTerm{0, Monomial::one(n)});
    int kk = 1;
    for (int probe = k; probe >= 1; --probe)
      if (auto it = pow_cache.find({i, probe}); it != pow_cache.end()) {
        cur = it->second;
        kk = probe + 1;
        break;
      }
    for (; kk <= k; ++kk) {
      cur = ring_mul(ring, component_entry(cur, 0), as_element(img[i]));
      pow_cache.emplace(std::make_pair(i, kk), cur);
    }
    return pow_cache.at({i, k});
  };

  Element out;
  for (const auto& [t, c] : a.terms) {
    Element prod = ring.term(ModTerm{0, Monomial::one(n)}, c);
    for (int i = 0; i < n; ++i)
      if (t.m.e[i] > 0)
        prod = ring_mul(ring, component_entry(var_power(i, t.m.e[i]), 0), prod);
    // re-attach the component
    std::vector<std::pair<ModTerm, mpq_class>> ts;
    for (const auto& [pt, pc] : prod.terms) ts.push_back({ModTerm{t.comp, pt.m}, pc});
    out = ctx.add(out, ctx.make(std::move(ts)));
  }
  return out;
}

}  // namespace seqcm
