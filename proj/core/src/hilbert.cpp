#include "seqcm/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqcm {

ModulePresentation ModulePresentation::cyclic(FieldSpec k, const MonIdeal& I) {
  ModulePresentation M;
  M.field = k;
  M.layout = FreeModuleLayout::ring(I.n);
  Context ctx = M.context();
  for (const Monomial& g : I.gens) M.gens.push_back(ctx.term(ModTerm{0, g}));
  return M;
}

namespace {

// polynomial helpers on sparse Laurent polynomials
void add_into(std::map<int, mpz_class>& a, const std::map<int, mpz_class>& b, int shift = 0,
              const mpz_class& scale = 1) {
  for (const auto& [k, c] : b) {
    mpz_class& t = a[k + shift];
    t += c * scale;
    if (t == 0) a.erase(k + shift);
  }
}

mpz_class eval_at_one(const std::map<int, mpz_class>& p) {
  mpz_class s = 0;
  for (const auto& [k, c] : p) s += c;
  return s;
}

// q = p / (1 - z), valid when p(1) = 0: q_k = sum_{j <= k} p_j.
std::map<int, mpz_class> div_one_minus_z(const std::map<int, mpz_class>& p) {
  std::map<int, mpz_class> q;
  mpz_class run = 0;
  if (p.empty()) return q;
  int lo = p.begin()->first, hi = p.rbegin()->first;
  for (int k = lo; k <= hi; ++k) {
    auto it = p.find(k);
    if (it != p.end()) run += it->second;
    if (run != 0) q[k] = run;
  }
  return q;
}

// q = p / (z - 1), valid when p(1) = 0: q_k = -sum_{j <= k} p_j.
std::map<int, mpz_class> div_z_minus_one(const std::map<int, mpz_class>& p) {
  std::map<int, mpz_class> q = div_one_minus_z(p);
  for (auto& [k, c] : q) c = -c;
  return q;
}

std::map<int, mpz_class> mul_z_minus_one(const std::map<int, mpz_class>& p) {
  std::map<int, mpz_class> q;
  add_into(q, p, 1);
  add_into(q, p, 0, -1);
  return q;
}

}  // namespace

HilbertSeries reduce_series(std::map<int, mpz_class> num, int pole) {
  std::erase_if(num, [](const auto& kv) { return kv.second == 0; });
  if (num.empty()) return HilbertSeries{{}, 0};
  while (pole > 0 && eval_at_one(num) == 0) {
    num = div_one_minus_z(num);
    --pole;
  }
  return HilbertSeries{std::move(num), pole};
}

mpz_class hilbert_function(const HilbertSeries& H, int d) {
  if (H.is_zero()) return 0;
  // expand num/(1-z)^pole: pole-fold cumulative sums
  std::map<int, mpz_class> p = H.num;
  for (int i = 0; i < H.pole; ++i) {
    std::map<int, mpz_class> q;
    mpz_class run = 0;
    int lo = p.begin()->first;
    for (int k = lo; k <= d; ++k) {
      auto it = p.find(k);
      if (it != p.end()) run += it->second;
      if (run != 0) q[k] = run;
    }
    p = std::move(q);
    if (p.empty()) return 0;
  }
  auto it = p.find(d);
  return it == p.end() ? mpz_class(0) : it->second;
}

LCHilbert reduce_lc(std::map<int, mpz_class> num, int pole) {
  std::erase_if(num, [](const auto& kv) { return kv.second == 0; });
  if (num.empty()) return LCHilbert{{}, 0};
  while (pole > 0 && eval_at_one(num) == 0) {
    num = div_z_minus_one(num);
    --pole;
  }
  return LCHilbert{std::move(num), pole};
}

LCHilbert add(const LCHilbert& a, const LCHilbert& b) {
  int pole = std::max(a.pole, b.pole);
  std::map<int, mpz_class> na = a.num, nb = b.num;
  for (int i = a.pole; i < pole; ++i) na = mul_z_minus_one(na);
  for (int i = b.pole; i < pole; ++i) nb = mul_z_minus_one(nb);
  add_into(na, nb);
  return reduce_lc(std::move(na), pole);
}

LCHilbert dualize(const HilbertSeries& H) {
  std::map<int, mpz_class> num;
  for (const auto& [k, c] : H.num) num[H.pole - k] = c;
  return reduce_lc(std::move(num), H.pole);
}

mpz_class lc_coefficient(const LCHilbert& h, int d) {
  if (h.is_zero()) return 0;
  // substitute w = 1/z: h = sum num_k w^{pole-k} / (1-w)^pole, coefficient of
  // w^{-d}
  std::map<int, mpz_class> p;
  for (const auto& [k, c] : h.num) p[h.pole - k] = c;
  HilbertSeries inw{std::move(p), h.pole};
  // inw is already reduced (h was)
  return hilbert_function(inw, -d);
}

std::map<int, mpz_class> numerator(const MonIdeal& I) {
  if (I.is_zero()) return {{0, mpz_class(1)}};
  if (I.is_unit()) return {};
  // if all generators are pure powers: product of (1 - z^a)
  bool pure = true;
  for (const Monomial& g : I.gens)
    if (support(g).size() > 1) {
      pure = false;
      break;
    }
  if (pure) {
    std::map<int, mpz_class> p{{0, mpz_class(1)}};
    for (const Monomial& g : I.gens) {
      std::map<int, mpz_class> q;
      add_into(q, p);
      add_into(q, p, g.deg, -1);
      p = std::move(q);
    }
    return p;
  }
  // pivot: a variable occurring in the most non-pure generators
  std::vector<int> freq(I.n, 0);
  for (const Monomial& g : I.gens)
    if (support(g).size() > 1)
      for (int v : support(g)) ++freq[v - 1];
  int pivot = (int)(std::max_element(freq.begin(), freq.end()) - freq.begin());
  Monomial x = Monomial::var(I.n, pivot + 1);
  std::map<int, mpz_class> p = numerator(sum(I, MonIdeal(I.n, {x})));
  add_into(p, numerator(colon(I, x)), 1);
  return p;
}

HilbertSeries hilbert_series(const MonIdeal& I) { return reduce_series(numerator(I), I.n); }

HilbertSeries hilbert_series(const ModulePresentation& M) {
  Context ctx = M.context();
  std::vector<Element> nz;
  for (const Element& g : M.gens)
    if (!g.is_zero()) nz.push_back(g);
  std::vector<ModTerm> lts = initial_module(ctx, nz);
  std::map<int, mpz_class> num;
  for (int j = 0; j < M.layout.rank(); ++j) {
    std::vector<Monomial> comp;
    for (const ModTerm& t : lts)
      if (t.comp == j) comp.push_back(t.m);
    add_into(num, numerator(MonIdeal(M.layout.nvars, std::move(comp))), M.layout.shifts[j]);
  }
  return reduce_series(std::move(num), M.layout.nvars);
}

int dimension(const ModulePresentation& M) {
  HilbertSeries H = hilbert_series(M);
  return H.is_zero() ? -1 : H.pole;
}

bool is_zero_module(const ModulePresentation& M) {
  Context ctx = M.context();
  std::vector<Element> gb = buchberger(ctx, M.gens);
  for (int j = 0; j < M.layout.rank(); ++j) {
    Element e = ctx.term(ModTerm{j, Monomial::one(M.layout.nvars)});
    if (!normal_form(ctx, e, gb).is_zero()) return false;
  }
  return true;
}

namespace {

std::string poly_string(const std::map<int, mpz_class>& p) {
  if (p.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : p) {
    mpz_class a = c;
    if (first) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (k == 0) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += k == 1 ? "z" : "z^" + std::to_string(k);
    }
    first = false;
  }
  return s;
}

}  // namespace

std::string to_string(const HilbertSeries& H) {
  std::string s = "(" + poly_string(H.num) + ")";
  if (H.pole > 0) s += "/(1-z)^" + std::to_string(H.pole);
  return s;
}

std::string to_string(const LCHilbert& h) {
  std::string s = "(" + poly_string(h.num) + ")";
  if (h.pole > 0) s += "/(z-1)^" + std::to_string(h.pole);
  return s;
}

}  // namespace seqcm
