#include "seqcm/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqcm {

void minimize_presentation(ModulePresentation& M) {
  Context ctx = M.context();
  std::erase_if(M.gens, [](const Element& g) { return g.is_zero(); });
  for (;;) {
    // look for a generator with a unit entry; by homogeneity such an entry is
    // the full component entry
    int gi = -1, comp = -1;
    mpq_class c;
    for (size_t g = 0; g < M.gens.size() && gi < 0; ++g)
      for (const auto& [t, k] : M.gens[g].terms)
        if (t.m.is_one()) {
          gi = (int)g;
          comp = t.comp;
          c = k;
          break;
        }
    if (gi < 0) break;
    Element pivot = M.gens[gi];
    mpq_class cinv = field::inv(ctx.field, c);
    std::vector<Element> next;
    for (size_t g = 0; g < M.gens.size(); ++g) {
      if ((int)g == gi) continue;
      auto entry = component_entry(M.gens[g], comp);
      Element h = M.gens[g];
      if (!entry.empty()) {
        for (auto& [m, k] : entry) k = field::mul(ctx.field, k, field::neg(ctx.field, cinv));
        h = ctx.add(h, ring_mul(ctx, entry, pivot));
      }
      next.push_back(std::move(h));
    }
    // delete the basis vector `comp` and renumber
    std::vector<int> shifts;
    for (int j = 0; j < M.layout.rank(); ++j)
      if (j != comp) shifts.push_back(M.layout.shifts[j]);
    FreeModuleLayout L(M.layout.nvars, std::move(shifts));
    std::vector<Element> renumbered;
    for (Element& h : next) {
      std::vector<std::pair<ModTerm, mpq_class>> ts;
      for (auto& [t, k] : h.terms) {
        if (t.comp == comp)
          throw std::logic_error("component survived elimination");
        ts.push_back({ModTerm{t.comp > comp ? t.comp - 1 : t.comp, t.m}, k});
      }
      renumbered.push_back(Element{std::move(ts)});
    }
    M.layout = L;
    M.gens.clear();
    Context nctx = M.context();
    for (Element& h : renumbered) {
      Element e = nctx.make(std::move(h.terms));
      if (!e.is_zero()) M.gens.push_back(std::move(e));
    }
    ctx = nctx;
  }
}

std::vector<Element> minimal_generators(const Context& ctx, std::vector<Element> gens) {
  std::erase_if(gens, [](const Element& g) { return g.is_zero(); });
  for (const Element& g : gens)
    if (!ctx.is_homogeneous(g))
      throw std::invalid_argument("generators must be homogeneous");
  std::stable_sort(gens.begin(), gens.end(), [&](const Element& a, const Element& b) {
    return ctx.degree(a) < ctx.degree(b);
  });
  IncrementalBasis inc(ctx);
  std::vector<Element> out;
  for (Element& g : gens)
    if (inc.add(g)) out.push_back(std::move(g));
  return out;
}

Resolution minimal_free_resolution(const ModulePresentation& M) {
  ModulePresentation P = M;
  minimize_presentation(P);
  Resolution res;
  res.frees.push_back(P.layout);
  Context cur = P.context();
  std::vector<Element> cur_gens = minimal_generators(cur, P.gens);
  while (!cur_gens.empty()) {
    if ((int)res.maps.size() > P.layout.nvars)
      throw std::logic_error("resolution longer than the number of variables");
    SyzygyResult syz = syzygies(cur, cur_gens);
    res.maps.push_back(std::move(cur_gens));
    res.frees.push_back(syz.layout);
    Context next = cur;
    next.layout = syz.layout;
    next.order.elim_split = -1;
    cur_gens = minimal_generators(next, syz.gens);
    cur = next;
  }
  return res;
}

std::map<std::pair<int, int>, int> betti_numbers(const Resolution& R) {
  std::map<std::pair<int, int>, int> b;
  for (size_t k = 0; k < R.frees.size(); ++k)
    for (int d : R.frees[k].shifts) ++b[{(int)k, d}];
  return b;
}

int depth_mod(const ModulePresentation& M) {
  if (is_zero_module(M)) return DEPTH_INFINITY;
  Resolution res = minimal_free_resolution(M);
  return M.layout.nvars - res.length();
}

int regularity(const ModulePresentation& M) {
  if (is_zero_module(M)) throw std::invalid_argument("regularity of the zero module");
  Resolution res = minimal_free_resolution(M);
  int reg = INT_MIN;
  for (size_t k = 0; k < res.frees.size(); ++k)
    for (int d : res.frees[k].shifts) reg = std::max(reg, d - (int)k);
  return reg;
}

bool is_cohen_macaulay(const ModulePresentation& M) {
  if (is_zero_module(M)) return true;
  return depth_mod(M) == dimension(M);
}

ModulePresentation subquotient(const Context& ctx, const std::vector<Element>& sub_gens,
                               const std::vector<Element>& inner_gens) {
  std::vector<Element> subs;
  for (const Element& g : sub_gens)
    if (!g.is_zero()) subs.push_back(g);
  ModulePresentation out;
  out.field = ctx.field;
  out.degree_cap = ctx.degree_cap;
  if (subs.empty()) {
    out.layout = FreeModuleLayout(ctx.layout.nvars, {});
    return out;
  }
  std::vector<Element> combined = subs;
  for (const Element& g : inner_gens)
    if (!g.is_zero()) combined.push_back(g);
  SyzygyResult syz = syzygies(ctx, combined);
  std::vector<int> shifts;
  for (const Element& g : subs) shifts.push_back(ctx.degree(g));
  out.layout = FreeModuleLayout(ctx.layout.nvars, std::move(shifts));
  Context octx = out.context();
  octx.degree_cap = ctx.degree_cap;
  for (const Element& rel : syz.gens) {
    std::vector<std::pair<ModTerm, mpq_class>> ts;
    for (const auto& [t, c] : rel.terms)
      if (t.comp < (int)subs.size()) ts.push_back({t, c});
    Element e = octx.make(std::move(ts));
    if (!e.is_zero()) out.gens.push_back(std::move(e));
  }
  return out;
}

namespace {

// Kernel of the map sending basis vector j of `domain` to images[j], as
// generators inside `domain`. Zero images contribute their basis vectors.
std::vector<Element> kernel_of_map(const Context& codomain_ctx,
                                   const FreeModuleLayout& domain,
                                   const std::vector<Element>& images) {
  std::vector<Element> out;
  Context dom_ctx = codomain_ctx;
  dom_ctx.layout = domain;
  dom_ctx.order.elim_split = -1;
  std::vector<Element> nz;
  std::vector<int> idx;
  for (size_t j = 0; j < images.size(); ++j) {
    if (images[j].is_zero())
      out.push_back(dom_ctx.term(ModTerm{(int)j, Monomial::one(domain.nvars)}));
    else {
      nz.push_back(images[j]);
      idx.push_back((int)j);
    }
  }
  if (!nz.empty()) {
    SyzygyResult syz = syzygies(codomain_ctx, nz);
    for (const Element& rel : syz.gens) {
      std::vector<std::pair<ModTerm, mpq_class>> ts;
      for (const auto& [t, c] : rel.terms) ts.push_back({ModTerm{idx[t.comp], t.m}, c});
      out.push_back(dom_ctx.make(std::move(ts)));
    }
  }
  return out;
}

FreeModuleLayout dual_layout(const FreeModuleLayout& L, int twist) {
  std::vector<int> shifts;
  for (int d : L.shifts) shifts.push_back(twist - d);
  return FreeModuleLayout(L.nvars, std::move(shifts));
}

// Transpose of maps[k]: the images of the dual basis of F_k^* inside F_{k+1}^*.
std::vector<Element> dual_map(const Context& dual_codomain_ctx, const Resolution& res,
                              size_t k) {
  const FreeModuleLayout& Fk = res.frees[k];
  std::vector<Element> cols(Fk.rank());
  for (int j = 0; j < Fk.rank(); ++j) {
    std::vector<std::pair<ModTerm, mpq_class>> ts;
    for (size_t i = 0; i < res.maps[k].size(); ++i)
      for (const auto& [m, c] : component_entry(res.maps[k][i], j))
        ts.push_back({ModTerm{(int)i, m}, c});
    cols[j] = dual_codomain_ctx.make(std::move(ts));
  }
  return cols;
}

}  // namespace

ModulePresentation ext_module(const ModulePresentation& M, int i) {
  if (i < 0) throw std::invalid_argument("negative cohomological index");
  int n = M.layout.nvars;
  Resolution res = minimal_free_resolution(M);
  int p = res.length();
  ModulePresentation out;
  out.field = M.field;
  out.degree_cap = M.degree_cap;
  if (i > p) {
    out.layout = FreeModuleLayout(n, {});
    return out;
  }
  Context base = M.context();
  FreeModuleLayout Fi_star = dual_layout(res.frees[i], n);
  Context fi_ctx = base;
  fi_ctx.layout = Fi_star;
  fi_ctx.order.elim_split = -1;

  std::vector<Element> kernel;
  if (i == p) {
    for (int j = 0; j < Fi_star.rank(); ++j)
      kernel.push_back(fi_ctx.term(ModTerm{j, Monomial::one(n)}));
  } else {
    Context fip1_ctx = base;
    fip1_ctx.layout = dual_layout(res.frees[i + 1], n);
    fip1_ctx.order.elim_split = -1;
    std::vector<Element> images = dual_map(fip1_ctx, res, i);
    kernel = kernel_of_map(fip1_ctx, Fi_star, images);
  }
  std::vector<Element> image;
  if (i >= 1) image = dual_map(fi_ctx, res, i - 1);

  out = subquotient(fi_ctx, kernel, image);
  minimize_presentation(out);
  if (is_zero_module(out)) {
    out.layout = FreeModuleLayout(n, {});
    out.gens.clear();
  }
  return out;
}

LCHilbert lc_hilbert(const ModulePresentation& M, int i) {
  int n = M.layout.nvars;
  if (i < 0 || i > n) throw std::invalid_argument("local cohomology index out of range");
  ModulePresentation E = ext_module(M, n - i);
  return dualize(hilbert_series(E));
}

}  // namespace seqcm
