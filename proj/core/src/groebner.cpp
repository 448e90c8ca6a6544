#include "seqcm/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace seqcm {

namespace {

struct SPair {
  int degree;
  int i, j;  // i < j
  Monomial lcm;

  bool operator<(const SPair& o) const {
    if (degree != o.degree) return degree < o.degree;
    if (j != o.j) return j < o.j;
    return i < o.i;
  }
};

class GBEngine {
 public:
  explicit GBEngine(const Context& ctx) : ctx_(ctx) {}

  bool add_generator(Element f) {
    f = ctx_.monic(f);
    if (f.is_zero()) return false;
    f = normal_form(ctx_, f, basis_);
    if (f.is_zero()) return false;
    insert(ctx_.monic(std::move(f)));
    return true;
  }

  const std::vector<Element>& raw_basis() const { return basis_; }

  void complete() {
    while (!pairs_.empty()) {
      SPair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      Element s = spoly(p);
      s = normal_form(ctx_, s, basis_);
      if (!s.is_zero()) insert(ctx_.monic(std::move(s)));
    }
  }

  std::vector<Element> reduced_basis() const {
    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<int> keep;
    for (int i = 0; i < (int)basis_.size(); ++i) {
      bool redundant = false;
      for (int j = 0; j < (int)basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const ModTerm &a = basis_[j].lt(), &b = basis_[i].lt();
        if (a.comp != b.comp || !divides(a.m, b.m)) continue;
        redundant = a.m != b.m || j < i;
      }
      if (!redundant) keep.push_back(i);
    }
    std::vector<Element> out;
    for (int i : keep) out.push_back(basis_[i]);
    // tail-reduce each element against the others
    for (size_t i = 0; i < out.size(); ++i) {
      std::vector<Element> others;
      for (size_t j = 0; j < out.size(); ++j)
        if (j != i) others.push_back(out[j]);
      out[i] = ctx_.monic(normal_form(ctx_, out[i], others));
    }
    std::erase_if(out, [](const Element& e) { return e.is_zero(); });
    std::sort(out.begin(), out.end(),
              [&](const Element& a, const Element& b) { return ctx_.cmp(a.lt(), b.lt()) > 0; });
    return out;
  }

 private:
  Element spoly(const SPair& p) const {
    const Element &f = basis_[p.i], &g = basis_[p.j];
    Element a = ctx_.term_mul(1, quotient(p.lcm, f.lt().m), f);
    Element b = ctx_.term_mul(1, quotient(p.lcm, g.lt().m), g);
    return ctx_.sub(a, b);
  }

  // Gebauer-Moller pair update for the new basis element at index t.
  void insert(Element f) {
    int t = (int)basis_.size();
    const ModTerm lt_t = f.lt();
    std::vector<SPair> fresh;
    for (int i = 0; i < t; ++i) {
      if (basis_[i].lt().comp != lt_t.comp) continue;
      Monomial l = lcm(basis_[i].lt().m, lt_t.m);
      fresh.push_back(SPair{l.deg + ctx_.layout.shifts[lt_t.comp], i, t, l});
    }
    // drop new pairs whose lcm is a proper multiple of another new pair's lcm
    std::vector<bool> dead(fresh.size(), false);
    for (size_t a = 0; a < fresh.size(); ++a)
      for (size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || dead[a] || dead[b]) continue;
        if (fresh[b].lcm != fresh[a].lcm && divides(fresh[b].lcm, fresh[a].lcm)) dead[a] = true;
      }
    // among equal lcms keep the smallest index
    for (size_t a = 0; a < fresh.size(); ++a)
      for (size_t b = 0; b < a; ++b) {
        if (dead[a] || dead[b]) continue;
        if (fresh[a].lcm == fresh[b].lcm) dead[a] = true;
      }
    // product criterion, sound for ideals only
    if (ctx_.layout.rank() == 1)
      for (size_t a = 0; a < fresh.size(); ++a)
        if (!dead[a] && coprime(basis_[fresh[a].i].lt().m, lt_t.m)) dead[a] = true;
    // retire old pairs strictly refined by the new leading term
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const SPair& p = *it;
      bool drop = p.lcm != lcm(basis_[p.i].lt().m, lt_t.m) &&
                  p.lcm != lcm(basis_[p.j].lt().m, lt_t.m) && divides(lt_t.m, p.lcm) &&
                  basis_[p.i].lt().comp == lt_t.comp;
      it = drop ? pairs_.erase(it) : std::next(it);
    }
    for (size_t a = 0; a < fresh.size(); ++a)
      if (!dead[a]) pairs_.insert(fresh[a]);
    basis_.push_back(std::move(f));
  }

  const Context& ctx_;
  std::vector<Element> basis_;
  std::set<SPair> pairs_;
};

std::vector<std::pair<ModTerm, mpq_class>> as_terms(
    const std::vector<std::pair<Monomial, mpq_class>>& p, int comp = 0) {
  std::vector<std::pair<ModTerm, mpq_class>> ts;
  for (const auto& [m, c] : p) ts.push_back({ModTerm{comp, m}, c});
  return ts;
}

}  // namespace

struct IncrementalBasis::Impl {
  Context ctx;
  GBEngine eng;
  explicit Impl(const Context& c) : ctx(c), eng(ctx) {}
};

IncrementalBasis::IncrementalBasis(const Context& ctx) : impl_(new Impl(ctx)) {}
IncrementalBasis::~IncrementalBasis() = default;
IncrementalBasis::IncrementalBasis(IncrementalBasis&&) noexcept = default;

bool IncrementalBasis::add(const Element& f) {
  if (!impl_->ctx.is_homogeneous(f))
    throw std::invalid_argument("generators must be homogeneous");
  bool fresh = impl_->eng.add_generator(f);
  if (fresh) impl_->eng.complete();
  return fresh;
}

const std::vector<Element>& IncrementalBasis::basis() const { return impl_->eng.raw_basis(); }

Element normal_form(const Context& ctx, const Element& f, const std::vector<Element>& gb) {
  Element rem;
  Element work = f;
  while (!work.is_zero()) {
    const ModTerm& lt = work.lt();
    const Element* div = nullptr;
    for (const Element& g : gb)
      if (g.lt().comp == lt.comp && divides(g.lt().m, lt.m)) {
        div = &g;
        break;
      }
    if (div) {
      mpq_class c = field::div(ctx.field, work.lc(), div->lc());
      work = ctx.sub(work, ctx.term_mul(c, quotient(lt.m, div->lt().m), *div));
    } else {
      rem.terms.push_back(work.terms.front());
      work.terms.erase(work.terms.begin());
    }
  }
  return rem;
}

std::vector<Element> buchberger(const Context& ctx, std::vector<Element> gens) {
  for (const Element& g : gens)
    if (!ctx.is_homogeneous(g))
      throw std::invalid_argument("generators must be homogeneous");
  GBEngine eng(ctx);
  for (Element& g : gens) eng.add_generator(std::move(g));
  eng.complete();
  return eng.reduced_basis();
}

std::vector<ModTerm> initial_module(const Context& ctx, const std::vector<Element>& gens) {
  std::vector<ModTerm> lts;
  for (const Element& g : buchberger(ctx, gens)) lts.push_back(g.lt());
  return lts;
}

std::vector<Element> initial_module_partial(const Context& ctx, int r,
                                            const std::vector<Element>& gens) {
  Context rctx = ctx;
  if (r == 0) return buchberger(rctx, gens);  // the module itself
  rctx.order = MonomialOrder::rev_partial(r, ctx.layout.nvars);
  std::vector<Element> forms;
  for (const Element& g : buchberger(rctx, gens))
    forms.push_back(initial_form_partial(rctx, r, g));
  // canonicalise as a reduced basis of the generated module
  return buchberger(rctx, forms);
}

namespace {

// Graph construction: Groebner basis of {(g_i, e_i)} in F + R^t under an
// order eliminating F. Splits the result into relations (zero F-part) and
// lifted basis elements.
struct GraphGB {
  Context big;
  std::vector<Element> relations;                      // tag parts only, comps 0..t-1
  std::vector<std::pair<Element, Element>> with_tags;  // (F part != 0, tag part)
};

GraphGB graph_groebner(const Context& ctx, const std::vector<Element>& gens) {
  int s = ctx.layout.rank();
  int t = (int)gens.size();
  std::vector<int> shifts = ctx.layout.shifts;
  for (const Element& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("zero generator in syzygy computation");
    shifts.push_back(ctx.degree(g));
  }
  GraphGB out;
  out.big = ctx;
  out.big.layout = FreeModuleLayout(ctx.layout.nvars, std::move(shifts));
  out.big.order.elim_split = s;
  std::vector<Element> big_gens;
  for (int i = 0; i < t; ++i) {
    std::vector<std::pair<ModTerm, mpq_class>> ts = gens[i].terms;
    ts.push_back({ModTerm{s + i, Monomial::one(ctx.layout.nvars)}, mpq_class(1)});
    big_gens.push_back(out.big.make(std::move(ts)));
  }
  for (const Element& g : buchberger(out.big, big_gens)) {
    Element fpart, tag;
    for (const auto& [term, c] : g.terms)
      (term.comp < s ? fpart : tag).terms.emplace_back(term, c);
    if (fpart.is_zero()) {
      Element rel;
      for (auto& [term, c] : tag.terms) rel.terms.push_back({ModTerm{term.comp - s, term.m}, c});
      out.relations.push_back(std::move(rel));
    } else {
      out.with_tags.emplace_back(std::move(fpart), std::move(tag));
    }
  }
  return out;
}

Context tag_context(const Context& ctx, const std::vector<Element>& gens) {
  std::vector<int> shifts;
  for (const Element& g : gens) shifts.push_back(ctx.degree(g));
  Context c = ctx;
  c.layout = FreeModuleLayout(ctx.layout.nvars, std::move(shifts));
  c.order.elim_split = -1;
  return c;
}

}  // namespace

SyzygyResult syzygies(const Context& ctx, const std::vector<Element>& gens) {
  GraphGB g = graph_groebner(ctx, gens);
  Context tctx = tag_context(ctx, gens);
  SyzygyResult out;
  out.layout = tctx.layout;
  for (Element& rel : g.relations) out.gens.push_back(tctx.make(std::move(rel.terms)));
  return out;
}

bool lift(const Context& ctx, const Element& f, const std::vector<Element>& gens,
          std::vector<std::vector<std::pair<Monomial, mpq_class>>>* coeffs) {
  std::vector<Element> nz;
  std::vector<int> index;
  for (size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_zero()) {
      nz.push_back(gens[i]);
      index.push_back((int)i);
    }
  if (f.is_zero()) {
    if (coeffs) coeffs->assign(gens.size(), {});
    return true;
  }
  if (nz.empty()) return false;
  GraphGB g = graph_groebner(ctx, nz);
  std::vector<Element> gb;
  std::vector<std::pair<Element, Element>> tagged = g.with_tags;
  for (auto& [fp, tag] : tagged) {
    std::vector<std::pair<ModTerm, mpq_class>> ts = fp.terms;
    for (auto& tc : tag.terms) ts.push_back(tc);
    gb.push_back(g.big.make(std::move(ts)));
  }
  Element fin = g.big.make(std::vector<std::pair<ModTerm, mpq_class>>(f.terms));
  Element r = normal_form(g.big, fin, gb);
  int s = ctx.layout.rank();
  for (const auto& [term, c] : r.terms)
    if (term.comp < s) return false;
  if (coeffs) {
    coeffs->assign(gens.size(), {});
    for (const auto& [term, c] : r.terms)
      (*coeffs)[index[term.comp - s]].emplace_back(term.m, field::neg(ctx.field, c));
  }
  return true;
}

std::vector<Element> colon_by(const Context& ctx, const std::vector<Element>& gens,
                              const std::vector<std::pair<Monomial, mpq_class>>& f) {
  int s = ctx.layout.rank();
  std::vector<Element> combined;
  for (int i = 0; i < s; ++i) {
    Element fe = ctx.make(as_terms(f, i));
    if (fe.is_zero()) throw std::invalid_argument("colon by zero");
    combined.push_back(std::move(fe));
  }
  std::vector<Element> w;
  for (const Element& g : gens)
    if (!g.is_zero()) combined.push_back(g);
  SyzygyResult syz = syzygies(ctx, combined);
  std::vector<Element> out;
  for (const Element& rel : syz.gens) {
    Element v;
    for (const auto& [term, c] : rel.terms)
      if (term.comp < s)
        v = ctx.add(v, ctx.term(ModTerm{term.comp, term.m}, c));
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return buchberger(ctx, out);
}

std::vector<Element> saturate_by(const Context& ctx, const std::vector<Element>& gens,
                                 const std::vector<std::pair<Monomial, mpq_class>>& f) {
  std::vector<Element> cur = buchberger(ctx, gens);
  for (;;) {
    std::vector<Element> next = colon_by(ctx, cur, f);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

std::vector<Element> intersect_modules(const Context& ctx, const std::vector<Element>& a,
                                       const std::vector<Element>& b) {
  std::vector<Element> an, bn;
  for (const Element& g : a)
    if (!g.is_zero()) an.push_back(g);
  for (const Element& g : b)
    if (!g.is_zero()) bn.push_back(g);
  if (an.empty() || bn.empty()) return {};
  std::vector<Element> combined = an;
  combined.insert(combined.end(), bn.begin(), bn.end());
  SyzygyResult syz = syzygies(ctx, combined);
  std::vector<Element> out;
  for (const Element& rel : syz.gens) {
    Element v;
    for (const auto& [term, c] : rel.terms)
      if (term.comp < (int)an.size())
        v = ctx.add(v, ctx.term_mul(c, term.m, an[term.comp]));
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return buchberger(ctx, out);
}

namespace {

std::vector<std::vector<Element>> candidates_impl(const Context& ctx, int r,
                                                  const std::vector<Element>& gens,
                                                  int trials, uint64_t seed, long bound) {
  if (trials < 2) throw std::invalid_argument("gin needs at least 2 trials");
  int n = ctx.layout.nvars;
  if (r < 1 || r > n) throw std::invalid_argument("gin needs 1 <= r <= n");
  Context gctx = ctx;
  gctx.order = r == n ? MonomialOrder::degrevlex(n) : MonomialOrder::rev_partial(r, n);
  std::vector<std::vector<Element>> candidates;
  for (int t = 0; t < trials; ++t) {
    Rng rng(Rng::derive(seed, (uint64_t)t));
    CoordinateChange g = CoordinateChange::random(ctx.field, n, n - r, rng, bound);
    std::vector<Element> moved;
    for (const Element& u : gens) {
      Element v = apply_change(gctx, g, u);
      if (!v.is_zero()) moved.push_back(std::move(v));
    }
    std::vector<Element> gb = buchberger(gctx, moved);
    std::vector<Element> init;
    if (r == n) {
      for (const Element& e : gb) init.push_back(gctx.term(e.lt()));
      std::sort(init.begin(), init.end(), [&](const Element& a, const Element& b) {
        return gctx.cmp(a.lt(), b.lt()) > 0;
      });
    } else {
      std::vector<Element> forms;
      for (const Element& e : gb) forms.push_back(initial_form_partial(gctx, r, e));
      init = buchberger(gctx, forms);
    }
    candidates.push_back(std::move(init));
  }
  return candidates;
}

}  // namespace

GinResult gin(const Context& ctx, const std::vector<Element>& gens, int trials, uint64_t seed,
              long bound) {
  int n = ctx.layout.nvars;
  auto candidates = candidates_impl(ctx, n, gens, trials, seed, bound);
  for (int t = 1; t < trials; ++t)
    if (candidates[t] != candidates[0]) throw GinDisagreement(std::move(candidates));
  GinResult out;
  out.gens = candidates[0];
  out.r = n;
  out.trials_agreed = trials;
  out.trials_total = trials;
  out.seed = seed;
  return out;
}

std::vector<std::vector<Element>> gin_partial_candidates(const Context& ctx, int r,
                                                         const std::vector<Element>& gens,
                                                         int trials, uint64_t seed,
                                                         long bound) {
  return candidates_impl(ctx, r, gens, trials, seed, bound);
}

}  // namespace seqcm
