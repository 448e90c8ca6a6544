#include "seqcm/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqcm {

Element Context::make(std::vector<std::pair<ModTerm, mpq_class>> terms) const {
  for (auto& [t, c] : terms) c = field::normalize(field, c);
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return cmp(a.first, b.first) > 0; });
  Element r;
  for (auto& [t, c] : terms) {
    if (!r.terms.empty() && r.terms.back().first == t)
      r.terms.back().second = field::add(field, r.terms.back().second, c);
    else
      r.terms.emplace_back(std::move(t), std::move(c));
  }
  std::erase_if(r.terms, [](const auto& tc) { return tc.second == 0; });
  return r;
}

Element Context::term(ModTerm t, mpq_class c) const {
  return make({{std::move(t), std::move(c)}});
}

Element Context::add(const Element& a, const Element& b) const {
  Element r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = cmp(a.terms[i].first, b.terms[j].first);
    if (c > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      r.terms.push_back(b.terms[j++]);
    } else {
      mpq_class s = field::add(field, a.terms[i].second, b.terms[j].second);
      if (s != 0) r.terms.emplace_back(a.terms[i].first, std::move(s));
      ++i, ++j;
    }
  }
  for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
  return r;
}

Element Context::negate(const Element& a) const {
  Element r = a;
  for (auto& [t, c] : r.terms) c = field::neg(field, c);
  return r;
}

Element Context::sub(const Element& a, const Element& b) const { return add(a, negate(b)); }

Element Context::scale(const mpq_class& c, const Element& a) const {
  mpq_class cn = field::normalize(field, c);
  if (cn == 0) return Element{};
  Element r = a;
  for (auto& [t, k] : r.terms) k = field::mul(field, k, cn);
  return r;
}

Element Context::term_mul(const mpq_class& c, const Monomial& m, const Element& a) const {
  mpq_class cn = field::normalize(field, c);
  if (cn == 0) return Element{};
  Element r;
  r.terms.reserve(a.terms.size());
  for (const auto& [t, k] : a.terms) {
    ModTerm nt{t.comp, mul(m, t.m)};
    check_degree_cap(nt.m.deg);
    r.terms.emplace_back(std::move(nt), field::mul(field, k, cn));
  }
  return r;
}

Element Context::monic(const Element& a) const {
  if (a.is_zero()) return a;
  return scale(field::inv(field, a.lc()), a);
}

bool Context::is_homogeneous(const Element& a) const {
  if (a.is_zero()) return true;
  int d = term_degree(layout, a.terms.front().first);
  for (const auto& [t, c] : a.terms)
    if (term_degree(layout, t) != d) return false;
  return true;
}

int Context::degree(const Element& a) const {
  if (a.is_zero()) throw std::invalid_argument("degree of zero element");
  if (!is_homogeneous(a)) throw std::invalid_argument("degree of non-homogeneous element");
  return term_degree(layout, a.terms.front().first);
}

void Context::check_degree_cap(int deg) const {
  if (deg > degree_cap)
    throw std::runtime_error("degree cap " + std::to_string(degree_cap) +
                             " exceeded (degree " + std::to_string(deg) +
                             "); raise the cap to continue");
}

Element ring_mul(const Context& ctx, const std::vector<std::pair<Monomial, mpq_class>>& p,
                 const Element& a) {
  Element r;
  for (const auto& [m, c] : p) r = ctx.add(r, ctx.term_mul(c, m, a));
  return r;
}

std::vector<std::pair<Monomial, mpq_class>> component_entry(const Element& a, int comp) {
  std::vector<std::pair<Monomial, mpq_class>> p;
  for (const auto& [t, c] : a.terms)
    if (t.comp == comp) p.emplace_back(t.m, c);
  return p;
}

Element initial_form_partial(const Context& ctx, int r, const Element& a) {
  if (a.is_zero()) throw std::invalid_argument("initial form of zero element");
  if (r == 0) return a;  // no weight rows: every term is maximal
  const Monomial* best = &a.terms.front().first.m;
  for (const auto& [t, c] : a.terms)
    if (compare_partial(r, t.m, *best) == PartialCmp::GT) best = &t.m;
  Element out;
  for (const auto& [t, c] : a.terms)
    if (compare_partial(r, t.m, *best) == PartialCmp::EQ) out.terms.emplace_back(t, c);
  (void)ctx;
  return out;
}

std::string to_string(const Context& ctx, const Element& a) {
  if (a.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [t, c] : a.terms) {
    mpq_class k = c;
    if (first) {
      if (k < 0) {
        s += "-";
        k = -k;
      }
    } else {
      s += k < 0 ? " - " : " + ";
      if (k < 0) k = -k;
    }
    std::string mono = to_string(t.m);
    if (k != 1 || mono == "1") {
      s += field::to_string(k);
      if (mono != "1") s += "*";
    }
    if (mono != "1") s += mono;
    if (ctx.layout.rank() > 1) s += "*e" + std::to_string(t.comp + 1);
    first = false;
  }
  return s;
}

}  // namespace seqcm
