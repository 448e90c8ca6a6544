#include "seqcm/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqcm {

namespace {

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return lex_less(a, b);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& kept : out)
      if (divides(kept, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  gens = std::move(out);
}

}  // namespace

MonIdeal::MonIdeal(int nvars, std::vector<Monomial> g) : n(nvars), gens(std::move(g)) {
  for (const Monomial& m : gens)
    if (m.nvars() != n) throw std::invalid_argument("monomial has wrong number of variables");
  minimalize(gens);
}

MonIdeal MonIdeal::variable_prime(int n, const std::vector<int>& vars) {
  std::vector<Monomial> g;
  for (int i : vars) g.push_back(Monomial::var(n, i));
  return MonIdeal(n, std::move(g));
}

bool contains(const MonIdeal& I, const Monomial& m) {
  for (const Monomial& g : I.gens)
    if (divides(g, m)) return true;
  return false;
}

bool contains(const MonIdeal& I, const MonIdeal& J) {
  for (const Monomial& g : J.gens)
    if (!contains(I, g)) return false;
  return true;
}

MonIdeal sum(const MonIdeal& I, const MonIdeal& J) {
  std::vector<Monomial> g = I.gens;
  g.insert(g.end(), J.gens.begin(), J.gens.end());
  return MonIdeal(I.n, std::move(g));
}

MonIdeal intersect(const MonIdeal& I, const MonIdeal& J) {
  std::vector<Monomial> g;
  for (const Monomial& a : I.gens)
    for (const Monomial& b : J.gens) g.push_back(lcm(a, b));
  return MonIdeal(I.n, std::move(g));
}

MonIdeal colon(const MonIdeal& I, const Monomial& m) {
  std::vector<Monomial> g;
  for (const Monomial& a : I.gens) g.push_back(quotient(a, gcd(a, m)));
  return MonIdeal(I.n, std::move(g));
}

MonIdeal colon(const MonIdeal& I, const MonIdeal& J) {
  if (J.is_zero()) return MonIdeal::unit(I.n);
  MonIdeal out = colon(I, J.gens[0]);
  for (size_t i = 1; i < J.gens.size(); ++i) out = intersect(out, colon(I, J.gens[i]));
  return out;
}

MonIdeal saturate(const MonIdeal& I, const Monomial& m) {
  auto sup = support(m);
  if (sup.size() == 1) {
    int v = sup[0] - 1;
    std::vector<Monomial> g;
    for (Monomial a : I.gens) {
      a.deg -= a.e[v];
      a.e[v] = 0;
      g.push_back(std::move(a));
    }
    return MonIdeal(I.n, std::move(g));
  }
  MonIdeal cur = I;
  for (;;) {
    MonIdeal next = colon(cur, m);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

MonIdeal saturate(const MonIdeal& I, const MonIdeal& J) {
  MonIdeal cur = I;
  for (;;) {
    MonIdeal next = colon(cur, J);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

std::vector<MonIdeal> irreducible_decomposition(const MonIdeal& I) {
  if (I.is_zero())
    throw std::invalid_argument("irreducible decomposition of the zero ideal");
  if (I.is_unit()) return {};
  // find a generator that is not a pure power
  const Monomial* split = nullptr;
  for (const Monomial& g : I.gens)
    if (support(g).size() > 1) {
      split = &g;
      break;
    }
  if (!split) return {I};
  int v = support(*split)[0] - 1;
  Monomial head = Monomial::var(I.n, v + 1, (*split).e[v]);
  Monomial tail = quotient(*split, head);
  std::vector<MonIdeal> parts;
  for (const MonIdeal& piece :
       {sum(I, MonIdeal(I.n, {head})), sum(I, MonIdeal(I.n, {tail}))})
    for (MonIdeal& c : irreducible_decomposition(piece)) parts.push_back(std::move(c));
  // dedupe
  std::sort(parts.begin(), parts.end(), [](const MonIdeal& a, const MonIdeal& b) {
    return std::lexicographical_compare(
        a.gens.begin(), a.gens.end(), b.gens.begin(), b.gens.end(),
        [](const Monomial& x, const Monomial& y) { return x.e < y.e; });
  });
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  // prune redundant components
  for (size_t i = 0; i < parts.size();) {
    MonIdeal rest = MonIdeal::unit(I.n);
    bool first = true;
    for (size_t j = 0; j < parts.size(); ++j) {
      if (j == i) continue;
      rest = first ? parts[j] : intersect(rest, parts[j]);
      first = false;
    }
    if (!first && contains(parts[i], rest))
      parts.erase(parts.begin() + (long)i);
    else
      ++i;
  }
  return parts;
}

std::vector<std::vector<int>> associated_primes(const MonIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("associated primes need a proper nonzero ideal");
  std::vector<std::vector<int>> primes;
  for (const MonIdeal& c : irreducible_decomposition(I)) {
    std::vector<int> p;
    for (const Monomial& g : c.gens) p.push_back(support(g)[0]);
    std::sort(p.begin(), p.end());
    primes.push_back(std::move(p));
  }
  std::sort(primes.begin(), primes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

MonIdeal radical(const MonIdeal& I) {
  if (I.is_zero()) return I;
  if (I.is_unit()) return I;
  std::vector<Monomial> g;
  for (const Monomial& m : I.gens) {
    Monomial r(I.n);
    for (int i = 0; i < I.n; ++i)
      if (m.e[i] > 0) {
        r.e[i] = 1;
        ++r.deg;
      }
    g.push_back(std::move(r));
  }
  return MonIdeal(I.n, std::move(g));
}

int dimension_mod(const MonIdeal& I) {
  if (I.is_unit()) return -1;
  if (I.is_zero()) return I.n;
  size_t minh = I.n;
  for (const auto& p : associated_primes(I)) minh = std::min(minh, p.size());
  return I.n - (int)minh;
}

std::string to_string(const MonIdeal& I) {
  if (I.is_zero()) return "(0)";
  std::string s = "(";
  for (size_t i = 0; i < I.gens.size(); ++i) {
    if (i) s += ", ";
    s += to_string(I.gens[i]);
  }
  return s + ")";
}

}  // namespace seqcm
