#include "seqcm/lexideal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace seqcm {

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  std::vector<int32_t> e(n, 0);
  // depth-first, first variable gets the largest share first
  std::function<void(int, int)> rec = [&](int pos, int rest) {
    if (pos == n - 1) {
      e[pos] = rest;
      out.push_back(Monomial(e));
      e[pos] = 0;
      return;
    }
    for (int a = rest; a >= 0; --a) {
      e[pos] = a;
      rec(pos + 1, rest - a);
    }
    e[pos] = 0;
  };
  rec(0, d);
  return out;  // lex descending by construction
}

mpz_class macaulay_bound(const mpz_class& h, int d) {
  if (d < 1) throw std::invalid_argument("macaulay bound needs d >= 1");
  if (h <= 0) return 0;
  // d-th Macaulay representation h = C(a_d,d) + C(a_{d-1},d-1) + ...
  mpz_class rest = h;
  mpz_class bound = 0;
  int j = d;
  while (rest > 0 && j >= 1) {
    // largest a with C(a, j) <= rest
    mpz_class a = j - 1, c = 0;  // C(j-1, j) = 0
    for (;;) {
      mpz_class na = a + 1, nc;
      mpz_bin_ui(nc.get_mpz_t(), na.get_mpz_t(), (unsigned long)j);
      if (nc > rest) break;
      a = na;
      c = nc;
    }
    rest -= c;
    mpz_class up, a1 = a + 1;
    mpz_bin_ui(up.get_mpz_t(), a1.get_mpz_t(), (unsigned long)(j + 1));
    bound += up;
    --j;
  }
  if (rest != 0) throw std::logic_error("macaulay representation failed");
  return bound;
}

namespace {

// Builds the lexsegment ideal degree by degree. When `target` is set the loop
// stops once the candidate's Hilbert series equals the target exactly; when it
// is null the ideal gets no generators beyond degree max_given.
MonIdeal lex_ideal_impl(int n, const std::function<mpz_class(int)>& h, int max_given,
                        const HilbertSeries* target, int degree_cap) {
  if (h(0) == 0) return MonIdeal::unit(n);  // the zero quotient
  if (h(0) != 1) throw std::invalid_argument("hilbert function must start with 1");
  MonIdeal L(n);
  for (int d = 1;; ++d) {
    if (d > degree_cap)
      throw std::runtime_error("degree cap exceeded while building the lexsegment ideal");
    if (!target && d > max_given) break;
    std::vector<Monomial> all = monomials_of_degree(n, d);
    std::vector<const Monomial*> missing;
    long in_l = 0;
    for (const Monomial& m : all) {
      if (contains(L, m))
        ++in_l;
      else
        missing.push_back(&m);
    }
    mpz_class target_h = h(d);
    mpz_class needed = mpz_class((long)all.size()) - target_h - in_l;
    if (needed < 0)
      throw std::invalid_argument("values are not the Hilbert function of a graded "
                                  "quotient in " + std::to_string(n) +
                                  " variables (degree " + std::to_string(d) + ")");
    long take = (long)needed.get_si();
    if (take > 0) {
      std::vector<Monomial> g = L.gens;
      for (long t = 0; t < take; ++t) g.push_back(*missing[t]);
      L = MonIdeal(n, std::move(g));
    }
    if (target && take == 0 && hilbert_series(L) == *target) break;
  }
  return L;
}

}  // namespace

MonIdeal lex_ideal(int n, const std::vector<mpz_class>& values) {
  if (values.empty()) throw std::invalid_argument("empty hilbert function");
  for (const mpz_class& v : values)
    if (v < 0) throw std::invalid_argument("negative hilbert function value");
  if (values[0] == 0)
    for (const mpz_class& v : values)
      if (v != 0)
        throw std::invalid_argument("hilbert function must start with 1");
  for (size_t d = 2; d < values.size(); ++d)
    if (values[d] > macaulay_bound(values[d - 1], (int)d - 1))
      throw std::invalid_argument("not an O-sequence at degree " + std::to_string(d));
  auto h = [&](int d) { return d < (int)values.size() ? values[d] : mpz_class(0); };
  return lex_ideal_impl(n, h, (int)values.size() - 1, nullptr, 256);
}

MonIdeal lex_ideal(int n, const HilbertSeries& H, int degree_cap) {
  auto h = [&](int d) { return hilbert_function(H, d); };
  return lex_ideal_impl(n, h, 0, &H, degree_cap);
}

}  // namespace seqcm
