#include "seqcm/order.hpp"

#include <stdexcept>
#include <string>

namespace seqcm {

MonomialOrder MonomialOrder::degrevlex(int n) {
  MonomialOrder o;
  o.nvars = n;
  o.tiebreak = Tiebreak::RevLex;
  o.degree_first = true;
  return o;
}

MonomialOrder MonomialOrder::lex(int n) {
  MonomialOrder o;
  o.nvars = n;
  o.tiebreak = Tiebreak::Lex;
  o.degree_first = false;
  return o;
}

MonomialOrder MonomialOrder::rev_partial(int r, int n) {
  if (r < 1 || r > n) throw std::invalid_argument("rev_r needs 1 <= r <= n");
  MonomialOrder o;
  o.nvars = n;
  o.tiebreak = Tiebreak::RevLex;
  o.degree_first = true;
  for (int j = 1; j <= r; ++j) {
    std::vector<int64_t> row(n, 0);
    row[n - j] = -1;
    o.weight_rows.push_back(std::move(row));
  }
  return o;
}

static int64_t weight(const std::vector<int64_t>& row, const Monomial& m) {
  int64_t w = 0;
  for (size_t i = 0; i < row.size(); ++i) w += row[i] * m.e[i];
  return w;
}

int compare(const MonomialOrder& ord, const FreeModuleLayout& L, const ModTerm& a,
            const ModTerm& b) {
  if (a.m.nvars() != ord.nvars || b.m.nvars() != ord.nvars || L.nvars != ord.nvars)
    throw std::invalid_argument("term/order dimension mismatch");
  if (a.comp < 0 || a.comp >= L.rank() || b.comp < 0 || b.comp >= L.rank())
    throw std::invalid_argument("component index out of range");
  if (ord.elim_split >= 0) {
    bool ea = a.comp < ord.elim_split, eb = b.comp < ord.elim_split;
    if (ea != eb) return ea ? 1 : -1;
  }
  if (ord.degree_first) {
    int da = term_degree(L, a), db = term_degree(L, b);
    if (da != db) return da > db ? 1 : -1;
  }
  for (const auto& row : ord.weight_rows) {
    int64_t wa = weight(row, a.m), wb = weight(row, b.m);
    if (wa != wb) return wa > wb ? 1 : -1;
  }
  if (a.m != b.m) {
    bool less = ord.tiebreak == MonomialOrder::Tiebreak::RevLex ? revlex_less(a.m, b.m)
                                                                : lex_less(a.m, b.m);
    return less ? -1 : 1;
  }
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

PartialCmp compare_partial(int r, const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("term/order dimension mismatch");
  int n = a.nvars();
  if (r < 1 || r > n) throw std::invalid_argument("rev_r needs 1 <= r <= n");
  for (int j = 1; j <= r; ++j) {
    int64_t wa = -a.e[n - j], wb = -b.e[n - j];
    if (wa != wb) return wa > wb ? PartialCmp::GT : PartialCmp::LT;
  }
  return PartialCmp::EQ;
}

std::vector<int> multidegree(int r, const FreeModuleLayout& L, const ModTerm& t) {
  int n = L.nvars;
  if (r < 0 || r > n) throw std::invalid_argument("invalid grading split");
  std::vector<int> d(r + 1, 0);
  int head = L.shifts[t.comp];
  for (int i = 0; i < n - r; ++i) head += t.m.e[i];
  d[0] = head;
  for (int j = 1; j <= r; ++j) d[j] = t.m.e[n - r + j - 1];
  return d;
}

std::string to_string(const FreeModuleLayout& L) {
  std::string s = "F(";
  for (int i = 0; i < L.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(-L.shifts[i]);
  }
  s += ")";
  return s;
}

}  // namespace seqcm
