#include "seqcm/textio.hpp"

#include <algorithm>
#include <cctype>

namespace seqcm {

namespace {

struct Token {
  enum Kind { Ident, Number, Punct, End } kind = End;
  std::string text;
  int col = 0;
};

std::vector<Token> tokenize(const std::string& s, int line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    int col = (int)i + 1;
    if (std::isspace((unsigned char)c)) {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '_')) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::isdigit((unsigned char)c)) {
      size_t j = i;
      while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
      out.push_back({Token::Number, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (c == '.' && i + 1 < s.size() && s[i + 1] == '.') {
      out.push_back({Token::Punct, "..", col});
      i += 2;
      continue;
    }
    static const std::string puncts = "[](){}=,^*+-:/";
    if (puncts.find(c) != std::string::npos) {
      out.push_back({Token::Punct, std::string(1, c), col});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }
  out.push_back({Token::End, "", (int)s.size() + 1});
  return out;
}

struct Cursor {
  const std::vector<Token>* toks;
  size_t pos = 0;
  int line = 0;

  const Token& peek() const { return (*toks)[pos]; }
  const Token& next() { return (*toks)[std::min(pos++, toks->size() - 1)]; }
  bool at_end() const { return peek().kind == Token::End; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, peek().col);
  }

  bool accept_punct(const std::string& p) {
    if (peek().kind == Token::Punct && peek().text == p) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect_punct(const std::string& p) {
    if (!accept_punct(p)) fail("expected '" + p + "'");
  }
  std::string expect_ident(const std::string& what) {
    if (peek().kind != Token::Ident) fail("expected " + what);
    return next().text;
  }
  long expect_number(const std::string& what) {
    if (peek().kind != Token::Number) fail("expected " + what);
    return std::stol(next().text);
  }
  // possibly signed integer
  long expect_integer(const std::string& what) {
    bool neg = accept_punct("-");
    long v = expect_number(what);
    return neg ? -v : v;
  }
};

// x<k> with 1 <= k <= n, or 0 if the identifier is not of that shape
int var_index(const std::string& id, int n, char letter) {
  if (id.size() < 2 || id[0] != letter) return 0;
  for (size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit((unsigned char)id[i])) return 0;
  long k = std::stol(id.substr(1));
  if (k < 1 || k > n) return -1;
  return (int)k;
}

// term := [coeff] { '*' factor } | factor { '*' factor }, factor := x<k>['^'p] | e<k>
std::pair<ModTerm, mpq_class> parse_term(Cursor& cur, const FreeModuleLayout& L) {
  mpq_class coeff(1);
  Monomial m(L.nvars);
  int comp = -1;
  bool any = false;
  if (cur.peek().kind == Token::Number) {
    mpz_class p(cur.next().text);
    mpz_class q(1);
    if (cur.accept_punct("/")) {
      if (cur.peek().kind != Token::Number) cur.fail("expected denominator");
      q = mpz_class(cur.next().text);
      if (q == 0) cur.fail("zero denominator");
    }
    coeff = mpq_class(p, q);
    coeff.canonicalize();
    any = true;
    if (!cur.accept_punct("*")) {
      if (comp < 0) comp = 0;
      return {{comp, std::move(m)}, std::move(coeff)};
    }
  }
  for (;;) {
    if (cur.peek().kind != Token::Ident) cur.fail("expected a variable or basis vector");
    std::string id = cur.peek().text;
    int xv = var_index(id, L.nvars, 'x');
    int ev = var_index(id, (int)L.shifts.size(), 'e');
    if (xv > 0) {
      cur.next();
      long p = 1;
      if (cur.accept_punct("^")) p = cur.expect_number("exponent");
      if (p < 0) cur.fail("negative exponent");
      m.e[xv - 1] += (int32_t)p;
      m.deg += (int32_t)p;
    } else if (ev > 0) {
      cur.next();
      if (comp >= 0) cur.fail("more than one basis vector in a term");
      comp = ev - 1;
    } else if (xv < 0 || ev < 0) {
      cur.fail("index out of range in '" + id + "'");
    } else {
      cur.fail("unknown symbol '" + id + "'");
    }
    any = true;
    if (!cur.accept_punct("*")) break;
  }
  if (!any) cur.fail("empty term");
  if (comp < 0) {
    if (L.shifts.size() != 1)
      cur.fail("a module generator needs a basis vector e<k>");
    comp = 0;
  }
  return {{comp, std::move(m)}, std::move(coeff)};
}

RawPoly parse_poly(Cursor& cur, const FreeModuleLayout& L) {
  RawPoly p;
  p.line = cur.line;
  bool neg = cur.accept_punct("-");
  if (!neg && cur.peek().kind == Token::Number && cur.peek().text == "0") {
    // the zero polynomial
    size_t save = cur.pos;
    cur.next();
    if (cur.peek().kind == Token::End ||
        (cur.peek().kind == Token::Punct && cur.peek().text == ","))
      return p;
    cur.pos = save;
  }
  for (;;) {
    auto [t, c] = parse_term(cur, L);
    if (neg) c = -c;
    if (c != 0) p.terms.push_back({std::move(t), std::move(c)});
    if (cur.accept_punct("+"))
      neg = false;
    else if (cur.accept_punct("-"))
      neg = true;
    else
      break;
  }
  return p;
}

void check_homogeneous(const RawPoly& p, const FreeModuleLayout& L, int line) {
  if (p.terms.empty()) return;
  int d = term_degree(L, p.terms.front().first);
  for (const auto& [t, c] : p.terms)
    if (term_degree(L, t) != d)
      throw ParseError("generator is not homogeneous", line, 1);
}

std::vector<RawPoly> parse_gens(Cursor& cur, const FreeModuleLayout& L) {
  std::vector<RawPoly> gens;
  if (cur.at_end()) return gens;
  for (;;) {
    RawPoly p = parse_poly(cur, L);
    check_homogeneous(p, L, cur.line);
    if (!p.terms.empty()) gens.push_back(std::move(p));
    if (!cur.accept_punct(",")) break;
    if (cur.at_end()) break;  // tolerate a trailing comma
  }
  if (!cur.at_end()) cur.fail("trailing input after the generator list");
  return gens;
}

}  // namespace

const ObjectDecl* InputDocument::find(const std::string& name) const {
  for (const ObjectDecl& o : objects)
    if (o.name == name) return &o;
  return nullptr;
}

InputDocument parse_input(const std::string& text) {
  // logical lines: join continuations, track the starting physical line
  std::vector<std::pair<int, std::string>> lines;
  {
    std::string cur;
    int start = 1, lineno = 0;
    size_t i = 0;
    while (i <= text.size()) {
      size_t e = text.find('\n', i);
      if (e == std::string::npos) e = text.size();
      std::string phys = text.substr(i, e - i);
      ++lineno;
      size_t hash = phys.find('#');
      if (hash != std::string::npos) phys.resize(hash);
      while (!phys.empty() && std::isspace((unsigned char)phys.back())) phys.pop_back();
      size_t b = 0;
      while (b < phys.size() && std::isspace((unsigned char)phys[b])) ++b;
      phys = phys.substr(b);
      if (cur.empty()) {
        start = lineno;
        cur = phys;
      } else if (!phys.empty()) {
        cur += ' ';
        cur += phys;
      }
      bool cont = !cur.empty() &&
                  std::string("=,+-(").find(cur.back()) != std::string::npos;
      if (!cont && !cur.empty()) {
        lines.push_back({start, cur});
        cur.clear();
      }
      i = e + 1;
    }
    if (!cur.empty()) lines.push_back({start, cur});
  }

  InputDocument doc;
  bool ring_seen = false;
  for (auto& [lineno, raw] : lines) {
    std::vector<Token> toks = tokenize(raw, lineno);
    Cursor cur{&toks, 0, lineno};
    if (cur.at_end()) continue;
    std::string head = cur.expect_ident("a statement keyword");

    if (head == "ring") {
      if (ring_seen) cur.fail("duplicate ring declaration");
      doc.field_token = cur.expect_ident("a coefficient field");
      if (doc.field_token != "Q") {
        if (doc.field_token[0] != 'F' || doc.field_token.size() < 2 ||
            !std::all_of(doc.field_token.begin() + 1, doc.field_token.end(),
                         [](char c) { return std::isdigit((unsigned char)c); }))
          cur.fail("coefficient field must be Q or F<p>");
      }
      cur.expect_punct("[");
      if (cur.expect_ident("x1") != "x1") cur.fail("variables must start at x1");
      cur.expect_punct("..");
      std::string last = cur.expect_ident("the last variable");
      cur.expect_punct("]");
      if (last.size() < 2 || last[0] != 'x') cur.fail("variables are x1..xn");
      doc.nvars = (int)std::stol(last.substr(1));
      if (doc.nvars < 1 || doc.nvars > 64) cur.fail("variable count must be in 1..64");
      if (!cur.at_end()) cur.fail("trailing input after the ring declaration");
      ring_seen = true;
      continue;
    }

    if (head == "ideal" || head == "module") {
      if (!ring_seen) cur.fail("the ring must be declared first");
      ObjectDecl o;
      o.line = lineno;
      o.name = cur.expect_ident("a name");
      if (doc.find(o.name)) cur.fail("duplicate name '" + o.name + "'");
      if (head == "ideal") {
        o.kind = ObjectDecl::Kind::Ideal;
        o.layout = FreeModuleLayout::ring(doc.nvars);
      } else {
        o.kind = ObjectDecl::Kind::Module;
        if (cur.expect_ident("'in'") != "in") cur.fail("expected 'in F(...)'");
        if (cur.expect_ident("'F'") != "F") cur.fail("expected 'in F(...)'");
        cur.expect_punct("(");
        std::vector<int> shifts;
        for (;;) {
          // twists as written; internal shifts are their negatives
          shifts.push_back(-(int)cur.expect_integer("a twist"));
          if (!cur.accept_punct(",")) break;
        }
        cur.expect_punct(")");
        o.layout = FreeModuleLayout{doc.nvars, std::move(shifts)};
      }
      cur.expect_punct("=");
      o.gens = parse_gens(cur, o.layout);
      doc.objects.push_back(std::move(o));
      continue;
    }

    if (head == "complex") {
      ObjectDecl o;
      o.line = lineno;
      o.kind = ObjectDecl::Kind::Complex;
      o.name = cur.expect_ident("a name");
      if (doc.find(o.name)) cur.fail("duplicate name '" + o.name + "'");
      if (cur.expect_ident("'on'") != "on") cur.fail("expected 'on <vertices>'");
      int n = (int)cur.expect_number("a vertex count");
      if (!cur.accept_punct("=")) cur.expect_punct(":");
      if (cur.peek().kind == Token::Ident && cur.peek().text == "void") {
        cur.next();
        o.complex = SimplicialComplex::void_complex(n);
      } else {
        std::vector<std::vector<int>> facets;
        while (cur.accept_punct("{")) {
          std::vector<int> f;
          if (!cur.accept_punct("}")) {
            for (;;) {
              f.push_back((int)cur.expect_number("a vertex"));
              if (!cur.accept_punct(",")) break;
            }
            cur.expect_punct("}");
          }
          facets.push_back(std::move(f));
        }
        if (facets.empty()) cur.fail("expected a facet list or 'void'");
        o.complex = SimplicialComplex::from_facets(n, facets);
      }
      if (!cur.at_end()) cur.fail("trailing input after the facet list");
      o.layout = FreeModuleLayout::ring(n);
      doc.objects.push_back(std::move(o));
      continue;
    }

    // requests
    Request r;
    r.line = lineno;
    if (head == "check") {
      std::string what = cur.expect_ident("scm, iscm or edepth");
      if (what == "scm") {
        r.kind = Request::Kind::Scm;
      } else if (what == "iscm") {
        r.kind = Request::Kind::Iscm;
        r.arg = (int)cur.expect_number("the partial level");
      } else if (what == "edepth") {
        r.kind = Request::Kind::Edepth;
      } else {
        cur.fail("unknown check '" + what + "'");
      }
      r.target = cur.expect_ident("a target name");
    } else if (head == "gin") {
      r.kind = Request::Kind::Gin;
      r.target = cur.expect_ident("a target name");
      if (!cur.at_end()) {
        if (cur.expect_ident("'r'") != "r") cur.fail("expected r=<k>");
        cur.expect_punct("=");
        r.arg = (int)cur.expect_number("the partial level");
      }
    } else if (head == "filtration") {
      r.kind = Request::Kind::Filtration;
      r.target = cur.expect_ident("a target name");
    } else if (head == "hilb") {
      cur.expect_punct("-");
      if (cur.expect_ident("'lc'") != "lc") cur.fail("expected hilb-lc");
      r.kind = Request::Kind::HilbLc;
      r.target = cur.expect_ident("a target name");
      if (cur.expect_ident("'i'") != "i") cur.fail("expected i=<k>");
      cur.expect_punct("=");
      r.arg = (int)cur.expect_number("the cohomological index");
    } else if (head == "lexcmp") {
      r.kind = Request::Kind::LexCmp;
      r.target = cur.expect_ident("a target name");
      if (cur.expect_ident("'i'") != "i") cur.fail("expected i=<k>");
      cur.expect_punct("=");
      r.arg = (int)cur.expect_number("the cohomological index");
    } else {
      cur.fail("unknown statement '" + head + "'");
    }
    if (!cur.at_end()) cur.fail("trailing input after the request");
    if (!doc.find(r.target)) cur.fail("undefined name '" + r.target + "'");
    doc.requests.push_back(std::move(r));
  }
  if (!ring_seen && doc.objects.empty() && doc.requests.empty())
    throw ParseError("empty input", 1, 1);
  if (!ring_seen) {
    bool needs_ring = false;
    for (const ObjectDecl& o : doc.objects)
      if (o.kind != ObjectDecl::Kind::Complex) needs_ring = true;
    if (needs_ring) throw ParseError("missing ring declaration", 1, 1);
  }
  return doc;
}

namespace {

std::string poly_to_string(const RawPoly& p, const FreeModuleLayout& L) {
  if (p.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [t, c] : p.terms) {
    mpq_class a = c;
    if (first) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono;
    for (int v = 0; v < L.nvars; ++v)
      if (t.m.e[v] > 0) {
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(v + 1);
        if (t.m.e[v] > 1) mono += "^" + std::to_string(t.m.e[v]);
      }
    if (L.shifts.size() > 1) {
      if (!mono.empty()) mono += "*";
      mono += "e" + std::to_string(t.comp + 1);
    }
    if (a != 1 || mono.empty()) {
      s += a.get_str();
      if (!mono.empty()) s += "*";
    }
    s += mono;
  }
  return s;
}

}  // namespace

std::string to_string(const Request& r) {
  using K = Request::Kind;
  switch (r.kind) {
    case K::Scm: return "check scm " + r.target;
    case K::Iscm: return "check iscm " + std::to_string(r.arg) + " " + r.target;
    case K::Edepth: return "check edepth " + r.target;
    case K::Gin:
      return "gin " + r.target + (r.arg >= 0 ? " r=" + std::to_string(r.arg) : "");
    case K::Filtration: return "filtration " + r.target;
    case K::HilbLc: return "hilb-lc " + r.target + " i=" + std::to_string(r.arg);
    case K::LexCmp: return "lexcmp " + r.target + " i=" + std::to_string(r.arg);
  }
  return "";
}

std::string print_input(const InputDocument& doc) {
  std::string out;
  if (doc.nvars > 0)
    out += "ring " + doc.field_token + "[x1..x" + std::to_string(doc.nvars) + "]\n";
  for (const ObjectDecl& o : doc.objects) {
    if (o.kind == ObjectDecl::Kind::Complex) {
      out += "complex " + o.name + " on " + std::to_string(o.complex.n) + " = ";
      if (o.complex.is_void)
        out += "void";
      else if (o.complex.facets.empty())
        out += "{}";
      else
        out += to_string(o.complex);
      out += "\n";
      continue;
    }
    if (o.kind == ObjectDecl::Kind::Ideal) {
      out += "ideal " + o.name + " = ";
    } else {
      out += "module " + o.name + " in F(";
      for (size_t i = 0; i < o.layout.shifts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(-o.layout.shifts[i]);
      }
      out += ") = ";
    }
    if (o.gens.empty()) out += "0";
    for (size_t i = 0; i < o.gens.size(); ++i) {
      if (i) out += ", ";
      out += poly_to_string(o.gens[i], o.layout);
    }
    out += "\n";
  }
  for (const Request& r : doc.requests) out += to_string(r) + "\n";
  return out;
}

Element materialize(const Context& ctx, const RawPoly& p) {
  return ctx.make(p.terms);
}

}  // namespace seqcm
