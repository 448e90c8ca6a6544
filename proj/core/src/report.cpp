#include "seqcm/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "seqcm/rng.hpp"

namespace seqcm {

using nlohmann::ordered_json;

ordered_json to_json(const HilbertSeries& H) {
  ordered_json num = ordered_json::array();
  for (const auto& [e, c] : H.num) num.push_back({e, c.get_str()});
  return {{"numerator", num}, {"pole", H.pole}};
}

ordered_json to_json(const LCHilbert& h) {
  ordered_json num = ordered_json::array();
  for (const auto& [e, c] : h.num) num.push_back({e, c.get_str()});
  return {{"numerator", num}, {"pole", h.pole}};
}

namespace {

// A declared object, ready for computation.
struct Target {
  ModulePresentation M;
  std::optional<MonModule> monomial;
  std::optional<MonIdeal> mon_ideal;  // set when M is cyclic over a monomial ideal
};

std::string term_string(const FreeModuleLayout& L, const ModTerm& t) {
  std::string s = to_string(t.m);
  if (L.shifts.size() > 1) {
    if (t.m.is_one())
      s = "e" + std::to_string(t.comp + 1);
    else
      s += "*e" + std::to_string(t.comp + 1);
  }
  return s;
}

Target resolve(const ObjectDecl& o, const RunOptions& opt) {
  Target t;
  if (o.kind == ObjectDecl::Kind::Complex) {
    MonIdeal I = stanley_reisner_ideal(o.complex);
    t.M = ModulePresentation::cyclic(opt.field, I);
    t.M.degree_cap = opt.degree_cap;
    t.monomial = MonModule::from_ideal(I);
    t.mon_ideal = std::move(I);
    return t;
  }
  t.M.field = opt.field;
  t.M.layout = o.layout;
  t.M.degree_cap = opt.degree_cap;
  Context ctx = t.M.context();
  bool all_monomial = true;
  std::vector<ModTerm> terms;
  for (const RawPoly& p : o.gens) {
    Element e = materialize(ctx, p);
    if (e.is_zero()) continue;  // possible over a finite field
    if (e.terms.size() == 1)
      terms.push_back(e.lt());
    else
      all_monomial = false;
    t.M.gens.push_back(std::move(e));
  }
  if (all_monomial) {
    t.monomial = MonModule::from_terms(o.layout, terms);
    if (o.kind == ObjectDecl::Kind::Ideal) t.mon_ideal = t.monomial->comps[0];
  }
  return t;
}

std::vector<std::string> scm_routes(const RunOptions& opt, const Target& t, bool partial) {
  std::vector<std::string> routes;
  bool all = std::find(opt.routes.begin(), opt.routes.end(), "all") != opt.routes.end();
  if (all) {
    if (!partial) routes.push_back("peskine");
    if (t.monomial) routes.push_back("schenzel");
    routes.push_back("gin");
    return routes;
  }
  for (const std::string& r : opt.routes) {
    if (partial && r == "peskine")
      throw std::invalid_argument("the peskine route is not available for partial checks");
    routes.push_back(r);
  }
  return routes;
}

ordered_json filtration_steps_json(const FreeModuleLayout& L, const DimensionFiltration& F,
                                   int* strict = nullptr) {
  ordered_json steps = ordered_json::array();
  for (const FiltrationStep& s : F.steps) {
    ordered_json bracket = ordered_json::array();
    for (const ModTerm& g : s.bracket.term_gens())
      bracket.push_back(term_string(L, g));
    steps.push_back({{"i", s.i},
                     {"bracket", bracket},
                     {"quotient_zero", s.quotient_zero},
                     {"quotient_cm", s.quotient_cm},
                     {"quotient_dim", s.quotient_dim},
                     {"quotient_hilbert", to_json(s.quotient_hilbert)}});
    if (strict && !s.quotient_zero) ++*strict;
  }
  return steps;
}

ordered_json scm_json(const ScmReport& rep) {
  ordered_json routes = ordered_json::object();
  for (const auto& [name, r] : rep.routes)
    routes[name] = {{"verdict", r.verdict}, {"certificate", r.certificate}};
  return {{"verdict", rep.verdict}, {"probabilistic", rep.probabilistic}, {"routes", routes}};
}

struct RequestRun {
  ordered_json payload;
  std::string summary;
};

RequestRun run_request(const InputDocument& doc, const Request& r, const RunOptions& opt,
                       uint64_t seed) {
  const ObjectDecl& o = *doc.find(r.target);
  Target t = resolve(o, opt);
  Context ctx = t.M.context();
  int n = t.M.layout.nvars;
  RequestRun out;
  switch (r.kind) {
    case Request::Kind::Scm: {
      ScmReport rep = is_scm(t.M, t.monomial, scm_routes(opt, t, false), opt.trials, seed);
      out.payload = scm_json(rep);
      if (t.monomial) {
        DimensionFiltration F = dimension_filtration(opt.field, *t.monomial);
        out.payload["filtration"] = filtration_steps_json(t.M.layout, F);
      }
      out.summary = rep.verdict ? "sequentially Cohen-Macaulay"
                                : "not sequentially Cohen-Macaulay";
      break;
    }
    case Request::Kind::Iscm: {
      ScmReport rep =
          is_i_scm(t.M, r.arg, t.monomial, scm_routes(opt, t, true), opt.trials, seed);
      out.payload = scm_json(rep);
      out.payload["level"] = r.arg;
      out.summary = std::string(rep.verdict ? "" : "not ") +
                    std::to_string(r.arg) + "-sequentially Cohen-Macaulay";
      break;
    }
    case Request::Kind::Edepth: {
      bool with_gin =
          std::find(opt.routes.begin(), opt.routes.end(), "all") != opt.routes.end() ||
          std::find(opt.routes.begin(), opt.routes.end(), "gin") != opt.routes.end();
      EdepthReport rep = edepth(t.M, with_gin, opt.trials, seed);
      ordered_json depths = ordered_json::object();
      for (const auto& [j, d] : rep.ext_depths)
        depths[std::to_string(j)] =
            d == DEPTH_INFINITY ? ordered_json("infinity") : ordered_json(d);
      ordered_json checks = ordered_json::object();
      for (const auto& [rr, ok] : rep.gin_checks) checks[std::to_string(rr)] = ok;
      out.payload = {{"edepth", rep.edepth},
                     {"ext_depths", depths},
                     {"gin_checks", checks},
                     {"probabilistic", rep.probabilistic}};
      out.summary = "E-depth " + std::to_string(rep.edepth);
      break;
    }
    case Request::Kind::Gin: {
      int rr = r.arg < 0 ? n : r.arg;
      if (rr < 1 || rr > n) throw std::invalid_argument("partial level out of range");
      std::vector<Element> rep_gens;
      bool representative = false;
      if (rr == n) {
        rep_gens = gin(ctx, t.M.gens, opt.trials, seed).gens;
      } else {
        // the partial initial submodule varies with the sampled coordinates;
        // certify unanimity of the local cohomology series and report the
        // first sample as a representative
        auto candidates = gin_partial_candidates(ctx, rr, t.M.gens, opt.trials, seed);
        std::vector<LCHilbert> reference;
        for (size_t tt = 0; tt < candidates.size(); ++tt) {
          ModulePresentation MG = t.M;
          MG.gens = candidates[tt];
          for (int i = 0; i <= n; ++i) {
            LCHilbert h = lc_hilbert(MG, i);
            if (tt == 0)
              reference.push_back(h);
            else if (h != reference[(size_t)i])
              throw GinDisagreement(std::move(candidates));
          }
        }
        rep_gens = candidates[0];
        representative = true;
      }
      ordered_json gens = ordered_json::array();
      for (const Element& e : rep_gens) gens.push_back(to_string(ctx, e));
      out.payload = {{"r", rr},
                     {"generators", gens},
                     {"representative", representative},
                     {"trials_total", opt.trials}};
      out.summary = std::to_string(rep_gens.size()) + " generators";
      break;
    }
    case Request::Kind::Filtration: {
      if (!t.monomial)
        throw std::invalid_argument("the dimension filtration needs monomial generators");
      DimensionFiltration F = dimension_filtration(opt.field, *t.monomial);
      int strict = 0;
      ordered_json steps = filtration_steps_json(t.M.layout, F, &strict);
      out.payload = {{"d", F.d}, {"steps", steps}};
      out.summary = "dimension " + std::to_string(F.d) + ", " +
                    std::to_string(strict) + " strict steps";
      break;
    }
    case Request::Kind::HilbLc: {
      LCHilbert h = lc_hilbert(t.M, r.arg);
      out.payload = {{"i", r.arg}, {"series", to_json(h)}};
      out.summary = "h^" + std::to_string(r.arg) + " = " + to_string(h);
      break;
    }
    case Request::Kind::LexCmp: {
      if (!t.mon_ideal)
        throw std::invalid_argument("the lexsegment comparison needs a monomial ideal");
      LexComparison c = lex_comparison(opt.field, *t.mon_ideal, r.arg, opt.trials, seed);
      ordered_json lex = ordered_json::array();
      for (const Monomial& m : c.lex.gens) lex.push_back(to_string(m));
      out.payload = {{"i", r.arg},
                     {"lex", lex},
                     {"h_ideal", to_json(c.h_ideal)},
                     {"h_gin", to_json(c.h_gin)},
                     {"h_lex", to_json(c.h_lex)},
                     {"eq_ideal_lex", c.eq_ideal_lex},
                     {"eq_gin_lex", c.eq_gin_lex},
                     {"eq_tail", c.eq_tail},
                     {"dominated", c.dominated},
                     {"window", {c.window_lo, c.window_hi}}};
      out.summary = c.eq_ideal_lex ? "lexsegment bound attained"
                                   : "lexsegment bound strict";
      break;
    }
  }
  return out;
}

}  // namespace

RunOutcome run_document(const InputDocument& doc, const RunOptions& opt) {
  RunOutcome out;
  size_t m = doc.requests.size();
  std::vector<ordered_json> results(m);
  std::vector<std::string> summaries(m);
  std::vector<char> completed(m, 0);

  auto work = [&](size_t i) {
    const Request& r = doc.requests[i];
    ordered_json entry = {{"request", to_string(r)}, {"line", r.line}};
    auto t0 = std::chrono::steady_clock::now();
    try {
      RequestRun rr = run_request(doc, r, opt, Rng::derive(opt.seed, (uint64_t)i));
      entry["completed"] = true;
      entry["result"] = std::move(rr.payload);
      summaries[i] = to_string(r) + ": " + rr.summary;
      completed[i] = 1;
    } catch (const std::exception& e) {
      entry["completed"] = false;
      entry["error"] = e.what();
      summaries[i] = to_string(r) + ": error: " + e.what();
    }
    if (opt.timings) {
      auto dt = std::chrono::steady_clock::now() - t0;
      entry["elapsed_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }
    results[i] = std::move(entry);
  };

  int jobs = std::max(1, opt.jobs);
  if (jobs <= 1 || m <= 1) {
    for (size_t i = 0; i < m; ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (size_t i = next++; i < m; i = next++) work(i);
      });
    for (std::thread& th : pool) th.join();
  }

  ordered_json requests = ordered_json::array();
  for (size_t i = 0; i < m; ++i) {
    requests.push_back(std::move(results[i]));
    out.human += summaries[i] + "\n";
    if (!completed[i]) out.all_completed = false;
  }
  std::string field = opt.field.characteristic == 0
                          ? "Q"
                          : "F" + std::to_string(opt.field.characteristic);
  out.report = {{"generator", "seqcm"},
                {"version", "0.1.0"},
                {"field", field},
                {"seed", opt.seed},
                {"trials", opt.trials},
                {"degree_cap", opt.degree_cap},
                {"requests", requests}};
  return out;
}

}  // namespace seqcm
