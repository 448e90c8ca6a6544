#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "seqcm/report.hpp"

namespace {

seqcm::FieldSpec parse_field(const std::string& s) {
  if (s == "q" || s == "Q") return seqcm::FieldSpec::rationals();
  if (s.rfind("fp:", 0) == 0)
    return seqcm::FieldSpec::prime_field((uint32_t)std::stoul(s.substr(3)));
  throw CLI::ValidationError("--field", "expected q or fp:<p>");
}

std::vector<std::string> parse_routes(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part != "all" && part != "peskine" && part != "schenzel" && part != "gin")
      throw CLI::ValidationError("--routes", "expected all, peskine, schenzel or gin");
    out.push_back(part);
  }
  if (out.empty()) throw CLI::ValidationError("--routes", "empty route list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decides sequential Cohen-Macaulayness, partial variants and "
               "E-depth of graded modules over a polynomial ring"};
  std::string input_path = "-";
  std::string field_str = "q";
  std::string routes_str = "all";
  std::string json_path;
  uint64_t seed = 0;
  bool seed_given = false;
  int trials = 3, degree_cap = 64, jobs = 1;
  bool timings = false;

  app.add_option("input", input_path, "input file, or - for stdin");
  app.add_option("--field", field_str, "coefficient field: q or fp:<p>");
  auto* seed_opt = app.add_option("--seed", seed, "root seed for random coordinate changes");
  app.add_option("--trials", trials, "independent trials per generic initial module")
      ->check(CLI::Range(2, 64));
  app.add_option("--degree-cap", degree_cap, "abort degrees beyond this bound")
      ->check(CLI::Range(1, 4096));
  app.add_option("--json", json_path, "write the full report to this file");
  app.add_option("--routes", routes_str, "all, or a comma list of peskine,schenzel,gin");
  app.add_option("--jobs", jobs, "run requests in parallel")->check(CLI::Range(1, 256));
  app.add_flag("--timings", timings, "include wall-clock times in the report");
  CLI11_PARSE(app, argc, argv);
  seed_given = seed_opt->count() > 0;

  try {
    std::string text;
    if (input_path == "-") {
      std::stringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    } else {
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "cannot open " << input_path << "\n";
        return 2;
      }
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }

    seqcm::InputDocument doc = seqcm::parse_input(text);

    seqcm::RunOptions opt;
    opt.field_overridden = field_str != "q";
    opt.field = opt.field_overridden || doc.field_token == "Q"
                    ? parse_field(field_str)
                    : seqcm::FieldSpec::prime_field(
                          (uint32_t)std::stoul(doc.field_token.substr(1)));
    if (!seed_given) {
      if (const char* env = std::getenv("SEQCM_SEED")) seed = std::stoull(env);
    }
    opt.seed = seed;
    opt.trials = trials;
    opt.degree_cap = degree_cap;
    opt.routes = parse_routes(routes_str);
    opt.jobs = jobs;
    opt.timings = timings;

    seqcm::RunOutcome out = seqcm::run_document(doc, opt);
    std::cout << out.human;
    if (!json_path.empty()) {
      std::ofstream js(json_path);
      if (!js) {
        std::cerr << "cannot write " << json_path << "\n";
        return 2;
      }
      js << out.report.dump(2) << "\n";
    }
    return out.all_completed ? 0 : 1;
  } catch (const seqcm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
