#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "seqcm/report.hpp"

using namespace seqcm;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("stored reports are reproduced byte for byte") {
  for (const char* name : {"stable4", "components5", "wide7"}) {
    std::string base = std::string(SEQCM_TEST_DIR) + "/golden/" + name;
    InputDocument doc = parse_input(slurp(base + ".seqcm"));
    RunOptions opt;
    opt.seed = 1;
    opt.trials = 2;
    RunOutcome out = run_document(doc, opt);
    CHECK(out.all_completed);
    CHECK(out.report.dump(2) + "\n" == slurp(base + ".json"));
  }
}
