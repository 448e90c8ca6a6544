#pragma once

#include <json.hpp>

#include "seqcm/scm.hpp"
#include "seqcm/textio.hpp"

namespace seqcm {

struct RunOptions {
  FieldSpec field = FieldSpec::rationals();
  bool field_overridden = false;  // command line beats the ring declaration
  uint64_t seed = 0;
  int trials = 3;
  int degree_cap = 64;
  std::vector<std::string> routes = {"all"};
  int jobs = 1;
  bool timings = false;  // excluded by default so reports are byte-stable
};

struct RunOutcome {
  nlohmann::ordered_json report;
  bool all_completed = true;
  std::string human;  // one summary line per request
};

// Executes every request of the document. Individual failures are recorded in
// the report instead of aborting the run; randomness is derived from the root
// seed and the request position, so reports do not depend on --jobs.
RunOutcome run_document(const InputDocument& doc, const RunOptions& opt);

nlohmann::ordered_json to_json(const HilbertSeries& H);
nlohmann::ordered_json to_json(const LCHilbert& h);

}  // namespace seqcm
