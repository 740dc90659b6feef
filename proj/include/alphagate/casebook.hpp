#ifndef ALPHAGATE_CASEBOOK_HPP
#define ALPHAGATE_CASEBOOK_HPP

#include <map>
#include <string>
#include <vector>

#include "alphagate/lint.hpp"
#include "alphagate/model.hpp"

namespace alphagate {

// Worked example and published case studies transcribed as plan documents.
struct CaseFixture {
  std::string case_id;
  TestingPlan plan;
  std::map<DecisionBasis, Support> expected;
  std::string provenance;
};

std::vector<std::string> case_ids();

// Throws std::invalid_argument on an unknown id.
CaseFixture load_case(const std::string& case_id);

struct CaseResult {
  CaseFixture fixture;
  ReclassificationReport report;
  LintResult lint;
};

CaseResult run_case(const std::string& case_id);

}  // namespace alphagate

#endif
