#ifndef CLIQUEMIN_REPORT_HPP
#define CLIQUEMIN_REPORT_HPP

#include <map>
#include <string>

#include "cliquemin/blowup.hpp"

namespace cliquemin {

// Structured outcome of a single verification or reproduction run. The
// verdict is a pure function of `values` (each claim derives it from the
// named counts alone), so a report is a self-contained repro case.
struct VerificationReport {
  enum class Verdict { Pass, Fail, HypothesesUnmet };

  std::string claim;
  std::map<std::string, std::string> instance;  // parameter echo
  std::map<std::string, BigCount> values;
  Verdict verdict = Verdict::Fail;
  std::string details;

  bool passed() const { return verdict == Verdict::Pass; }
};

std::string verdict_name(VerificationReport::Verdict v);

}  // namespace cliquemin

#endif  // CLIQUEMIN_REPORT_HPP
