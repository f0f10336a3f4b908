#include "cliquemin/report.hpp"

namespace cliquemin {

std::string verdict_name(VerificationReport::Verdict v) {
  switch (v) {
    case VerificationReport::Verdict::Pass:
      return "pass";
    case VerificationReport::Verdict::Fail:
      return "fail";
    case VerificationReport::Verdict::HypothesesUnmet:
      return "hypotheses_unmet";
  }
  return "fail";
}

}  // namespace cliquemin
