#pragma once

#include "lefcert/numeric.hpp"

#include <string>
#include <vector>

namespace lefcert {

enum class Status { holds, violated, not_applicable, unknown };

const char* status_name(Status s);

/// One inequality, evaluated in "LHS - RHS >= 0" normal form.
struct InequalityVerdict {
  std::string id;    // stable identifier, e.g. "EQ18", "EQ26@1/2"
  std::string ref;   // citation label rendered in reports
  Status status = Status::unknown;
  Rational slack = 0;      // meaningful when slack_known
  bool slack_known = false;
};

InequalityVerdict make_verdict(std::string id, std::string ref, Rational slack);

enum class Overall { realizable_consistent, refuted, incomplete };

const char* overall_name(Overall o);

struct CertificateReport {
  std::vector<InequalityVerdict> verdicts;
  Overall overall = Overall::realizable_consistent;
};

}  // namespace lefcert
