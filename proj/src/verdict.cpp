#include "lefcert/verdict.hpp"

#include <utility>

namespace lefcert {

const char* status_name(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::violated: return "violated";
    case Status::not_applicable: return "not-applicable";
    case Status::unknown: return "unknown";
  }
  return "unknown";
}

const char* overall_name(Overall o) {
  switch (o) {
    case Overall::realizable_consistent: return "realizable-consistent";
    case Overall::refuted: return "refuted";
    case Overall::incomplete: return "incomplete";
  }
  return "incomplete";
}

InequalityVerdict make_verdict(std::string id, std::string ref, Rational slack) {
  InequalityVerdict v;
  v.id = std::move(id);
  v.ref = std::move(ref);
  v.status = slack >= 0 ? Status::holds : Status::violated;
  v.slack = std::move(slack);
  v.slack_known = true;
  return v;
}

}  // namespace lefcert
