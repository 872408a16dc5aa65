#pragma once

#include "lefcert/fibration.hpp"
#include "lefcert/invariants.hpp"
#include "lefcert/verdict.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lefcert {

// The inequality battery, in "LHS - RHS >= 0" normal form. Ids are stable;
// citation labels refer to the battery table in the README.
//
//   g >= 1:  EQ6   5k + 6(3h-1)(g-1) - 6(N-D)
//            EQ9   6(3h-1)(g-1) + 5n - s
//            EQ10  6(3h-1)(g-1) + 6hD - k
//            EQ11  6(3h-1)(g-1) + (5h+1)D - N
//   g = 0:   EQ16  5k - 6h - 6(N-D)
//            EQ17  5n - 6h - s
//            EQ18  6h(D-1) - k
//            EQ19  (5h+1)(D-1) - (h-1) - N
//            THM21 5n - (8h-3)
//            EQ26@t  5n - ts - (8-2t)h - 3(t-1),  t in [0,1]
//   g = 0, asserted not rational or ruled:
//            EQ21  5k - (8h-3) - 5(N-D)
//            EQ22  5n - (8h-3)
//   g = 0, asserted blowup of a ruled surface (params a, b):
//            EQ13  k - (2h-2) - 3(N-D)/2
//            EQ14  n - (2h-2) - (N-D)/2
//            EQ15  2 + 2h - b/2 - 4a
// Component bounds EQ4/EQ5/REM7K/REM7N and, when b2- is exact, the Prop. 5
// consistency check EQ3 and the K^2 cross-checks are included as well.

struct EvalParams {
  std::optional<Rational> t;  // EQ26 family parameter
};

/// Evaluates one inequality by id against a report. Family/hypothesis
/// mismatches yield not_applicable; a missing realizability flag yields
/// unknown. Throws UnknownInequalityId and, for EQ26, ParameterOutOfRange.
InequalityVerdict evaluate_inequality(const std::string& id, const InvariantReport& report,
                                      const EvalParams& params = {});

/// Evaluates the applicable battery and assembles the certificate. The
/// verdict list is in fixed id order, independent of execution order.
/// Throws NotSemistable (with the offending fiber index) and TrivialPencil.
CertificateReport certify(const FibrationDescription& fd);
CertificateReport certify(const InvariantReport& report);

struct K2Bound {
  std::string source;  // "kneser" | "li" | "stipsicz"
  std::string ref;
  std::int64_t bound = 0;
};

struct K2BoundsReport {
  std::vector<K2Bound> bounds;
  /// Present only when K^2 is exactly computable: one verdict per bound.
  std::vector<InequalityVerdict> cross_checks;
};

/// Applicable named gauge-theoretic lower bounds for K^2, as constants:
/// Kneser 2(h-1)(g-1) for g >= 1; Li 2-2h for pencils asserted not rational
/// or ruled; Stipsicz 4(1-h) for all nontrivial pencils. Empty for D = 0.
K2BoundsReport k2_lower_bounds(const FibrationDescription& fd);

/// Least g not excluded by the commutator-length bound
/// g >= 1 + k / (6(3h-1)). Throws GenusTooSmall for h < 2.
std::int64_t minimal_commutator_genus(std::int64_t h, std::int64_t k);

}  // namespace lefcert
