#pragma once

#include "lefcert/fibration.hpp"
#include "lefcert/homology.hpp"
#include "lefcert/verdict.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lefcert {

struct Counts {
  std::int64_t k = 0;  // vanishing cycles, k = n + s
  std::int64_t n = 0;  // nonseparating
  std::int64_t s = 0;  // separating
  std::int64_t D = 0;  // singular fibers
  std::int64_t N = 0;  // irreducible components of singular fibers

  bool operator==(const Counts&) const = default;
};

/// First Betti number of the total space: exact when full homology data is
/// available, otherwise the structural interval ([2g, 2g+2h] for g >= 1;
/// [0, 2h-1] for pencils with n > 0, [0, 2h] otherwise).
struct B1State {
  bool exact = false;
  std::int64_t value = 0;  // when exact
  std::int64_t lower = 0;  // interval otherwise
  std::int64_t upper = 0;

  std::int64_t upper_value() const { return exact ? value : upper; }
};

struct InvariantReport {
  std::int64_t fiber_genus = 1;
  std::int64_t base_genus = 0;
  std::int64_t chi = 0;
  Counts counts;
  B1State b1;
  std::int64_t b2_minus_lower = 0;
  std::optional<std::int64_t> b2_plus;    // when signature and exact b1 known
  std::optional<std::int64_t> b2_minus;
  std::optional<std::int64_t> k_squared;        // exact, via b2_minus
  std::optional<std::int64_t> k_squared_upper;  // bound form, D >= 1 only
  std::vector<Int> torsion;  // H_1 torsion when exact homology is known
  bool all_semistable = false;
  bool all_stable = false;
  ShadowVerdict monodromy = ShadowVerdict::indeterminate;
  bool asserts_not_rational_or_ruled = false;
  std::optional<RuledParams> ruled_params;
  std::optional<std::int64_t> signature;
  std::vector<std::string> warnings;

  bool is_pencil() const { return base_genus == 0; }
};

/// chi(X) = 4(g-1)(h-1) + k.
std::int64_t euler_characteristic(std::int64_t g, std::int64_t h, std::int64_t k);

Counts total_counts(const FibrationDescription& fd);

/// 1 + N - D for D >= 1; 0 when there are no singular fibers. The D = 0
/// value is reported as 0 because the bound's derivation needs at least one
/// singular fiber.
std::int64_t b2_minus_lower_bound(std::int64_t N, std::int64_t D);

/// Component-count verdicts: EQ4 (N >= s + D), EQ5 (N >= k - (h-1)D), and,
/// when all fibers are stable and h >= 2, REM7K (k <= 3(h-1)D) and
/// REM7N (N <= 2(h-1)D).
std::vector<InequalityVerdict> component_bounds_check(std::int64_t k, std::int64_t n,
                                                      std::int64_t s, std::int64_t D,
                                                      std::int64_t N, std::int64_t h,
                                                      bool all_stable);

/// Splits b2 = chi - 2 + 2 b1 into (b2_plus, b2_minus) using the signature.
std::pair<std::int64_t, std::int64_t> betti_resolution(std::int64_t chi, std::int64_t b1,
                                                       std::int64_t sigma);

/// K^2 = 5 chi - 6 + 6 b1 - 6 b2_minus.
std::int64_t canonical_square(std::int64_t chi, std::int64_t b1, std::int64_t b2_minus);

/// Upper bound for K^2 obtained by replacing b2_minus with its lower bound
/// 1 + N - D and b1 with its exact value or structural upper bound.
std::int64_t canonical_square_upper_bound(const FibrationDescription& fd);

/// b1 as exact value or structural interval, depending on available data.
B1State b1_state(const FibrationDescription& fd);

/// Full report for a validated description.
InvariantReport compute_invariants(const FibrationDescription& fd);

}  // namespace lefcert
