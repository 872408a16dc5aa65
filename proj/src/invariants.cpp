#include "lefcert/invariants.hpp"

#include "lefcert/errors.hpp"

#include <string>
#include <utility>

namespace lefcert {

std::int64_t euler_characteristic(std::int64_t g, std::int64_t h, std::int64_t k) {
  const Int chi = Int(4) * (Int(g) - 1) * (Int(h) - 1) + k;
  return to_int64(chi);
}

Counts total_counts(const FibrationDescription& fd) {
  Counts counts;
  counts.D = static_cast<std::int64_t>(fd.fibers.size());
  for (const FiberConfiguration& fiber : fd.fibers) {
    counts.k += static_cast<std::int64_t>(fiber.curves.size());
    counts.N += static_cast<std::int64_t>(fiber.pieces.size());
    for (const Curve& curve : fiber.curves) {
      if (curve.separating) {
        ++counts.s;
      }
    }
  }
  counts.n = counts.k - counts.s;
  return counts;
}

std::int64_t b2_minus_lower_bound(std::int64_t N, std::int64_t D) {
  if (D < 0 || N < D) {
    throw Error(Err::InvalidCounts,
                "need N >= D >= 0, got N = " + std::to_string(N) + ", D = " + std::to_string(D));
  }
  if (D == 0) {
    return 0;  // no singular fibers: the bound's derivation does not apply
  }
  return 1 + N - D;
}

std::vector<InequalityVerdict> component_bounds_check(std::int64_t k, std::int64_t n,
                                                      std::int64_t s, std::int64_t D,
                                                      std::int64_t N, std::int64_t h,
                                                      bool all_stable) {
  (void)n;
  std::vector<InequalityVerdict> verdicts;
  verdicts.push_back(
      make_verdict("EQ4", "Prop. 6, Eq. (4)", Rational(N) - Rational(s) - Rational(D)));
  verdicts.push_back(make_verdict("EQ5", "Prop. 6, Eq. (5)",
                                  Rational(N) - Rational(k) + Rational(h - 1) * Rational(D)));
  if (all_stable && h >= 2) {
    verdicts.push_back(make_verdict("REM7K", "Remark 7 (stable fibers)",
                                    Rational(3) * Rational(h - 1) * Rational(D) - Rational(k)));
    verdicts.push_back(make_verdict("REM7N", "Remark 7 (stable fibers)",
                                    Rational(2) * Rational(h - 1) * Rational(D) - Rational(N)));
  }
  return verdicts;
}

std::pair<std::int64_t, std::int64_t> betti_resolution(std::int64_t chi, std::int64_t b1,
                                                       std::int64_t sigma) {
  const Int b2 = Int(chi) - 2 + Int(2) * b1;
  const Int plus_twice = b2 + sigma;
  const Int minus_twice = b2 - sigma;
  if (plus_twice % 2 != 0) {
    throw Error(Err::ParityMismatch, "chi - 2 + 2 b1 and sigma have different parities");
  }
  if (plus_twice < 0 || minus_twice < 0) {
    throw Error(Err::NegativeBetti, "requested signature exceeds b2");
  }
  return {to_int64(plus_twice / 2), to_int64(minus_twice / 2)};
}

std::int64_t canonical_square(std::int64_t chi, std::int64_t b1, std::int64_t b2_minus) {
  const Int k2 = Int(5) * chi - 6 + Int(6) * b1 - Int(6) * b2_minus;
  return to_int64(k2);
}

B1State b1_state(const FibrationDescription& fd) {
  B1State state;
  if (has_full_cycle_homology(fd) && (fd.base_genus == 0 || fd.handle_matrices)) {
    state.exact = true;
    state.value = first_homology(fd).b1;
    return state;
  }
  if (fd.base_genus >= 1) {
    state.lower = 2 * fd.base_genus;
    state.upper = 2 * fd.base_genus + 2 * fd.fiber_genus;
    return state;
  }
  const Counts counts = total_counts(fd);
  state.lower = 0;
  state.upper = counts.n > 0 ? 2 * fd.fiber_genus - 1 : 2 * fd.fiber_genus;
  return state;
}

std::int64_t canonical_square_upper_bound(const FibrationDescription& fd) {
  const Counts counts = total_counts(fd);
  if (counts.D < 1) {
    throw Error(Err::InvalidCounts, "K^2 bound form needs at least one singular fiber");
  }
  const std::int64_t chi = euler_characteristic(fd.base_genus, fd.fiber_genus, counts.k);
  const std::int64_t b1_up = b1_state(fd).upper_value();
  const Int bound =
      Int(5) * chi - 6 + Int(6) * b1_up - Int(6) * (1 + Int(counts.N) - Int(counts.D));
  return to_int64(bound);
}

InvariantReport compute_invariants(const FibrationDescription& fd) {
  InvariantReport report;
  report.fiber_genus = fd.fiber_genus;
  report.base_genus = fd.base_genus;
  report.counts = total_counts(fd);
  report.chi = euler_characteristic(fd.base_genus, fd.fiber_genus, report.counts.k);
  report.b1 = b1_state(fd);
  report.b2_minus_lower = b2_minus_lower_bound(report.counts.N, report.counts.D);
  report.asserts_not_rational_or_ruled = fd.asserts_not_rational_or_ruled;
  report.ruled_params = fd.ruled_params;
  report.signature = fd.signature;

  report.all_semistable = true;
  report.all_stable = true;
  for (const FiberConfiguration& fiber : fd.fibers) {
    report.all_semistable = report.all_semistable && check_semistable(fiber);
    report.all_stable = report.all_stable && check_stable(fiber);
  }

  if (!report.b1.exact) {
    report.warnings.push_back("b1 known only as the interval [" +
                              std::to_string(report.b1.lower) + ", " +
                              std::to_string(report.b1.upper) + "]");
  } else {
    report.torsion = first_homology(fd).torsion;
  }

  if (has_full_cycle_homology(fd)) {
    report.monodromy = monodromy_shadow_check(fd);
  } else {
    report.monodromy = ShadowVerdict::indeterminate;
  }
  if (report.monodromy == ShadowVerdict::indeterminate) {
    report.warnings.push_back("homological monodromy check indeterminate (incomplete data)");
  } else if (report.monodromy == ShadowVerdict::nonidentity) {
    report.warnings.push_back(
        "homological monodromy product is not the identity; the cycle data cannot close up over "
        "the given base");
  }

  if (fd.signature && report.b1.exact) {
    const auto [plus, minus] = betti_resolution(report.chi, report.b1.value, *fd.signature);
    report.b2_plus = plus;
    report.b2_minus = minus;
    report.k_squared = canonical_square(report.chi, report.b1.value, minus);
  }
  if (report.counts.D >= 1) {
    report.k_squared_upper = canonical_square_upper_bound(fd);
  }
  return report;
}

}  // namespace lefcert
