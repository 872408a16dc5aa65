#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefcert/constructions.hpp"
#include "lefcert/errors.hpp"
#include "lefcert/invariants.hpp"
#include "support/generators.hpp"

using namespace lefcert;
using lefcert::testing::Rng;

TEST_CASE("euler characteristic formula") {
  CHECK(euler_characteristic(0, 1, 12) == 12);
  CHECK(euler_characteristic(1, 3, 0) == 0);
  CHECK(euler_characteristic(0, 2, 20) == 16);
}

TEST_CASE("total counts") {
  // twelve single-node fibers on a genus-1 pencil; for h = 1, k = N
  const Counts e1 = total_counts(elliptic_12());
  CHECK(e1 == Counts{12, 12, 0, 12, 12});

  // one fiber with five parallel separating copies
  FibrationDescription fd;
  fd.fiber_genus = 2;
  fd.base_genus = 0;
  fd.fibers.push_back(parallel_twist_fiber(TwistCurveKind::sep(1, 1), 5, 2));
  fd = validate_fibration(std::move(fd));
  CHECK(total_counts(fd) == Counts{5, 0, 5, 1, 6});

  CHECK(total_counts(trivial_bundle(1, 1)) == Counts{0, 0, 0, 0, 0});
}

TEST_CASE("b2 minus lower bound") {
  CHECK(b2_minus_lower_bound(12, 12) == 1);
  CHECK(b2_minus_lower_bound(6, 1) == 6);
  CHECK(b2_minus_lower_bound(0, 0) == 0);
  CHECK_THROWS_AS((void)b2_minus_lower_bound(1, 2), Error);
}

TEST_CASE("component bounds check") {
  {
    const auto verdicts = component_bounds_check(12, 12, 0, 12, 12, 1, false);
    REQUIRE(verdicts.size() == 2);
    CHECK(verdicts[0].id == "EQ4");
    CHECK(verdicts[0].status == Status::holds);
    CHECK(verdicts[0].slack == 0);
    CHECK(verdicts[1].id == "EQ5");
    CHECK(verdicts[1].status == Status::holds);
    CHECK(verdicts[1].slack == 0);
  }
  {
    const auto verdicts = component_bounds_check(5, 0, 5, 1, 6, 2, false);
    CHECK(verdicts[0].slack == 0);  // 6 >= 5 + 1
    CHECK(verdicts[1].slack == 2);  // 6 >= 5 - 1
  }
  {
    const auto verdicts = component_bounds_check(7, 7, 0, 1, 2, 2, true);
    REQUIRE(verdicts.size() == 4);
    CHECK(verdicts[2].id == "REM7K");
    CHECK(verdicts[2].status == Status::violated);  // 7 > 3(h-1)D = 3
    CHECK(verdicts[2].slack == -4);
  }
  {
    // stable bounds not emitted for h = 1
    const auto verdicts = component_bounds_check(3, 3, 0, 3, 3, 1, true);
    CHECK(verdicts.size() == 2);
  }
}

TEST_CASE("betti resolution") {
  CHECK(betti_resolution(12, 0, -8) == std::pair<std::int64_t, std::int64_t>{1, 9});
  CHECK(betti_resolution(4, 0, 0) == std::pair<std::int64_t, std::int64_t>{1, 1});
  CHECK_THROWS_AS((void)betti_resolution(12, 0, -7), Error);   // parity
  CHECK_THROWS_AS((void)betti_resolution(12, 0, -12), Error);  // negative b2+
}

TEST_CASE("canonical square") {
  CHECK(canonical_square(12, 0, 9) == 0);
  CHECK(canonical_square(4, 4, 1) == 32);
  CHECK(canonical_square(0, 2, 1) == 0);
}

TEST_CASE("canonical square identity with the signature") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t chi = testing::pick(rng, -20, 60);
    const std::int64_t b1 = testing::pick(rng, 0, 10);
    const std::int64_t b2 = chi - 2 + 2 * b1;
    if (b2 < 0) {
      continue;
    }
    const std::int64_t sigma = testing::pick(rng, -b2, b2);
    if ((b2 + sigma) % 2 != 0) {
      continue;
    }
    const auto [plus, minus] = betti_resolution(chi, b1, sigma);
    CHECK(plus + minus == b2);
    CHECK(plus - minus == sigma);
    CHECK(canonical_square(chi, b1, minus) == 2 * chi + 3 * sigma);
  }
}

TEST_CASE("canonical square upper bound") {
  // exact b1 = 0 for the elliptic pencil: 5*12 - 6 + 0 - 6*(1+0)
  CHECK(canonical_square_upper_bound(elliptic_12()) == 48);

  // pencil with unknown b1 uses the structural bound 2h - 1
  FibrationDescription fd;
  fd.fiber_genus = 2;
  fd.base_genus = 0;
  for (int i = 0; i < 20; ++i) {
    FiberConfiguration cfg;
    cfg.pieces.push_back({1, 2});
    Curve c;
    c.end_a = 0;
    c.end_b = 0;
    cfg.curves.push_back(c);  // no homology class: b1 stays an interval
    fd.fibers.push_back(cfg);
  }
  fd = validate_fibration(std::move(fd));
  const Counts counts = total_counts(fd);
  CHECK(counts.n == 20);
  CHECK(euler_characteristic(0, 2, counts.k) == 16);
  CHECK(canonical_square_upper_bound(fd) == 5 * 16 - 6 + 6 * 3 - 6);  // 86

  CHECK_THROWS_AS((void)canonical_square_upper_bound(trivial_bundle(1, 1)), Error);
}

TEST_CASE("b1 state") {
  const B1State exact = b1_state(elliptic_12());
  CHECK(exact.exact);
  CHECK(exact.value == 0);

  FibrationDescription no_data;
  no_data.fiber_genus = 2;
  no_data.base_genus = 1;
  const B1State interval = b1_state(no_data);
  CHECK_FALSE(interval.exact);
  CHECK(interval.lower == 2);
  CHECK(interval.upper == 6);
  CHECK(interval.upper_value() == 6);

  // pencil with a nonseparating cycle and no class data: [0, 2h-1]
  FibrationDescription pencil;
  pencil.fiber_genus = 2;
  pencil.base_genus = 0;
  FiberConfiguration cfg;
  cfg.pieces.push_back({1, 2});
  Curve c;
  c.end_a = 0;
  c.end_b = 0;
  cfg.curves.push_back(c);
  pencil.fibers.push_back(cfg);
  pencil = validate_fibration(std::move(pencil));
  const B1State ps = b1_state(pencil);
  CHECK_FALSE(ps.exact);
  CHECK(ps.lower == 0);
  CHECK(ps.upper == 3);

  // all-separating pencil: [0, 2h]
  FibrationDescription sep;
  sep.fiber_genus = 2;
  sep.base_genus = 0;
  sep.fibers.push_back(parallel_twist_fiber(TwistCurveKind::sep(1, 1), 1, 2));
  sep.fibers[0].curves[0].homology_class.reset();
  sep = validate_fibration(std::move(sep));
  CHECK(b1_state(sep).upper == 4);
}

TEST_CASE("report fields are consistent on random descriptions") {
  Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    testing::DescriptionOptions opt;
    const FibrationDescription fd = testing::random_description(rng, opt);
    const InvariantReport rep = compute_invariants(fd);
    CHECK(rep.counts.k == rep.counts.n + rep.counts.s);
    CHECK(rep.counts.k >= rep.counts.D);
    CHECK(rep.counts.N >= rep.counts.D);
    CHECK(rep.chi ==
          4 * (rep.base_genus - 1) * (rep.fiber_genus - 1) + rep.counts.k);
    CHECK(rep.all_semistable);
    // per-fiber Euler identity
    for (const FiberConfiguration& fiber : fd.fibers) {
      const std::int64_t m = static_cast<std::int64_t>(fiber.curves.size());
      CHECK(fiber_euler_characteristic(fiber, fd.fiber_genus) == (2 - 2 * fd.fiber_genus) + m);
    }
    // chained bound: b2- lower >= 1 + s via N >= s + D
    CHECK(rep.b2_minus_lower >= 1 + rep.counts.s);
    // structural interval always brackets an exact value
    if (rep.b1.exact) {
      if (fd.base_genus >= 1) {
        CHECK(rep.b1.value >= 2 * fd.base_genus);
        CHECK(rep.b1.value <= 2 * fd.base_genus + 2 * fd.fiber_genus);
      } else {
        CHECK(rep.b1.value <= 2 * fd.fiber_genus);
      }
    }
  }
}

TEST_CASE("validation rejects inconsistent global data") {
  // conflicting flags
  FibrationDescription fd = elliptic_12();
  fd.asserts_not_rational_or_ruled = true;
  fd.ruled_params = RuledParams{0, 8};
  CHECK_THROWS_AS((void)validate_fibration(std::move(fd)), Error);

  // wrong handle-matrix count
  FibrationDescription bundle;
  bundle.fiber_genus = 1;
  bundle.base_genus = 1;
  bundle.handle_matrices = std::vector<IntMatrix>{IntMatrix::identity(2)};
  CHECK_THROWS_AS((void)validate_fibration(std::move(bundle)), Error);

  // non-symplectic handle matrix
  FibrationDescription bad;
  bad.fiber_genus = 1;
  bad.base_genus = 1;
  IntMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 1) = 2;
  bad.handle_matrices = std::vector<IntMatrix>{m, IntMatrix::identity(2)};
  CHECK_THROWS_AS((void)validate_fibration(std::move(bad)), Error);

  // signature of the wrong parity against an exact b1
  FibrationDescription parity = elliptic_12();
  parity.signature = -7;
  CHECK_THROWS_AS((void)validate_fibration(std::move(parity)), Error);
}

TEST_CASE("report of the elliptic pencil") {
  const InvariantReport rep = compute_invariants(elliptic_12());
  CHECK(rep.chi == 12);
  REQUIRE(rep.b1.exact);
  CHECK(rep.b1.value == 0);
  REQUIRE(rep.b2_plus.has_value());
  CHECK(*rep.b2_plus == 1);
  CHECK(*rep.b2_minus == 9);
  REQUIRE(rep.k_squared.has_value());
  CHECK(*rep.k_squared == 0);
  CHECK(rep.k_squared_upper == 48);
  CHECK(rep.monodromy == ShadowVerdict::identity);
  CHECK(rep.torsion.empty());
  CHECK(rep.all_semistable);
  CHECK_FALSE(rep.all_stable);
  CHECK(rep.b2_minus_lower == 1);
}
