#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefcert/certifier.hpp"
#include "lefcert/constructions.hpp"
#include "lefcert/errors.hpp"
#include "lefcert/invariants.hpp"

#include <algorithm>

using namespace lefcert;

TEST_CASE("parallel twist fibers, nonseparating kind") {
  // k = 3 on a genus-2 fiber: genus-1 piece plus two annuli in a cycle
  const FiberConfiguration cfg = parallel_twist_fiber(TwistCurveKind::nonsep(), 3, 2);
  REQUIRE(cfg.pieces.size() == 3);
  CHECK(cfg.pieces[0].genus == 1);
  CHECK(cfg.pieces[0].boundary_count == 2);
  CHECK(cfg.pieces[1].genus == 0);
  CHECK(cfg.pieces[2].boundary_count == 2);
  CHECK(fiber_component_count(cfg) == 3);  // N = k
  CHECK(check_semistable(cfg));
  CHECK_FALSE(check_stable(cfg));  // annuli have two nodes each
  for (const Curve& c : cfg.curves) {
    CHECK_FALSE(c.separating);
  }

  // k = 1, h = 1: the nodal-cubic shape
  const FiberConfiguration cubic = parallel_twist_fiber(TwistCurveKind::nonsep(), 1, 1);
  REQUIRE(cubic.pieces.size() == 1);
  CHECK(cubic.pieces[0].genus == 0);
  CHECK(cubic.pieces[0].boundary_count == 2);
  CHECK(check_semistable(cubic));

  // k = 1, h >= 2 is stable
  CHECK(check_stable(parallel_twist_fiber(TwistCurveKind::nonsep(), 1, 2)));
}

TEST_CASE("parallel twist fibers, separating kind") {
  const FiberConfiguration cfg = parallel_twist_fiber(TwistCurveKind::sep(1, 1), 2, 2);
  REQUIRE(cfg.pieces.size() == 3);  // N = k + 1
  CHECK(cfg.pieces[0].genus == 1);
  CHECK(cfg.pieces[0].boundary_count == 1);
  CHECK(cfg.pieces[1].genus == 0);
  CHECK(cfg.pieces[1].boundary_count == 2);
  CHECK(cfg.pieces[2].genus == 1);
  for (const Curve& c : cfg.curves) {
    CHECK(c.separating);
  }
  CHECK(fiber_euler_characteristic(cfg, 2) == 0);

  CHECK_THROWS_AS((void)parallel_twist_fiber(TwistCurveKind::sep(0, 2), 1, 2), Error);
  CHECK_THROWS_AS((void)parallel_twist_fiber(TwistCurveKind::sep(1, 1), 1, 3), Error);
  CHECK_THROWS_AS((void)parallel_twist_fiber(TwistCurveKind::nonsep(), 0, 2), Error);
}

TEST_CASE("every parallel twist fiber validates and is semistable") {
  for (std::int64_t h = 1; h <= 5; ++h) {
    for (std::int64_t k = 1; k <= 6; ++k) {
      const FiberConfiguration cfg = parallel_twist_fiber(TwistCurveKind::nonsep(), k, h);
      CHECK(check_semistable(cfg));
      CHECK(fiber_component_count(cfg) == static_cast<std::size_t>(k));
      CHECK(check_stable(cfg) == (k == 1 && h >= 2));
      for (std::int64_t g1 = 1; g1 < h; ++g1) {
        const FiberConfiguration sep =
            parallel_twist_fiber(TwistCurveKind::sep(g1, h - g1), k, h);
        CHECK(check_semistable(sep));
        CHECK(fiber_component_count(sep) == static_cast<std::size_t>(k + 1));
        CHECK(check_stable(sep) == (k == 1));
      }
    }
  }
}

TEST_CASE("fiber sum with a trivial bundle") {
  const FibrationDescription base = elliptic_12();
  const FibrationDescription summed = fiber_sum_trivial_bundle(base, 1);
  CHECK(summed.base_genus == 1);
  CHECK_FALSE(summed.signature.has_value());
  REQUIRE(summed.handle_matrices.has_value());
  REQUIRE(summed.handle_matrices->size() == 2);
  CHECK((*summed.handle_matrices)[0] == IntMatrix::identity(2));

  // counts unchanged, chi recomputed at the new base genus
  const Counts before = total_counts(base);
  const Counts after = total_counts(summed);
  CHECK(before == after);
  CHECK(euler_characteristic(summed.base_genus, summed.fiber_genus, after.k) == 12);

  CHECK_THROWS_AS((void)fiber_sum_trivial_bundle(base, 0), Error);

  // twist-power pencil summed up to base genus 2 passes the g >= 1 battery
  FibrationDescription pencil;
  pencil.fiber_genus = 2;
  pencil.base_genus = 0;
  pencil.fibers.push_back(parallel_twist_fiber(TwistCurveKind::sep(1, 1), 5, 2));
  pencil = validate_fibration(std::move(pencil));
  const CertificateReport at_g2 = certify(fiber_sum_trivial_bundle(pencil, 2));
  CHECK(at_g2.overall == Overall::realizable_consistent);
  for (const InequalityVerdict& v : at_g2.verdicts) {
    if (v.id == "EQ9") {
      CHECK(v.slack == 25);  // s = 5 against 6(3h-1)(g-1) + 5n = 30
    }
  }
  // at base genus 1 the battery refutes it: five parallel separating twists
  // cannot be one commutator
  CHECK(certify(fiber_sum_trivial_bundle(pencil, 1)).overall == Overall::refuted);
}

TEST_CASE("pullback covers") {
  FibrationDescription fd;
  fd.fiber_genus = 2;
  fd.base_genus = 2;
  for (int i = 0; i < 4; ++i) {
    fd.fibers.push_back(parallel_twist_fiber(
        i % 2 == 0 ? TwistCurveKind::nonsep() : TwistCurveKind::sep(1, 1), i % 3 + 1, 2));
  }
  fd = validate_fibration(std::move(fd));
  const Counts counts = total_counts(fd);
  const std::int64_t chi = euler_characteristic(fd.base_genus, fd.fiber_genus, counts.k);

  for (std::int64_t d = 1; d <= 5; ++d) {
    const FibrationDescription cover = pullback_cover(fd, d);
    CHECK(cover.base_genus == d * (fd.base_genus - 1) + 1);
    const Counts scaled = total_counts(cover);
    CHECK(scaled.k == d * counts.k);
    CHECK(scaled.D == d * counts.D);
    CHECK(scaled.N == d * counts.N);
    CHECK(scaled.s == d * counts.s);
    CHECK(euler_characteristic(cover.base_genus, cover.fiber_genus, scaled.k) == d * chi);
    for (const FiberConfiguration& fiber : cover.fibers) {
      CHECK(check_semistable(fiber));
    }
  }

  CHECK(pullback_cover(elliptic_12(), 1).fibers.size() == 12);  // identity
  CHECK_THROWS_AS((void)pullback_cover(elliptic_12(), 2), Error);

  // handle shadows are dropped for d > 1
  const FibrationDescription bundle_cover = pullback_cover(trivial_bundle(2, 1), 3);
  CHECK_FALSE(bundle_cover.handle_matrices.has_value());
  CHECK(bundle_cover.base_genus == 4);
}

TEST_CASE("twist-power description stores the commutator-length bound") {
  const FibrationDescription fd = twist_power_description(TwistCurveKind::nonsep(), 30, 2);
  CHECK(fd.base_genus == 2);  // 1 + 30/30
  CHECK(fd.fibers.size() == 1);
  CHECK(total_counts(fd).k == 30);
  CHECK(twist_power_description(TwistCurveKind::nonsep(), 31, 2).base_genus == 3);
}

TEST_CASE("catalog entries") {
  const auto& entries = catalog();
  REQUIRE(entries.size() >= 3);
  CHECK(catalog_entry("ELLIPTIC_12").fd.fiber_genus == 1);
  CHECK(catalog_entry("TRIVIAL_BUNDLE_2_1").fd.base_genus == 2);
  CHECK_THROWS_AS((void)catalog_entry("NO_SUCH_ENTRY"), Error);

  for (const CatalogEntry& entry : entries) {
    // validation is idempotent on catalog data
    FibrationDescription copy = entry.fd;
    CHECK_NOTHROW((void)validate_fibration(std::move(copy)));
    for (const FiberConfiguration& fiber : entry.fd.fibers) {
      CHECK(check_semistable(fiber));
    }
    CHECK(certify(entry.fd).overall == Overall::realizable_consistent);
  }

  // pinned values for the elliptic entry
  const FibrationDescription& e1 = catalog_entry("ELLIPTIC_12").fd;
  CHECK(monodromy_shadow_check(e1) == ShadowVerdict::identity);
  CHECK(first_homology(e1).b1 == 0);
  const InvariantReport rep = compute_invariants(e1);
  CHECK(rep.b2_plus == 1);
  CHECK(rep.b2_minus == 9);
  CHECK(rep.k_squared == 0);

  CHECK(first_homology(catalog_entry("TRIVIAL_BUNDLE_2_1").fd).b1 == 6);
}

TEST_CASE("fiber sum only changes the base genus in the counts") {
  for (const CatalogEntry& entry : catalog()) {
    const FibrationDescription summed = fiber_sum_trivial_bundle(entry.fd, 2);
    CHECK(summed.base_genus == entry.fd.base_genus + 2);
    CHECK(summed.fiber_genus == entry.fd.fiber_genus);
    CHECK(total_counts(summed) == total_counts(entry.fd));
    CHECK(summed.fibers.size() == entry.fd.fibers.size());
  }
}
