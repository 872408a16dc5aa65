#include "lefcert/constructions.hpp"

#include "lefcert/certifier.hpp"
#include "lefcert/errors.hpp"

#include <string>
#include <utility>

namespace lefcert {

namespace {

IntVec basis_vector(std::int64_t h, std::size_t index) {
  IntVec v(static_cast<std::size_t>(2 * h), 0);
  v[index] = 1;
  return v;
}

}  // namespace

FiberConfiguration parallel_twist_fiber(const TwistCurveKind& kind, std::int64_t k,
                                        std::int64_t h) {
  if (k < 1) {
    throw Error(Err::ParameterOutOfRange, "need k >= 1 parallel copies");
  }
  if (h < 1) {
    throw Error(Err::ParameterOutOfRange, "need fiber genus >= 1");
  }
  FiberConfiguration cfg;
  if (!kind.separating) {
    // One genus h-1 piece plus k-1 annuli in a cycle of k curves.
    cfg.pieces.push_back({h - 1, 2});
    for (std::int64_t i = 1; i < k; ++i) {
      cfg.pieces.push_back({0, 2});
    }
    const std::size_t count = static_cast<std::size_t>(k);
    for (std::size_t i = 0; i < count; ++i) {
      Curve c;
      c.end_a = i;
      c.end_b = (i + 1) % count;
      c.homology_class = basis_vector(h, 0);  // all copies parallel to a1
      cfg.curves.push_back(std::move(c));
    }
  } else {
    if (kind.g1 < 1 || kind.g2 < 1 || kind.g1 + kind.g2 != h) {
      throw Error(Err::InvalidPartition, "separating kind needs g1, g2 >= 1 with g1 + g2 = h");
    }
    // End pieces of genus g1 and g2 with k-1 annuli in a chain of k curves.
    cfg.pieces.push_back({kind.g1, 1});
    for (std::int64_t i = 1; i < k; ++i) {
      cfg.pieces.push_back({0, 2});
    }
    cfg.pieces.push_back({kind.g2, 1});
    for (std::int64_t i = 0; i < k; ++i) {
      Curve c;
      c.end_a = static_cast<std::size_t>(i);
      c.end_b = static_cast<std::size_t>(i + 1);
      c.homology_class = IntVec(static_cast<std::size_t>(2 * h), 0);
      cfg.curves.push_back(std::move(c));
    }
  }
  return validate_fiber_configuration(std::move(cfg), h);
}

FibrationDescription fiber_sum_trivial_bundle(FibrationDescription fd,
                                              std::int64_t extra_base_genus) {
  if (extra_base_genus < 1) {
    throw Error(Err::ParameterOutOfRange, "fiber sum must add at least one handle pair");
  }
  const std::size_t dim = static_cast<std::size_t>(2 * fd.fiber_genus);
  const bool had_handles = fd.base_genus == 0 || fd.handle_matrices.has_value();
  fd.base_genus += extra_base_genus;
  if (had_handles) {
    if (!fd.handle_matrices) {
      fd.handle_matrices.emplace();
    }
    for (std::int64_t i = 0; i < 2 * extra_base_genus; ++i) {
      fd.handle_matrices->push_back(IntMatrix::identity(dim));
    }
  }
  fd.signature.reset();  // not determined by the summands' data alone
  return fd;
}

FibrationDescription pullback_cover(const FibrationDescription& fd, std::int64_t d) {
  if (d < 1) {
    throw Error(Err::ParameterOutOfRange, "cover degree must be >= 1");
  }
  if (d == 1) {
    return fd;
  }
  if (fd.base_genus == 0) {
    throw Error(Err::BaseSphereNoCover, "the 2-sphere has no unbranched covers of degree > 1");
  }
  FibrationDescription out;
  out.fiber_genus = fd.fiber_genus;
  out.base_genus = d * (fd.base_genus - 1) + 1;
  out.fibers.reserve(fd.fibers.size() * static_cast<std::size_t>(d));
  for (std::int64_t copy = 0; copy < d; ++copy) {
    for (const FiberConfiguration& fiber : fd.fibers) {
      out.fibers.push_back(fiber);
    }
  }
  // Induced handle shadows depend on a choice of covering presentation;
  // they are dropped rather than guessed, and the signature with them.
  out.asserts_not_rational_or_ruled = fd.asserts_not_rational_or_ruled;
  out.ruled_params = fd.ruled_params;
  return out;
}

FibrationDescription twist_power_description(const TwistCurveKind& kind, std::int64_t k,
                                             std::int64_t h) {
  FibrationDescription fd;
  fd.fiber_genus = h;
  fd.base_genus = minimal_commutator_genus(h, k);  // smallest genus not excluded
  fd.fibers.push_back(parallel_twist_fiber(kind, k, h));
  return validate_fibration(std::move(fd));
}

FibrationDescription trivial_bundle(std::int64_t g, std::int64_t h) {
  if (g < 0 || h < 1) {
    throw Error(Err::ParameterOutOfRange, "trivial bundle needs g >= 0, h >= 1");
  }
  FibrationDescription fd;
  fd.fiber_genus = h;
  fd.base_genus = g;
  fd.handle_matrices.emplace(2 * static_cast<std::size_t>(g),
                             IntMatrix::identity(static_cast<std::size_t>(2 * h)));
  return validate_fibration(std::move(fd));
}

FibrationDescription elliptic_12() {
  FibrationDescription fd;
  fd.fiber_genus = 1;
  fd.base_genus = 0;
  for (int i = 0; i < 12; ++i) {
    FiberConfiguration cfg;
    cfg.pieces.push_back({0, 2});
    Curve c;
    c.end_a = 0;
    c.end_b = 0;
    c.homology_class = basis_vector(1, i % 2 == 0 ? 0 : 1);  // word (a,b) x 6
    cfg.curves.push_back(std::move(c));
    fd.fibers.push_back(std::move(cfg));
  }
  fd.signature = -8;
  return validate_fibration(std::move(fd));
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> list;
    list.push_back({"ELLIPTIC_12",
                    "genus-1 pencil with 12 nodal fibers, cycle word (a,b) x 6, signature -8",
                    elliptic_12(),
                    "rational elliptic surface; recovers the classical critical-point bound with "
                    "slack 54"});
    list.push_back({"TRIVIAL_BUNDLE_2_1", "trivial genus-1 bundle over a genus-2 surface",
                    trivial_bundle(2, 1), "product bundle, b1 = 6"});
    list.push_back({"TRIVIAL_BUNDLE_1_2", "trivial genus-2 bundle over the torus",
                    trivial_bundle(1, 2), "product bundle, b1 = 6"});
    list.push_back({"TWIST_POWER_H2_NONSEP_30",
                    "30th power of a nonseparating twist on a genus-2 fiber, closed up over a "
                    "genus-2 base",
                    twist_power_description(TwistCurveKind::nonsep(), 30, 2),
                    "base genus equals the commutator-length bound with zero margin"});
    list.push_back({"TWIST_POWER_H2_SEP_5",
                    "5th power of the (1,1)-separating twist on a genus-2 fiber, closed up over "
                    "a genus-2 base",
                    twist_power_description(TwistCurveKind::sep(1, 1), 5, 2),
                    "separating twist power; all five cycles count into s"});
    list.push_back({"TWIST_POWER_H3_NONSEP_12",
                    "12th power of a nonseparating twist on a genus-3 fiber, closed up over a "
                    "genus-2 base",
                    twist_power_description(TwistCurveKind::nonsep(), 12, 3),
                    "higher-genus twist power"});
    return list;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const CatalogEntry& entry : catalog()) {
    if (entry.name == name) {
      return entry;
    }
  }
  throw Error(Err::ParameterOutOfRange, "no catalog entry named '" + name + "'");
}

}  // namespace lefcert
