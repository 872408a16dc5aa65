#pragma once

#include "lefcert/fibration.hpp"
#include "lefcert/surface_config.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lefcert {

/// Which isotopy class of simple closed curve a twist power is taken about:
/// nonseparating, or the separating curve splitting the fiber into genus g1
/// and genus g2 halves (g1 + g2 = h, both >= 1).
struct TwistCurveKind {
  bool separating = false;
  std::int64_t g1 = 0;
  std::int64_t g2 = 0;

  static TwistCurveKind nonsep() { return {}; }
  static TwistCurveKind sep(std::int64_t g1, std::int64_t g2) { return {true, g1, g2}; }
};

/// The singular fiber of the degree-k base change of a one-node fibration:
/// k parallel copies of the same vanishing cycle in one fiber.
/// Nonseparating: a genus h-1 piece and k-1 annuli in a cycle (k pieces).
/// Separating: genus g1 and g2 end pieces with k-1 annuli in a chain
/// (k+1 pieces). Curves carry homology classes (a1 resp. zero).
FiberConfiguration parallel_twist_fiber(const TwistCurveKind& kind, std::int64_t k,
                                        std::int64_t h);

/// Fiber sum with a trivial genus-h bundle over a surface of the given
/// genus: base genus increases, identity handle shadows are appended, the
/// signature is no longer known. extra_base_genus must be >= 1.
FibrationDescription fiber_sum_trivial_bundle(FibrationDescription fd,
                                              std::int64_t extra_base_genus);

/// Pullback to an unbranched degree-d cover of the base: g' = d(g-1) + 1,
/// fibers replicated d times. Handle shadows and signature are dropped for
/// d > 1. Throws BaseSphereNoCover for g = 0, d > 1.
FibrationDescription pullback_cover(const FibrationDescription& fd, std::int64_t d);

/// Twist-power fibration over the disk closed up by a commutator word: one
/// parallel_twist_fiber over a base of the smallest genus not excluded by
/// the commutator-length bound. The base genus is an annotation of that
/// bound, not an assertion of realizability at that genus. h >= 2.
FibrationDescription twist_power_description(const TwistCurveKind& kind, std::int64_t k,
                                             std::int64_t h);

/// D = 0 product bundle with identity handle shadows.
FibrationDescription trivial_bundle(std::int64_t g, std::int64_t h);

/// Genus-1 pencil with 12 single-node fibers and homology word (a,b) x 6;
/// signature -8.
FibrationDescription elliptic_12();

struct CatalogEntry {
  std::string name;
  std::string description;
  FibrationDescription fd;
  std::string provenance;
};

/// Seed catalog; every entry validates, is semistable, and certifies as
/// realizable-consistent.
const std::vector<CatalogEntry>& catalog();

/// Entry lookup by name; throws ParameterOutOfRange when absent.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace lefcert
