#pragma once

#include "lefcert/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lefcert {

// A singular fiber is recorded as the generic genus-h fiber cut open along
// its disjoint vanishing cycles: pieces are the cut-open irreducible
// components, curves are the cut circles, each contributing one boundary
// circle to the piece on either side (both to the same piece for a curve
// that does not locally disconnect).

struct Piece {
  std::int64_t genus = 0;
  std::int64_t boundary_count = 0;  // nodes on this component
};

struct Curve {
  std::size_t end_a = 0;  // piece index
  std::size_t end_b = 0;  // piece index; equal to end_a for a self-loop
  std::optional<IntVec> homology_class;  // length 2h when present
  bool separating = false;               // derived during validation
};

struct FiberConfiguration {
  std::vector<Piece> pieces;
  std::vector<Curve> curves;
};

/// Checks all structural invariants against fiber genus h and returns the
/// configuration with per-curve separating flags filled in.
///
/// Rejects with: EulerMismatch, BoundaryMismatch, Disconnected,
/// EmptyCurveSet, HomologyInconsistent, NonPrimitiveCurveClass,
/// DimensionMismatch, IndexOutOfRange.
FiberConfiguration validate_fiber_configuration(FiberConfiguration cfg, std::int64_t h);

/// True iff deleting the curve's edge disconnects the piece/curve incidence
/// multigraph. A self-loop is never separating.
bool is_separating_curve(const FiberConfiguration& cfg, std::size_t curve_index);

/// Number of irreducible components of the nodal fiber.
std::size_t fiber_component_count(const FiberConfiguration& cfg);

/// Every genus-0 piece carries at least two nodes.
bool check_semistable(const FiberConfiguration& cfg);

/// Every genus-0 piece carries at least three nodes.
bool check_stable(const FiberConfiguration& cfg);

/// Euler characteristic of the nodal fiber, computed from the pieces; equals
/// (2 - 2h) + m for a valid configuration with m curves.
std::int64_t fiber_euler_characteristic(const FiberConfiguration& cfg, std::int64_t h);

}  // namespace lefcert
