#pragma once

#include "lefcert/int_matrix.hpp"
#include "lefcert/surface_config.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lefcert {

/// X is asserted to be the blowup in b points of a 2-sphere bundle over a
/// surface of genus a.
struct RuledParams {
  std::int64_t a = 0;
  std::int64_t b = 0;

  bool operator==(const RuledParams&) const = default;
};

/// Global combinatorial description of a Lefschetz fibration: fiber genus h,
/// base genus g, one FiberConfiguration per singular fiber. The global
/// vanishing-cycle order is fiber order, then curve order within each fiber.
struct FibrationDescription {
  std::int64_t fiber_genus = 1;  // h >= 1
  std::int64_t base_genus = 0;   // g >= 0; g = 0 is a pencil
  std::vector<FiberConfiguration> fibers;

  /// Homological shadows of the base handle monodromies, ordered
  /// A1,B1,...,Ag,Bg (2g matrices of size 2h x 2h). Unknown when absent.
  std::optional<std::vector<IntMatrix>> handle_matrices;

  std::optional<std::int64_t> signature;

  bool asserts_not_rational_or_ruled = false;
  std::optional<RuledParams> ruled_params;

  bool is_pencil() const { return base_genus == 0; }
};

/// Validates every fiber against h, the handle matrix block (count, shape,
/// symplecticity), flag exclusivity, and the signature parity constraint
/// when an exact first Betti number is derivable. Returns the description
/// with per-curve separating flags filled in.
FibrationDescription validate_fibration(FibrationDescription fd);

/// True iff every curve in every fiber carries a homology class.
bool has_full_cycle_homology(const FibrationDescription& fd);

}  // namespace lefcert
