#include "lefcert/fibration.hpp"

#include "lefcert/errors.hpp"
#include "lefcert/homology.hpp"
#include "lefcert/invariants.hpp"

#include <string>

namespace lefcert {

bool has_full_cycle_homology(const FibrationDescription& fd) {
  for (const FiberConfiguration& fiber : fd.fibers) {
    for (const Curve& curve : fiber.curves) {
      if (!curve.homology_class) {
        return false;
      }
    }
  }
  return true;
}

FibrationDescription validate_fibration(FibrationDescription fd) {
  if (fd.fiber_genus < 1) {
    throw Error(Err::ParameterOutOfRange,
                "fiber genus must be >= 1, got " + std::to_string(fd.fiber_genus));
  }
  if (fd.base_genus < 0) {
    throw Error(Err::ParameterOutOfRange,
                "base genus must be >= 0, got " + std::to_string(fd.base_genus));
  }

  for (std::size_t f = 0; f < fd.fibers.size(); ++f) {
    try {
      fd.fibers[f] = validate_fiber_configuration(std::move(fd.fibers[f]), fd.fiber_genus);
    } catch (const Error& e) {
      throw Error(e.code(), "fiber " + std::to_string(f) + ": " + e.message());
    }
  }

  if (fd.handle_matrices) {
    const auto& handles = *fd.handle_matrices;
    if (handles.size() != static_cast<std::size_t>(2 * fd.base_genus)) {
      throw Error(Err::DimensionMismatch,
                  "expected " + std::to_string(2 * fd.base_genus) + " handle matrices, got " +
                      std::to_string(handles.size()));
    }
    for (std::size_t i = 0; i < handles.size(); ++i) {
      if (!is_symplectic_matrix(handles[i], fd.fiber_genus)) {
        throw Error(Err::MatrixNotSymplectic, "handle matrix " + std::to_string(i));
      }
    }
  }

  if (fd.ruled_params) {
    if (fd.asserts_not_rational_or_ruled) {
      throw Error(Err::FlagConflict,
                  "ruled_params and asserts_not_rational_or_ruled are mutually exclusive");
    }
    if (fd.ruled_params->a < 0 || fd.ruled_params->b < 0) {
      throw Error(Err::ParameterOutOfRange, "ruled_params must be nonnegative");
    }
  }

  if (fd.signature) {
    const bool b1_exact =
        has_full_cycle_homology(fd) && (fd.base_genus == 0 || fd.handle_matrices.has_value());
    if (b1_exact) {
      const std::int64_t b1 = first_homology(fd).b1;
      std::int64_t k = 0;
      for (const FiberConfiguration& fiber : fd.fibers) {
        k += static_cast<std::int64_t>(fiber.curves.size());
      }
      const std::int64_t chi = euler_characteristic(fd.base_genus, fd.fiber_genus, k);
      const std::int64_t b2 = chi - 2 + 2 * b1;
      if ((b2 + *fd.signature) % 2 != 0) {
        throw Error(Err::ParityMismatch, "signature " + std::to_string(*fd.signature) +
                                             " has wrong parity for b2 = " + std::to_string(b2));
      }
      if (b2 + *fd.signature < 0 || b2 - *fd.signature < 0) {
        throw Error(Err::NegativeBetti, "signature " + std::to_string(*fd.signature) +
                                            " exceeds b2 = " + std::to_string(b2));
      }
    }
  }
  return fd;
}

}  // namespace lefcert
