#include "lefcert/surface_config.hpp"

#include "lefcert/errors.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace lefcert {

namespace {

// Union-find over piece indices.
struct DisjointSet {
  std::vector<std::size_t> parent;

  explicit DisjointSet(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Connectivity of the incidence multigraph with one edge optionally removed.
bool connected_without(const FiberConfiguration& cfg, std::size_t skip_curve) {
  if (cfg.pieces.empty()) {
    return false;
  }
  DisjointSet ds(cfg.pieces.size());
  for (std::size_t i = 0; i < cfg.curves.size(); ++i) {
    if (i == skip_curve) {
      continue;
    }
    ds.unite(cfg.curves[i].end_a, cfg.curves[i].end_b);
  }
  const std::size_t root = ds.find(0);
  for (std::size_t p = 1; p < cfg.pieces.size(); ++p) {
    if (ds.find(p) != root) {
      return false;
    }
  }
  return true;
}

constexpr std::size_t kNoSkip = static_cast<std::size_t>(-1);

}  // namespace

FiberConfiguration validate_fiber_configuration(FiberConfiguration cfg, std::int64_t h) {
  if (h < 1) {
    throw Error(Err::ParameterOutOfRange, "fiber genus must be >= 1, got " + std::to_string(h));
  }
  if (cfg.curves.empty()) {
    throw Error(Err::EmptyCurveSet, "a singular fiber needs at least one vanishing cycle");
  }
  for (std::size_t p = 0; p < cfg.pieces.size(); ++p) {
    const Piece& piece = cfg.pieces[p];
    if (piece.genus < 0) {
      throw Error(Err::ParameterOutOfRange, "piece " + std::to_string(p) + " has negative genus");
    }
    if (piece.boundary_count < 1) {
      throw Error(Err::BoundaryMismatch,
                  "piece " + std::to_string(p) + " has no boundary circle");
    }
  }
  for (std::size_t c = 0; c < cfg.curves.size(); ++c) {
    if (cfg.curves[c].end_a >= cfg.pieces.size() || cfg.curves[c].end_b >= cfg.pieces.size()) {
      throw Error(Err::IndexOutOfRange, "curve " + std::to_string(c) + " references a missing piece");
    }
  }

  // Every curve contributes two boundary circles.
  std::int64_t boundary_sum = 0;
  for (const Piece& piece : cfg.pieces) {
    boundary_sum += piece.boundary_count;
  }
  const std::int64_t m = static_cast<std::int64_t>(cfg.curves.size());
  if (boundary_sum != 2 * m) {
    throw Error(Err::BoundaryMismatch, "total boundary count " + std::to_string(boundary_sum) +
                                           " != 2 * " + std::to_string(m) + " curves");
  }

  // Cutting circles preserves the Euler characteristic of the genus-h fiber.
  std::int64_t chi_cut = 0;
  for (const Piece& piece : cfg.pieces) {
    chi_cut += 2 - 2 * piece.genus - piece.boundary_count;
  }
  if (chi_cut != 2 - 2 * h) {
    throw Error(Err::EulerMismatch, "cut pieces have chi " + std::to_string(chi_cut) +
                                        ", expected " + std::to_string(2 - 2 * h));
  }

  if (!connected_without(cfg, kNoSkip)) {
    throw Error(Err::Disconnected, "singular fibers are connected");
  }

  for (std::size_t c = 0; c < cfg.curves.size(); ++c) {
    Curve& curve = cfg.curves[c];
    curve.separating = is_separating_curve(cfg, c);
    if (!curve.homology_class) {
      continue;
    }
    const IntVec& cls = *curve.homology_class;
    if (cls.size() != static_cast<std::size_t>(2 * h)) {
      throw Error(Err::DimensionMismatch, "curve " + std::to_string(c) + " homology class has " +
                                              std::to_string(cls.size()) + " entries, expected " +
                                              std::to_string(2 * h));
    }
    const bool zero = is_zero_vector(cls);
    if (curve.separating && !zero) {
      throw Error(Err::HomologyInconsistent,
                  "curve " + std::to_string(c) + " is separating but has a nonzero class");
    }
    if (!curve.separating && zero) {
      throw Error(Err::HomologyInconsistent,
                  "curve " + std::to_string(c) + " is nonseparating but has a zero class");
    }
    if (!zero && !is_primitive_vector(cls)) {
      throw Error(Err::NonPrimitiveCurveClass,
                  "curve " + std::to_string(c) + " class is not primitive");
    }
  }
  return cfg;
}

bool is_separating_curve(const FiberConfiguration& cfg, std::size_t curve_index) {
  if (curve_index >= cfg.curves.size()) {
    throw Error(Err::IndexOutOfRange, "curve index " + std::to_string(curve_index));
  }
  const Curve& curve = cfg.curves[curve_index];
  if (curve.end_a == curve.end_b) {
    return false;  // a self-loop never disconnects
  }
  return !connected_without(cfg, curve_index);
}

std::size_t fiber_component_count(const FiberConfiguration& cfg) { return cfg.pieces.size(); }

bool check_semistable(const FiberConfiguration& cfg) {
  for (const Piece& piece : cfg.pieces) {
    if (piece.genus == 0 && piece.boundary_count < 2) {
      return false;
    }
  }
  return true;
}

bool check_stable(const FiberConfiguration& cfg) {
  for (const Piece& piece : cfg.pieces) {
    if (piece.genus == 0 && piece.boundary_count < 3) {
      return false;
    }
  }
  return true;
}

std::int64_t fiber_euler_characteristic(const FiberConfiguration& cfg, std::int64_t h) {
  (void)h;  // fixed by the validated configuration; kept for the identity chi = (2-2h) + m
  std::int64_t chi = 0;
  for (const Piece& piece : cfg.pieces) {
    chi += 2 - 2 * piece.genus;
  }
  return chi - static_cast<std::int64_t>(cfg.curves.size());
}

}  // namespace lefcert
