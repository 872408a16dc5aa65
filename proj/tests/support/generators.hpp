#pragma once

// Random-instance generators for the property suites. Configurations are
// generated by actually cutting the genus-h fiber, so every output satisfies
// the structural identities by construction and validation must accept it.

#include "lefcert/fibration.hpp"
#include "lefcert/homology.hpp"
#include "lefcert/invariants.hpp"
#include "lefcert/surface_config.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace lefcert::testing {

using Rng = std::mt19937_64;

inline std::int64_t pick(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// One attempt: m cut operations on the genus-h fiber. A self-cut along a
// nonseparating curve on piece p turns (g, b) into (g-1, b+2) and adds a
// self-loop; a split divides p into two pieces joined by the new curve and
// distributes the existing boundary circles between them.
inline std::optional<FiberConfiguration> try_random_cut_configuration(Rng& rng, std::int64_t h,
                                                                      std::int64_t m,
                                                                      bool require_stable) {
  std::vector<std::int64_t> genus = {h};
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  for (std::int64_t step = 0; step < m; ++step) {
    const std::size_t p = static_cast<std::size_t>(pick(rng, 0, genus.size() - 1));
    const bool can_self_cut = genus[p] >= 1;
    if (can_self_cut && pick(rng, 0, 1) == 0) {
      genus[p] -= 1;
      edges.emplace_back(p, p);
      continue;
    }
    // Split p. Endpoint redistribution keeps the multigraph connected since
    // the new curve joins the halves.
    const std::int64_t g1 = pick(rng, 0, genus[p]);
    const std::int64_t g2 = genus[p] - g1;
    const std::size_t q = genus.size();
    genus[p] = g1;
    genus.push_back(g2);
    for (auto& [a, b] : edges) {
      if (a == p && pick(rng, 0, 1) == 0) {
        a = q;
      }
      if (b == p && pick(rng, 0, 1) == 0) {
        b = q;
      }
    }
    edges.emplace_back(p, q);
  }

  std::vector<std::int64_t> boundary(genus.size(), 0);
  for (const auto& [a, b] : edges) {
    boundary[a] += 1;
    boundary[b] += 1;
  }
  FiberConfiguration cfg;
  for (std::size_t i = 0; i < genus.size(); ++i) {
    cfg.pieces.push_back({genus[i], boundary[i]});
  }
  for (const auto& [a, b] : edges) {
    Curve c;
    c.end_a = a;
    c.end_b = b;
    cfg.curves.push_back(std::move(c));
  }
  if (!check_semistable(cfg) || (require_stable && !check_stable(cfg))) {
    return std::nullopt;
  }
  return cfg;
}

inline FiberConfiguration random_fiber_configuration(Rng& rng, std::int64_t h,
                                                     std::int64_t max_curves,
                                                     bool require_stable) {
  if (require_stable && h < 2) {
    throw std::logic_error("no stable singular fibers exist for h = 1");
  }
  const std::int64_t cap =
      require_stable ? std::min<std::int64_t>(max_curves, 3 * (h - 1)) : max_curves;
  for (int attempt = 0; attempt < 400; ++attempt) {
    const std::int64_t m = pick(rng, 1, std::max<std::int64_t>(1, cap));
    if (auto cfg = try_random_cut_configuration(rng, h, m, require_stable)) {
      return validate_fiber_configuration(std::move(*cfg), h);
    }
  }
  // Guaranteed fallback: a single self-cut, (h, 0) -> (h-1, 2).
  auto cfg = try_random_cut_configuration(rng, h, 1, false);
  while (!cfg || (require_stable && !check_stable(*cfg))) {
    cfg = try_random_cut_configuration(rng, h, 1, false);
  }
  return validate_fiber_configuration(std::move(*cfg), h);
}

struct DescriptionOptions {
  std::int64_t min_h = 1;
  std::int64_t max_h = 5;
  std::int64_t min_D = 1;
  std::int64_t max_D = 6;
  std::int64_t max_curves_per_fiber = 6;
  std::int64_t max_g = 2;
  bool require_stable = false;
};

inline FibrationDescription random_description(Rng& rng, const DescriptionOptions& opt) {
  FibrationDescription fd;
  fd.fiber_genus = pick(rng, opt.min_h, opt.max_h);
  fd.base_genus = pick(rng, 0, opt.max_g);
  const std::int64_t D = pick(rng, opt.min_D, opt.max_D);
  for (std::int64_t i = 0; i < D; ++i) {
    fd.fibers.push_back(random_fiber_configuration(rng, fd.fiber_genus,
                                                   opt.max_curves_per_fiber,
                                                   opt.require_stable));
  }
  return validate_fibration(std::move(fd));
}

inline IntVec random_primitive_vector(Rng& rng, std::int64_t h) {
  while (true) {
    IntVec v(static_cast<std::size_t>(2 * h));
    for (Int& x : v) {
      x = pick(rng, -3, 3);
    }
    if (is_primitive_vector(v)) {
      return v;
    }
  }
}

inline IntMatrix random_symplectic_matrix(Rng& rng, std::int64_t h, int twists) {
  IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(2 * h));
  for (int i = 0; i < twists; ++i) {
    m = m * transvection_matrix(random_primitive_vector(rng, h), h);
  }
  return m;
}

/// Semistable pencil-shaped report with loosely consistent counts; enough
/// structure for the inequality-family identities, which are purely
/// arithmetic in (h, n, s, D, N).
inline InvariantReport random_pencil_report(Rng& rng) {
  InvariantReport rep;
  rep.fiber_genus = pick(rng, 1, 6);
  rep.base_genus = 0;
  rep.counts.n = pick(rng, 0, 30);
  rep.counts.s = pick(rng, 0, 30);
  rep.counts.k = rep.counts.n + rep.counts.s;
  if (rep.counts.k == 0) {
    rep.counts.n = 1;
    rep.counts.k = 1;
  }
  rep.counts.D = pick(rng, 1, rep.counts.k);
  rep.counts.N = rep.counts.s + rep.counts.D + pick(rng, 0, 10);
  rep.chi = euler_characteristic(rep.base_genus, rep.fiber_genus, rep.counts.k);
  rep.b2_minus_lower = 1 + rep.counts.N - rep.counts.D;
  rep.all_semistable = true;
  rep.all_stable = false;
  return rep;
}

}  // namespace lefcert::testing
