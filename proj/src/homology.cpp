#include "lefcert/homology.hpp"

#include "lefcert/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace lefcert {

namespace {

void require_length(const IntVec& v, std::int64_t h, const char* what) {
  if (v.size() != static_cast<std::size_t>(2 * h)) {
    throw Error(Err::DimensionMismatch, std::string(what) + " has " + std::to_string(v.size()) +
                                            " entries, expected " + std::to_string(2 * h));
  }
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

Int symplectic_pairing(const IntVec& x, const IntVec& y, std::int64_t h) {
  require_length(x, h, "left vector");
  require_length(y, h, "right vector");
  Int acc = 0;
  for (std::int64_t i = 0; i < h; ++i) {
    acc += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i];
  }
  return acc;
}

IntMatrix symplectic_form(std::int64_t h) {
  IntMatrix j(2 * h, 2 * h);
  for (std::int64_t i = 0; i < h; ++i) {
    j.at(2 * i, 2 * i + 1) = 1;
    j.at(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

IntMatrix transvection_matrix(const IntVec& c, std::int64_t h) {
  require_length(c, h, "curve class");
  if (!is_zero_vector(c) && !is_primitive_vector(c)) {
    throw Error(Err::NonPrimitiveCurveClass, "transvection class must be zero or primitive");
  }
  const std::size_t n = static_cast<std::size_t>(2 * h);
  IntMatrix t = IntMatrix::identity(n);
  // Column j is e_j + <e_j, c> c.
  for (std::size_t j = 0; j < n; ++j) {
    IntVec ej(n, 0);
    ej[j] = 1;
    const Int pairing = symplectic_pairing(ej, c, h);
    if (pairing == 0) {
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      t.at(i, j) += pairing * c[i];
    }
  }
  return t;
}

bool is_symplectic_matrix(const IntMatrix& m, std::int64_t h) {
  const std::size_t n = static_cast<std::size_t>(2 * h);
  if (m.rows() != n || m.cols() != n) {
    throw Error(Err::DimensionMismatch, "expected a " + std::to_string(n) + "x" +
                                            std::to_string(n) + " matrix");
  }
  const IntMatrix j = symplectic_form(h);
  return m.transposed() * j * m == j;
}

IntMatrix symplectic_inverse(const IntMatrix& m, std::int64_t h) {
  if (!is_symplectic_matrix(m, h)) {
    throw Error(Err::MatrixNotSymplectic, "cannot invert via the symplectic form");
  }
  const IntMatrix j = symplectic_form(h);
  // M^T J M = J and J^2 = -I give M^{-1} = -J M^T J.
  IntMatrix inv = j * m.transposed() * j;
  for (std::size_t r = 0; r < inv.rows(); ++r) {
    inv.negate_row(r);
  }
  return inv;
}

const char* shadow_verdict_name(ShadowVerdict v) {
  switch (v) {
    case ShadowVerdict::identity: return "identity";
    case ShadowVerdict::nonidentity: return "nonidentity";
    case ShadowVerdict::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

ShadowVerdict monodromy_shadow_check(const FibrationDescription& fd) {
  const std::int64_t h = fd.fiber_genus;
  const std::size_t n = static_cast<std::size_t>(2 * h);
  if (fd.base_genus >= 1 && !fd.handle_matrices) {
    return ShadowVerdict::indeterminate;
  }

  IntMatrix product = IntMatrix::identity(n);
  if (fd.handle_matrices) {
    const auto& handles = *fd.handle_matrices;
    if (handles.size() != static_cast<std::size_t>(2 * fd.base_genus)) {
      throw Error(Err::DimensionMismatch,
                  "expected " + std::to_string(2 * fd.base_genus) + " handle matrices, got " +
                      std::to_string(handles.size()));
    }
    for (std::size_t i = 0; i + 1 < handles.size(); i += 2) {
      const IntMatrix& a = handles[i];
      const IntMatrix& b = handles[i + 1];
      if (!is_symplectic_matrix(a, h) || !is_symplectic_matrix(b, h)) {
        throw Error(Err::MatrixNotSymplectic, "handle matrix pair " + std::to_string(i / 2));
      }
      product = product * a * b * symplectic_inverse(a, h) * symplectic_inverse(b, h);
    }
  }
  for (std::size_t f = 0; f < fd.fibers.size(); ++f) {
    for (std::size_t c = 0; c < fd.fibers[f].curves.size(); ++c) {
      const Curve& curve = fd.fibers[f].curves[c];
      if (!curve.homology_class) {
        throw Error(Err::MissingHomologyData, "fiber " + std::to_string(f) + " curve " +
                                                  std::to_string(c) + " has no homology class");
      }
      product = product * transvection_matrix(*curve.homology_class, h);
    }
  }
  return product == IntMatrix::identity(n) ? ShadowVerdict::identity : ShadowVerdict::nonidentity;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithDecomposition out{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& s = out.s;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;
  const std::size_t rows = s.rows();
  const std::size_t cols = s.cols();
  const std::size_t rank_cap = std::min(rows, cols);

  for (std::size_t t = 0; t < rank_cap; ++t) {
    // Pivot: minimal nonzero absolute value in the trailing submatrix.
    std::size_t pr = t, pc = t;
    Int best = 0;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        const Int& x = s.at(r, c);
        if (x == 0) {
          continue;
        }
        if (best == 0 || abs_int(x) < best) {
          best = abs_int(x);
          pr = r;
          pc = c;
        }
      }
    }
    if (best == 0) {
      break;  // trailing submatrix is zero
    }
    s.swap_rows(t, pr);
    u.swap_rows(t, pr);
    s.swap_cols(t, pc);
    v.swap_cols(t, pc);

    bool settled = false;
    while (!settled) {
      settled = true;
      // Clear column t. Remainders smaller than the pivot may appear; they
      // become the next pivot, so |pivot| strictly decreases and the loop
      // terminates.
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (s.at(r, t) == 0) {
          continue;
        }
        const Int q = s.at(r, t) / s.at(t, t);
        if (q != 0) {
          s.add_row_multiple(r, t, -q);
          u.add_row_multiple(r, t, -q);
        }
        if (s.at(r, t) != 0) {
          s.swap_rows(t, r);
          u.swap_rows(t, r);
          settled = false;
        }
      }
      if (!settled) {
        continue;
      }
      // Clear row t.
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (s.at(t, c) == 0) {
          continue;
        }
        const Int q = s.at(t, c) / s.at(t, t);
        if (q != 0) {
          s.add_col_multiple(c, t, -q);
          v.add_col_multiple(c, t, -q);
        }
        if (s.at(t, c) != 0) {
          s.swap_cols(t, c);
          v.swap_cols(t, c);
          settled = false;
        }
      }
      if (!settled) {
        continue;
      }
      // Pivot must divide the trailing submatrix for the divisibility chain.
      for (std::size_t r = t + 1; r < rows && settled; ++r) {
        for (std::size_t c = t + 1; c < cols && settled; ++c) {
          if (s.at(r, c) % s.at(t, t) != 0) {
            s.add_row_multiple(t, r, 1);
            u.add_row_multiple(t, r, 1);
            settled = false;
          }
        }
      }
    }
    if (s.at(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return out;
}

std::vector<Int> invariant_factors(const IntMatrix& m) {
  const SmithDecomposition snf = smith_normal_form(m);
  std::vector<Int> factors;
  const std::size_t cap = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < cap; ++i) {
    if (snf.s.at(i, i) != 0) {
      factors.push_back(snf.s.at(i, i));
    }
  }
  return factors;
}

HomologySummary first_homology(const FibrationDescription& fd) {
  const std::int64_t h = fd.fiber_genus;
  const std::int64_t g = fd.base_genus;
  const std::size_t dim = static_cast<std::size_t>(2 * h);
  if (g >= 1 && !fd.handle_matrices) {
    throw Error(Err::MissingHomologyData, "handle matrices required for base genus >= 1");
  }

  std::size_t cycle_cols = 0;
  for (const FiberConfiguration& fiber : fd.fibers) {
    cycle_cols += fiber.curves.size();
  }
  const std::size_t handle_cols = fd.handle_matrices ? fd.handle_matrices->size() * dim : 0;

  IntMatrix relations(dim, cycle_cols + handle_cols);
  std::size_t col = 0;
  for (std::size_t f = 0; f < fd.fibers.size(); ++f) {
    for (std::size_t c = 0; c < fd.fibers[f].curves.size(); ++c) {
      const Curve& curve = fd.fibers[f].curves[c];
      if (!curve.homology_class) {
        throw Error(Err::MissingHomologyData, "fiber " + std::to_string(f) + " curve " +
                                                  std::to_string(c) + " has no homology class");
      }
      require_length(*curve.homology_class, h, "curve class");
      for (std::size_t r = 0; r < dim; ++r) {
        relations.at(r, col) = (*curve.homology_class)[r];
      }
      ++col;
    }
  }
  if (fd.handle_matrices) {
    for (const IntMatrix& phi : *fd.handle_matrices) {
      if (!is_symplectic_matrix(phi, h)) {
        throw Error(Err::MatrixNotSymplectic, "handle matrix in homology relation block");
      }
      for (std::size_t b = 0; b < dim; ++b) {
        for (std::size_t r = 0; r < dim; ++r) {
          relations.at(r, col) = phi.at(r, b) - (r == b ? 1 : 0);
        }
        ++col;
      }
    }
  }

  const std::vector<Int> factors = invariant_factors(relations);
  HomologySummary summary;
  summary.b1 = 2 * g + (2 * h - static_cast<std::int64_t>(factors.size()));
  for (const Int& f : factors) {
    if (f > 1) {
      summary.torsion.push_back(f);
    }
  }
  return summary;
}

}  // namespace lefcert
