#pragma once

#include "lefcert/fibration.hpp"
#include "lefcert/int_matrix.hpp"
#include "lefcert/numeric.hpp"

#include <cstdint>
#include <vector>

namespace lefcert {

// Integer symplectic linear algebra on H_1 of the fiber. Basis convention
// a1,b1,...,ah,bh with <a_i,b_i> = +1 and all other basis pairings zero; a
// right-handed Dehn twist about c acts by x -> x + <x,c>c. One convention is
// fixed and applied uniformly; identity verdicts are only meaningful within
// a single convention.

/// x^T J y for vectors of length 2h.
Int symplectic_pairing(const IntVec& x, const IntVec& y, std::int64_t h);

/// The pairing matrix J (block diagonal, blocks [[0,1],[-1,0]]).
IntMatrix symplectic_form(std::int64_t h);

/// Matrix of the transvection x -> x + <x,c>c. c must be zero (separating
/// curve) or primitive.
IntMatrix transvection_matrix(const IntVec& c, std::int64_t h);

/// M^T J M == J.
bool is_symplectic_matrix(const IntMatrix& m, std::int64_t h);

/// Inverse of a symplectic matrix, computed as -J M^T J (exact, no division).
IntMatrix symplectic_inverse(const IntMatrix& m, std::int64_t h);

enum class ShadowVerdict { identity, nonidentity, indeterminate };

const char* shadow_verdict_name(ShadowVerdict v);

/// Evaluates the homological shadow of the global monodromy relation:
/// the ordered product of handle commutators [A_j,B_j] followed by the
/// transvections of all vanishing cycles in the declared global order.
/// This is a necessary condition only; "identity" certifies nothing about
/// an actual mapping class group factorization.
///
/// Returns indeterminate when g >= 1 and no handle matrices are supplied.
/// Throws MissingHomologyData when a curve lacks its homology class.
ShadowVerdict monodromy_shadow_check(const FibrationDescription& fd);

struct SmithDecomposition {
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix s;  // diagonal, d1 | d2 | ... >= 0
  IntMatrix v;  // unimodular, cols x cols
};

/// Smith normal form with exact arithmetic: u * m * v == s.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Nonzero diagonal entries of the Smith form, in divisibility order.
std::vector<Int> invariant_factors(const IntMatrix& m);

struct HomologySummary {
  std::int64_t b1 = 0;
  std::vector<Int> torsion;  // invariant factors > 1, divisibility chain
};

/// H_1 of the total space: Z^{2g} plus the cokernel of the relation matrix
/// whose columns are all vanishing-cycle classes together with
/// (phi - I) e_b for every handle shadow phi and basis vector e_b.
/// Throws MissingHomologyData when cycle classes or (for g >= 1) handle
/// matrices are missing.
HomologySummary first_homology(const FibrationDescription& fd);

}  // namespace lefcert
