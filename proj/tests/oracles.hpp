#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <vector>

#include "planelift/freealg.hpp"
#include "planelift/ydcat.hpp"

namespace planelift::testing {

/// Naive Gaussian elimination rank, written independently of
/// planelift::rank (no pivot bookkeeping shared).
std::size_t naive_rank(std::vector<std::vector<Scalar>> rows);
std::size_t naive_rank(const Matrix& m);

/// The quantum symmetrizer as the literal n!-term sum of Matsumoto
/// lifts, one per permutation enumerated by std::next_permutation.
Matrix brute_force_symmetrizer(const BraidedVectorSpace& space, int n);

/// Basis counts from the known PBW monomials:
/// Jordan plane x1^a x2^b, super Jordan plane x1^a x21^b x2^c (a <= 1).
long jordan_basis_count(int degree);
long super_jordan_basis_count(int degree);

/// Canonical YD-triples over Z with eta(g) = 1.
YDTriple jordanian_triple();
YDTriple super_jordanian_triple();

/// The candidate primitives of the two cases as elements of T(V):
/// y = x2 x1 - x1 x2 + 1/2 x1^2, and for eps = -1
/// r = x2 x21 - x21 x2 - x1 x21 with x21 = x2 x1 + x1 x2.
FreeElement jordan_y();
FreeElement super_r();

}  // namespace planelift::testing
