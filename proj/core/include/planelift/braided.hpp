#pragma once

#include <array>
#include <optional>
#include <vector>

#include "planelift/scalar.hpp"

namespace planelift {

/// A finite-dimensional braided vector space, stored as the dense
/// coefficient tensor of the braiding: coeff(i,j,k,l) is the coefficient
/// of x_k (x) x_l in c(x_i (x) x_j). Basis indices are 1-based.
class BraidedVectorSpace {
public:
    BraidedVectorSpace(int dim, std::vector<Scalar> coeff);

    int dim() const { return dim_; }
    const Scalar& coeff(int i, int j, int k, int l) const;
    Scalar& coeff(int i, int j, int k, int l);

    // The d^2 x d^2 matrix of c: row index (k-1)*d + (l-1), column
    // index (i-1)*d + (j-1), acting on column coordinate vectors.
    Matrix as_matrix() const;
    bool is_invertible() const;

private:
    int dim_;
    std::vector<Scalar> coeff_;  // dim^4 entries
};

/// The epsilon-Jordan-block braiding of dimension ell:
///   c(x_i (x) x_1) = eps x_1 (x) x_i,
///   c(x_i (x) x_j) = (eps x_j + x_{j-1}) (x) x_i  for j >= 2.
BraidedVectorSpace make_block(const Scalar& eps, int ell);

/// Diagonal braiding c(x_i (x) x_j) = q[i][j] x_j (x) x_i; q is d x d.
BraidedVectorSpace make_diagonal(const std::vector<std::vector<Scalar>>& q);

/// The 3-dimensional block-plus-point braiding with parameters
/// (eps, q12, q21, q22, a); eps must be +-1 and the q's nonzero.
BraidedVectorSpace make_block_point(const Scalar& eps, const Scalar& q12,
                                    const Scalar& q21, const Scalar& q22,
                                    const Scalar& a);

struct BraidCheckResult {
    bool ok = true;
    std::array<int, 3> failing_triple{0, 0, 0};  // 1-based, valid when !ok
};

/// Exhaustively checks the braid equation
///   (c x id)(id x c)(c x id) = (id x c)(c x id)(id x c)
/// on all d^3 basis triples, with exact equality.
BraidCheckResult braid_check(const BraidedVectorSpace& v);

/// Scalar data of a block-plus-point braiding, with the ghost invariant
///   G = -2a when eps = 1 and G = a when eps = -1.
struct BlockPointParams {
    Scalar eps, q12, q21, q22, a;

    Scalar q12q21() const { return q12 * q21; }
    Scalar ghost() const;
    bool ghost_discrete() const;  // ghost a non-negative rational integer
};

}  // namespace planelift
