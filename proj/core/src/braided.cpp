#include "planelift/braided.hpp"

#include <stdexcept>

namespace planelift {

BraidedVectorSpace::BraidedVectorSpace(int dim, std::vector<Scalar> coeff)
    : dim_(dim), coeff_(std::move(coeff)) {
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    std::size_t want = 1;
    for (int k = 0; k < 4; ++k) want *= static_cast<std::size_t>(dim);
    if (coeff_.size() != want)
        throw std::invalid_argument("braiding tensor must have dim^4 entries");
}

const Scalar& BraidedVectorSpace::coeff(int i, int j, int k, int l) const {
    std::size_t d = static_cast<std::size_t>(dim_);
    return coeff_[(((i - 1) * d + (j - 1)) * d + (k - 1)) * d + (l - 1)];
}

Scalar& BraidedVectorSpace::coeff(int i, int j, int k, int l) {
    std::size_t d = static_cast<std::size_t>(dim_);
    return coeff_[(((i - 1) * d + (j - 1)) * d + (k - 1)) * d + (l - 1)];
}

Matrix BraidedVectorSpace::as_matrix() const {
    std::size_t d = static_cast<std::size_t>(dim_);
    Matrix m(d * d, d * d);
    for (int i = 1; i <= dim_; ++i)
        for (int j = 1; j <= dim_; ++j)
            for (int k = 1; k <= dim_; ++k)
                for (int l = 1; l <= dim_; ++l)
                    m.at((k - 1) * d + (l - 1), (i - 1) * d + (j - 1)) = coeff(i, j, k, l);
    return m;
}

bool BraidedVectorSpace::is_invertible() const {
    std::size_t d2 = static_cast<std::size_t>(dim_) * dim_;
    return rank(as_matrix()) == d2;
}

BraidedVectorSpace make_block(const Scalar& eps, int ell) {
    if (ell < 2) throw std::invalid_argument("block dimension must be at least 2");
    if (eps.is_zero()) throw std::invalid_argument("block parameter eps must be nonzero");
    std::size_t d = static_cast<std::size_t>(ell);
    BraidedVectorSpace v(ell, std::vector<Scalar>(d * d * d * d));
    for (int i = 1; i <= ell; ++i) {
        v.coeff(i, 1, 1, i) = eps;
        for (int j = 2; j <= ell; ++j) {
            v.coeff(i, j, j, i) = eps;
            v.coeff(i, j, j - 1, i) = Scalar(1);
        }
    }
    return v;
}

BraidedVectorSpace make_diagonal(const std::vector<std::vector<Scalar>>& q) {
    int d = static_cast<int>(q.size());
    if (d < 1) throw std::invalid_argument("empty braiding matrix");
    std::size_t dd = static_cast<std::size_t>(d);
    BraidedVectorSpace v(d, std::vector<Scalar>(dd * dd * dd * dd));
    for (int i = 1; i <= d; ++i) {
        if (q[i - 1].size() != dd) throw std::invalid_argument("braiding matrix must be square");
        for (int j = 1; j <= d; ++j) {
            if (q[i - 1][j - 1].is_zero())
                throw std::invalid_argument("diagonal braiding entries must be nonzero");
            v.coeff(i, j, j, i) = q[i - 1][j - 1];
        }
    }
    return v;
}

BraidedVectorSpace make_block_point(const Scalar& eps, const Scalar& q12,
                                    const Scalar& q21, const Scalar& q22,
                                    const Scalar& a) {
    if (!(eps == Scalar(1) || eps == Scalar(-1)))
        throw std::invalid_argument("block-point eps must be +1 or -1");
    if (q12.is_zero() || q21.is_zero() || q22.is_zero())
        throw std::invalid_argument("block-point q parameters must be nonzero");
    BraidedVectorSpace v(3, std::vector<Scalar>(81));
    for (int i = 1; i <= 2; ++i) {
        v.coeff(i, 1, 1, i) = eps;                 // c(x_i (x) x_1) = eps x_1 (x) x_i
        v.coeff(i, 2, 2, i) = eps;                 // c(x_i (x) x_2) = (eps x_2 + x_1) (x) x_i
        v.coeff(i, 2, 1, i) = Scalar(1);
        v.coeff(i, 3, 3, i) = q12;                 // c(x_i (x) x_3) = q12 x_3 (x) x_i
    }
    v.coeff(3, 1, 1, 3) = q21;                     // c(x_3 (x) x_1) = q21 x_1 (x) x_3
    v.coeff(3, 2, 2, 3) = q21;                     // c(x_3 (x) x_2) = q21 (x_2 + a x_1) (x) x_3
    v.coeff(3, 2, 1, 3) = q21 * a;
    v.coeff(3, 3, 3, 3) = q22;                     // c(x_3 (x) x_3) = q22 x_3 (x) x_3
    return v;
}

namespace {

// Element of V^(x)3 as a dense vector indexed by (i-1)*d^2+(j-1)*d+(k-1).
using Vec3 = std::vector<Scalar>;

// Applies c on tensor positions (p, p+1), p in {1, 2}.
Vec3 apply_c(const BraidedVectorSpace& v, int p, const Vec3& in) {
    int d = v.dim();
    Vec3 out(in.size());
    for (std::size_t idx = 0; idx < in.size(); ++idx) {
        if (in[idx].is_zero()) continue;
        int a = static_cast<int>(idx / (d * d)) + 1;
        int b = static_cast<int>((idx / d) % d) + 1;
        int c = static_cast<int>(idx % d) + 1;
        int x = (p == 1) ? a : b;
        int y = (p == 1) ? b : c;
        for (int k = 1; k <= d; ++k)
            for (int l = 1; l <= d; ++l) {
                const Scalar& co = v.coeff(x, y, k, l);
                if (co.is_zero()) continue;
                int na = (p == 1) ? k : a;
                int nb = (p == 1) ? l : k;
                int nc = (p == 1) ? c : l;
                std::size_t nidx = static_cast<std::size_t>(na - 1) * d * d +
                                   static_cast<std::size_t>(nb - 1) * d + (nc - 1);
                out[nidx] += in[idx] * co;
            }
    }
    return out;
}

}  // namespace

BraidCheckResult braid_check(const BraidedVectorSpace& v) {
    int d = v.dim();
    std::size_t total = static_cast<std::size_t>(d) * d * d;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            for (int k = 1; k <= d; ++k) {
                Vec3 e(total);
                std::size_t idx = static_cast<std::size_t>(i - 1) * d * d +
                                  static_cast<std::size_t>(j - 1) * d + (k - 1);
                e[idx] = Scalar(1);
                Vec3 lhs = apply_c(v, 1, apply_c(v, 2, apply_c(v, 1, e)));
                Vec3 rhs = apply_c(v, 2, apply_c(v, 1, apply_c(v, 2, e)));
                if (lhs != rhs) return {false, {i, j, k}};
            }
    return {};
}

Scalar BlockPointParams::ghost() const {
    if (eps == Scalar(1)) return Scalar(-2) * a;
    if (eps == Scalar(-1)) return a;
    throw std::invalid_argument("ghost requires eps in {+1, -1}");
}

bool BlockPointParams::ghost_discrete() const {
    Scalar g = ghost();
    return g.is_integer() && !(g.rational_value() < 0);
}

}  // namespace planelift
