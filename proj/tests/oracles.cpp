#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace planelift::testing {

std::size_t naive_rank(std::vector<std::vector<Scalar>> rows) {
    std::size_t rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::vector<bool> used(rows.size(), false);
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (!used[r] && !rows[r][c].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        used[pivot] = true;
        ++rank;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot || rows[r][c].is_zero()) continue;
            Scalar f = rows[r][c] / rows[pivot][c];
            for (std::size_t j = 0; j < cols; ++j) rows[r][j] -= f * rows[pivot][j];
        }
    }
    return rank;
}

std::size_t naive_rank(const Matrix& m) {
    std::vector<std::vector<Scalar>> rows(m.rows(), std::vector<Scalar>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    return naive_rank(std::move(rows));
}

Matrix brute_force_symmetrizer(const BraidedVectorSpace& space, int n) {
    const int d = space.dim();
    const std::size_t dn = tensor_dim(d, n);
    Matrix sum(dn, dn);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (std::size_t c = 0; c < dn; ++c) {
            TensorVec v(dn);
            v[c] = Scalar(1);
            TensorVec image = braid_word_action(space, n, perm, v);
            for (std::size_t r = 0; r < dn; ++r)
                if (!image[r].is_zero()) sum.at(r, c) += image[r];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

long jordan_basis_count(int degree) {
    // monomials x1^a x2^b with a + b = degree
    return degree + 1;
}

long super_jordan_basis_count(int degree) {
    // monomials x1^a x21^b x2^c with a in {0,1}, a + 2b + c = degree
    long count = 0;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; a + 2 * b <= degree; ++b) ++count;
    return count;
}

namespace {

YDTriple canonical_triple(long eps) {
    YDTriple t;
    t.group = FGAbelianGroup(1, {});
    t.g = group_generator(t.group, 0);
    t.chi.values = {Scalar(eps)};
    t.eta.values = {Scalar(1)};
    return t;
}

}  // namespace

YDTriple jordanian_triple() { return canonical_triple(1); }
YDTriple super_jordanian_triple() { return canonical_triple(-1); }

FreeElement jordan_y() {
    FreeElement e(2);
    e.add_term({2, 1}, Scalar(1));
    e.add_term({1, 2}, Scalar(-1));
    e.add_term({1, 1}, Scalar::rational(1, 2));
    return e;
}

FreeElement super_r() {
    // x21 = x2 x1 + x1 x2 for eps = -1
    FreeElement x1 = FreeElement::generator(2, 1);
    FreeElement x2 = FreeElement::generator(2, 2);
    FreeElement x21(2);
    x21.add_term({2, 1}, Scalar(1));
    x21.add_term({1, 2}, Scalar(1));
    return x2 * x21 - x21 * x2 - x1 * x21;
}

}  // namespace planelift::testing
