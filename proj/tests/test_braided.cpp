#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "planelift/braided.hpp"

using namespace planelift;

namespace {

const FieldPtr F12 = CyclotomicField::get(12);

BraidedVectorSpace random_diagonal(std::mt19937& rng, int dim) {
    // nonzero entries drawn from powers of zeta_12 and small rationals
    std::uniform_int_distribution<int> kind(0, 2), zp(1, 11), num(1, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<std::vector<Scalar>> q(dim, std::vector<Scalar>(dim, Scalar(0)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Scalar v;
            switch (kind(rng)) {
                case 0: v = Scalar::zeta(F12).pow(zp(rng)); break;
                case 1: v = Scalar(num(rng)); break;
                default: v = Scalar::rational(1, num(rng)); break;
            }
            if (sign(rng)) v = -v;
            q[i][j] = v;
        }
    return make_diagonal(q);
}

}  // namespace

TEST_CASE("block braiding matches its defining rows") {
    BraidedVectorSpace v = make_block(Scalar(1), 2);
    // c(x2 (x) x2) = (x2 + x1) (x) x2
    CHECK(v.coeff(2, 2, 2, 2) == Scalar(1));
    CHECK(v.coeff(2, 2, 1, 2) == Scalar(1));
    CHECK(v.coeff(2, 2, 2, 1).is_zero());
    // c(x_i (x) x_1) = eps x_1 (x) x_i
    CHECK(v.coeff(2, 1, 1, 2) == Scalar(1));
    CHECK(v.coeff(1, 1, 1, 1) == Scalar(1));

    BraidedVectorSpace w = make_block(Scalar(-1), 2);
    CHECK(w.coeff(1, 1, 1, 1) == Scalar(-1));
    CHECK(w.coeff(2, 2, 2, 2) == Scalar(-1));
    CHECK(w.coeff(2, 2, 1, 2) == Scalar(1));
}

TEST_CASE("constructor outputs satisfy the braid equation and are invertible") {
    std::vector<BraidedVectorSpace> spaces;
    spaces.push_back(make_block(Scalar(1), 2));
    spaces.push_back(make_block(Scalar(-1), 2));
    spaces.push_back(make_block(parse_scalar("z^4", F12), 2));  // eps a cube root
    spaces.push_back(make_block(Scalar(1), 3));
    spaces.push_back(make_block_point(Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(2)));
    spaces.push_back(make_block_point(Scalar(-1), Scalar(1), Scalar(1), Scalar(1), Scalar(-2)));
    spaces.push_back(
        make_block_point(Scalar(-1), Scalar(-1), Scalar(-1), Scalar(-1), Scalar(-3)));
    for (const auto& v : spaces) {
        CHECK(braid_check(v).ok);
        CHECK(v.is_invertible());
    }
}

TEST_CASE("diagonal braidings always satisfy the braid equation") {
    std::mt19937 rng(23);
    for (int i = 0; i < 10; ++i) {
        BraidedVectorSpace v = random_diagonal(rng, 2 + (i % 3));
        CHECK(braid_check(v).ok);
        CHECK(v.is_invertible());
    }
}

TEST_CASE("corrupted block braiding fails with an explicit triple") {
    BraidedVectorSpace v = make_block(Scalar(1), 2);
    v.coeff(2, 2, 1, 2) = Scalar(7);
    auto res = braid_check(v);
    CHECK_FALSE(res.ok);
    CHECK(res.failing_triple[0] >= 1);
    CHECK(res.failing_triple[0] <= 2);
}

TEST_CASE("block-point decouples at a = 0") {
    BraidedVectorSpace v =
        make_block_point(Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(0));
    BraidedVectorSpace b = make_block(Scalar(1), 2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l) CHECK(v.coeff(i, j, k, l) == b.coeff(i, j, k, l));
    CHECK(braid_check(v).ok);
}

TEST_CASE("block-point rows match the defining matrix") {
    Scalar a(5);
    BraidedVectorSpace v = make_block_point(Scalar(-1), Scalar(2), Scalar(3), Scalar(-1), a);
    // c(x3 (x) x2) = q21 (x2 + a x1) (x) x3
    CHECK(v.coeff(3, 2, 2, 3) == Scalar(3));
    CHECK(v.coeff(3, 2, 1, 3) == Scalar(15));
    // c(x1 (x) x3) = q12 x3 (x) x1
    CHECK(v.coeff(1, 3, 3, 1) == Scalar(2));
    // c(x3 (x) x3) = q22 x3 (x) x3
    CHECK(v.coeff(3, 3, 3, 3) == Scalar(-1));
    CHECK(braid_check(v).ok);
}

TEST_CASE("ghost case formula") {
    BlockPointParams jordan{Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(2)};
    CHECK(jordan.ghost() == Scalar(-4));
    CHECK_FALSE(jordan.ghost_discrete());
    BlockPointParams super{Scalar(-1), Scalar(1), Scalar(1), Scalar(1), Scalar(-3)};
    CHECK(super.ghost() == Scalar(-3));
    CHECK_FALSE(super.ghost_discrete());
    BlockPointParams zero{Scalar(-1), Scalar(1), Scalar(1), Scalar(1), Scalar(0)};
    CHECK(zero.ghost().is_zero());
    CHECK(zero.ghost_discrete());
    BlockPointParams disc{Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(-1)};
    CHECK(disc.ghost() == Scalar(2));
    CHECK(disc.ghost_discrete());
}

TEST_CASE("constructor preconditions") {
    CHECK_THROWS_AS(make_block(Scalar(1), 1), std::invalid_argument);
    CHECK_THROWS_AS(make_block(Scalar(0), 2), std::invalid_argument);
    CHECK_THROWS_AS(
        make_block_point(Scalar(2), Scalar(1), Scalar(1), Scalar(1), Scalar(0)),
        std::invalid_argument);
    CHECK_THROWS_AS(
        make_block_point(Scalar(1), Scalar(0), Scalar(1), Scalar(1), Scalar(0)),
        std::invalid_argument);
}
