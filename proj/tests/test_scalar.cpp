#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "planelift/scalar.hpp"

using namespace planelift;

namespace {

const FieldPtr F12 = CyclotomicField::get(12);

Scalar random_scalar(std::mt19937& rng, bool allow_zero = true) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
    std::vector<mpq_class> c(F12->degree());
    for (;;) {
        for (auto& q : c) {
            q = mpq_class(num(rng), den(rng));
            q.canonicalize();
        }
        Scalar s(F12, c);
        if (allow_zero || !s.is_zero()) return s;
    }
}

}  // namespace

TEST_CASE("cyclotomic field basics") {
    CHECK(F12->degree() == 4);  // phi(12)
    // Phi_12 = x^4 - x^2 + 1
    const auto& p = F12->minimal_polynomial();
    CHECK(p.size() == 5);
    CHECK(p[0] == 1);
    CHECK(p[2] == -1);
    CHECK(p[4] == 1);
    CHECK(CyclotomicField::get(1)->degree() == 1);
    CHECK(CyclotomicField::get(8)->degree() == 4);
}

TEST_CASE("parse_scalar literals and identities") {
    CHECK(parse_scalar("1/2", F12) == Scalar::rational(1, 2));
    // z^4 is a primitive cube root of unity: 1 + z^4 + z^8 = 0
    CHECK(parse_scalar("z^4 + z^8 + 1", F12).is_zero());
    CHECK(parse_scalar("z^6", F12) == Scalar(-1));
    CHECK(parse_scalar("z^12", F12) == Scalar(1));
    CHECK(parse_scalar("(1+z)*(1-z)", F12) == Scalar(1) - parse_scalar("z^2", F12));
    CHECK(parse_scalar("2^10/4", F12) == Scalar(256));
    CHECK(parse_scalar("z^-1", F12) == parse_scalar("z^11", F12));
    CHECK_THROWS_AS(parse_scalar("1/(z - z)", F12), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("1 +", F12), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("q", F12), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("z^9999999999", F12), std::invalid_argument);
}

TEST_CASE("print-parse round trip") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Scalar s = random_scalar(rng);
        CHECK(parse_scalar(s.str(), F12) == s);
    }
    CHECK(Scalar(0).str() == "0");
    CHECK(Scalar::rational(-3, 2).str() == "-3/2");
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        Scalar nz = random_scalar(rng, false);
        CHECK(nz * nz.inverse() == Scalar(1));
    }
}

TEST_CASE("canonical form uniqueness") {
    std::mt19937 rng(13);
    for (int i = 0; i < 30; ++i) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        Scalar diff = a - b;
        CHECK((a == b) == diff.is_zero());
        CHECK((a == b) == (a.coeffs() == b.coeffs()));
    }
}

TEST_CASE("conductor mixing is an error, rationals embed") {
    Scalar a = parse_scalar("z", 12);
    Scalar b = parse_scalar("z", 8);
    CHECK_THROWS_AS((void)(a + b), std::invalid_argument);
    CHECK(a + Scalar(1) == parse_scalar("z + 1", 12));  // rational lifts silently
    CHECK(Scalar::rational(1, 2) == parse_scalar("1/2", 12));
}

TEST_CASE("is_root_of_unity") {
    CHECK(is_root_of_unity(Scalar(1)) == 1);
    CHECK(is_root_of_unity(parse_scalar("z^4", F12)) == 3);
    CHECK(is_root_of_unity(Scalar(2)) == std::nullopt);
    CHECK(is_root_of_unity(Scalar(-1)) == 2);
    CHECK(is_root_of_unity(Scalar::zeta(F12)) == 12);
    CHECK(is_root_of_unity(parse_scalar("z + 1", F12)) == std::nullopt);
    CHECK_THROWS_AS(is_root_of_unity(Scalar(0)), std::invalid_argument);
    // rational-only session: roots of unity are just +-1
    CHECK(is_root_of_unity(Scalar(-1) + Scalar(0)) == 2);
}

TEST_CASE("rank_and_kernel on the 2x2 identity") {
    auto rk = rank_and_kernel(Matrix::identity(2));
    CHECK(rk.rank == 2);
    CHECK(rk.kernel.empty());
}

TEST_CASE("kernel vectors multiply back to zero; rank matches naive oracle") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> dims(1, 8);
        std::size_t r = dims(rng), c = dims(rng);
        Matrix m(r, c);
        std::uniform_int_distribution<int> entry(-3, 3);
        std::uniform_int_distribution<int> sparse(0, 2);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (sparse(rng)) m.at(i, j) = Scalar(entry(rng));
        auto rk = rank_and_kernel(m);
        CHECK(rk.rank == testing::naive_rank(m));
        CHECK(rk.rank == rank(m));
        CHECK(rk.rank + rk.kernel.size() == c);
        for (const auto& v : rk.kernel)
            for (std::size_t i = 0; i < r; ++i) {
                Scalar dot(0);
                for (std::size_t j = 0; j < c; ++j) dot += m.at(i, j) * v[j];
                CHECK(dot.is_zero());
            }
    }
}

TEST_CASE("empty matrix") {
    Matrix m(0, 0);
    auto rk = rank_and_kernel(m);
    CHECK(rk.rank == 0);
    CHECK(rk.kernel.empty());
}
