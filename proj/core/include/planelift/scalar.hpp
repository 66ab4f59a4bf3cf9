#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace planelift {

class CyclotomicField;
using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// The cyclotomic field Q(zeta_N), fixed once per engine session.
/// Scalars of different conductors never mix; plain rationals embed freely.
class CyclotomicField {
public:
    static FieldPtr get(long conductor);

    long conductor() const { return n_; }
    std::size_t degree() const { return degree_; }  // phi(N)

    // Minimal polynomial of zeta_N over Q, monic, degree phi(N).
    const std::vector<mpq_class>& minimal_polynomial() const { return poly_; }

    // Remainder of an arbitrary-degree coefficient vector modulo the
    // minimal polynomial; result has exactly degree() entries.
    std::vector<mpq_class> reduce(std::vector<mpq_class> raw) const;

private:
    explicit CyclotomicField(long n);

    long n_;
    std::size_t degree_;
    std::vector<mpq_class> poly_;
};

/// An exact element of Q(zeta_N), stored as reduced coordinates in the
/// power basis 1, z, ..., z^{phi(N)-1}. A Scalar without a field is a
/// plain rational; it lifts canonically into any field on contact.
/// Canonical form is unique: two Scalars over the same field are equal
/// iff their coefficient vectors agree.
class Scalar {
public:
    Scalar() : coeffs_(1) {}
    Scalar(long v) : coeffs_(1) { coeffs_[0] = v; }
    explicit Scalar(mpq_class v) : coeffs_(1) { coeffs_[0] = std::move(v); }
    Scalar(const FieldPtr& field, std::vector<mpq_class> reduced_coeffs);

    static Scalar rational(long num, long den);
    static Scalar zeta(const FieldPtr& field);
    static Scalar in_field(const FieldPtr& field, const mpq_class& v);

    const FieldPtr& field() const { return field_; }
    long conductor() const { return field_ ? field_->conductor() : 1; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;  // lies in Q
    mpq_class rational_value() const;
    bool is_integer() const;
    long integer_value() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Total order for use as a map key (field elements compared
    // coefficient-wise after lifting); not an arithmetic order.
    friend bool scalar_key_less(const Scalar& a, const Scalar& b);

    std::string str() const;

private:
    void lift_to(const FieldPtr& field);
    static void match_fields(Scalar& a, Scalar& b);

    FieldPtr field_;                  // null: plain rational
    std::vector<mpq_class> coeffs_;  // size 1 (rational) or degree()
};

/// Parses the scalar grammar: rationals `p/q`, `z` for zeta_N, operators
/// `+ - * / ^`, parentheses. Throws std::invalid_argument on malformed
/// input, division by zero, or oversized exponents.
Scalar parse_scalar(std::string_view text, const FieldPtr& field);
Scalar parse_scalar(std::string_view text, long conductor);

/// Multiplicative order of s if s is a root of unity, otherwise nullopt.
/// Throws on zero input.
std::optional<long> is_root_of_unity(const Scalar& s);

/// Dense matrix over Scalar, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix transpose() const;
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::vector<Scalar>> kernel;  // column vectors, reduced echelon
};

/// Reduced row echelon elimination with deterministic pivoting (first
/// nonzero scanning rows top-down per column). Kernel basis has one
/// vector per free column, unit coefficient at the free position.
RankKernel rank_and_kernel(const Matrix& m);

/// Rank only (forward elimination, same pivot rule).
std::size_t rank(const Matrix& m);

}  // namespace planelift
