#include "planelift/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace planelift {

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
    trim(a);
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    QPoly q(a.size() - b.size() + 1);
    const mpq_class& lead = b.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        std::size_t i = k + b.size() - 1;
        if (a[i] == 0) continue;
        mpq_class f = a[i] / lead;
        q[k] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= f * b[j];
    }
    trim(a);
    return {q, a};
}

// Cyclotomic polynomial Phi_n, computed by exact division of x^n - 1
// by all lower-level Phi_d, d | n.
const QPoly& cyclotomic_poly(long n) {
    static std::map<long, QPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    std::vector<long> stack{n};
    while (!stack.empty()) {
        long m = stack.back();
        if (cache.count(m)) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (long d = 1; d < m; ++d)
            if (m % d == 0 && !cache.count(d)) {
                stack.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        QPoly p(m + 1);
        p[0] = -1;
        p[m] = 1;
        for (long d = 1; d < m; ++d)
            if (m % d == 0) {
                auto [q, r] = poly_divmod(p, cache[d]);
                if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
                p = q;
            }
        cache[m] = p;
        stack.pop_back();
    }
    return cache[n];
}

mpq_class make_rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

CyclotomicField::CyclotomicField(long n) : n_(n) {
    if (n < 1) throw std::invalid_argument("conductor must be positive");
    poly_ = cyclotomic_poly(n);
    degree_ = poly_.size() - 1;
}

FieldPtr CyclotomicField::get(long conductor) {
    static std::map<long, FieldPtr> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(conductor);
    if (it != cache.end()) return it->second;
    FieldPtr f(new CyclotomicField(conductor));
    cache.emplace(conductor, f);
    return f;
}

std::vector<mpq_class> CyclotomicField::reduce(std::vector<mpq_class> raw) const {
    for (std::size_t i = raw.size(); i-- > degree_;) {
        if (raw[i] == 0) continue;
        mpq_class c = raw[i];
        raw[i] = 0;
        // x^degree == -sum_{j<degree} poly_[j] x^j, shifted up by i - degree.
        for (std::size_t j = 0; j < degree_; ++j)
            if (poly_[j] != 0) raw[i - degree_ + j] -= c * poly_[j];
    }
    raw.resize(degree_);
    return raw;
}

Scalar::Scalar(const FieldPtr& field, std::vector<mpq_class> reduced_coeffs)
    : field_(field), coeffs_(std::move(reduced_coeffs)) {
    if (!field_) throw std::invalid_argument("null field");
    if (coeffs_.size() != field_->degree())
        throw std::invalid_argument("coefficient count does not match field degree");
}

Scalar Scalar::rational(long num, long den) { return Scalar(make_rat(num, den)); }

Scalar Scalar::zeta(const FieldPtr& field) {
    std::vector<mpq_class> c(field->degree());
    if (c.size() > 1)
        c[1] = 1;
    else
        c[0] = (field->conductor() == 1) ? 1 : -1;  // zeta_1 = 1, zeta_2 = -1
    return Scalar(field, std::move(c));
}

Scalar Scalar::in_field(const FieldPtr& field, const mpq_class& v) {
    std::vector<mpq_class> c(field->degree());
    c[0] = v;
    return Scalar(field, std::move(c));
}

void Scalar::lift_to(const FieldPtr& field) {
    if (field_) {
        if (field_->conductor() != field->conductor())
            throw std::invalid_argument("mixing scalars of conductors " +
                                        std::to_string(field_->conductor()) + " and " +
                                        std::to_string(field->conductor()));
        return;
    }
    mpq_class v = coeffs_[0];
    coeffs_.assign(field->degree(), 0);
    coeffs_[0] = v;
    field_ = field;
}

void Scalar::match_fields(Scalar& a, Scalar& b) {
    if (a.field_ && !b.field_) b.lift_to(a.field_);
    else if (!a.field_ && b.field_) a.lift_to(b.field_);
    else if (a.field_ && b.field_) a.lift_to(b.field_);  // checks conductor
}

bool Scalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

mpq_class Scalar::rational_value() const {
    if (!is_rational()) throw std::invalid_argument("scalar is not rational: " + str());
    return coeffs_[0];
}

bool Scalar::is_integer() const {
    return is_rational() && coeffs_[0].get_den() == 1;
}

long Scalar::integer_value() const {
    mpq_class v = rational_value();
    if (v.get_den() != 1 || !v.get_num().fits_slong_p())
        throw std::invalid_argument("scalar is not a machine integer: " + str());
    return v.get_num().get_si();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    Scalar rhs = o;
    match_fields(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    Scalar rhs = o;
    match_fields(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Scalar rhs = o;
    match_fields(*this, rhs);
    if (!field_) {
        coeffs_[0] *= rhs.coeffs_[0];
        return *this;
    }
    // Track true degrees so rational-valued entries stay cheap.
    std::size_t da = coeffs_.size(), db = rhs.coeffs_.size();
    while (da > 0 && coeffs_[da - 1] == 0) --da;
    while (db > 0 && rhs.coeffs_[db - 1] == 0) --db;
    if (da == 0 || db == 0) {
        std::fill(coeffs_.begin(), coeffs_.end(), mpq_class(0));
        return *this;
    }
    std::vector<mpq_class> raw(da + db - 1);
    for (std::size_t i = 0; i < da; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < db; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            raw[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    if (raw.size() > field_->degree()) raw = field_->reduce(std::move(raw));
    raw.resize(field_->degree());
    coeffs_ = std::move(raw);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("division by zero");
    if (is_rational()) {
        Scalar r = *this;
        mpq_class inv = 1 / coeffs_[0];
        std::fill(r.coeffs_.begin(), r.coeffs_.end(), mpq_class(0));
        r.coeffs_[0] = inv;
        return r;
    }
    // Extended Euclid in Q[x] modulo the (irreducible) minimal polynomial.
    QPoly r0 = field_->minimal_polynomial();
    QPoly r1 = coeffs_;
    trim(r1);
    QPoly s0{};      // Bezout coefficient of the input within r0
    QPoly s1{mpq_class(1)};
    while (!r1.empty()) {
        auto [q, rem] = poly_divmod(r0, r1);
        QPoly s2 = s0;
        QPoly qs1 = poly_mul(q, s1);
        if (s2.size() < qs1.size()) s2.resize(qs1.size());
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant gcd; inverse = s0 / r0.
    if (r0.size() != 1)
        throw std::logic_error("minimal polynomial not coprime to nonzero element");
    for (auto& c : s0) c /= r0[0];
    s0.resize(field_->degree());
    return Scalar(field_, std::move(s0));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this;
    Scalar acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    // Preserve the field so powers of field elements stay in the field.
    if (field_ && !acc.field_) acc.lift_to(field_);
    return acc;
}

bool operator==(const Scalar& a, const Scalar& b) {
    Scalar x = a, y = b;
    Scalar::match_fields(x, y);
    return x.coeffs_ == y.coeffs_;
}

bool scalar_key_less(const Scalar& a, const Scalar& b) {
    Scalar x = a, y = b;
    Scalar::match_fields(x, y);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        int c = cmp(x.coeffs_[i], y.coeffs_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string Scalar::str() const {
    if (is_rational()) return coeffs_[0].get_str();
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpq_class& c = coeffs_[k];
        if (c == 0) continue;
        bool neg = c < 0;
        mpq_class a = neg ? mpq_class(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string power;
        if (k == 1) power = "z";
        else if (k > 1) power = "z^" + std::to_string(k);
        if (power.empty()) out += a.get_str();
        else if (a == 1) out += power;
        else out += a.get_str() + "*" + power;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Scalar expression parser.

namespace {

struct ScalarParser {
    std::string_view text;
    std::size_t pos = 0;
    FieldPtr field;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("scalar parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    mpz_class parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    Scalar parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Scalar v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'z') {
            ++pos;
            return Scalar::zeta(field);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(mpq_class(parse_int()));
        fail(std::string("unexpected character '") + c + "'");
    }

    Scalar parse_power() {
        Scalar base = parse_atom();
        if (eat('^')) {
            bool neg = eat('-');
            mpz_class e = parse_int();
            if (!e.fits_slong_p() || e > 1000000) fail("exponent overflow");
            long exp = e.get_si();
            if (neg) exp = -exp;
            if (exp < 0 && base.is_zero()) fail("division by zero");
            return base.pow(exp);
        }
        return base;
    }

    Scalar parse_term() {
        Scalar v = parse_power();
        for (;;) {
            if (eat('*')) v *= parse_power();
            else if (eat('/')) {
                Scalar d = parse_power();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else
                return v;
        }
    }

    Scalar parse_expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Scalar v = parse_term();
        if (neg) v = -v;
        for (;;) {
            if (eat('+')) v += parse_term();
            else if (eat('-')) v -= parse_term();
            else return v;
        }
    }

    Scalar run() {
        Scalar v = parse_expr();
        skip_ws();
        if (pos != text.size()) fail("trailing input");
        // Always land in the session field so canonical forms are uniform.
        return v + Scalar::in_field(field, 0);
    }
};

}  // namespace

Scalar parse_scalar(std::string_view text, const FieldPtr& field) {
    ScalarParser p{text, 0, field};
    return p.run();
}

Scalar parse_scalar(std::string_view text, long conductor) {
    return parse_scalar(text, CyclotomicField::get(conductor));
}

std::optional<long> is_root_of_unity(const Scalar& s) {
    if (s.is_zero()) throw std::invalid_argument("zero is not a root of unity candidate");
    long n = s.conductor();
    long order_bound = std::lcm(2L, n);  // all roots of unity in Q(zeta_n)
    if (!(s.pow(order_bound) == Scalar(1))) return std::nullopt;
    for (long k = 1; k <= order_bound; ++k)
        if (order_bound % k == 0 && s.pow(k) == Scalar(1)) return k;
    return std::nullopt;  // unreachable
}

// ---------------------------------------------------------------------------
// Matrix.

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

RankKernel rank_and_kernel(const Matrix& m) {
    Matrix w = m;
    const std::size_t R = w.rows(), C = w.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = R;
        for (std::size_t i = r; i < R; ++i)
            if (!w.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = c; j < C; ++j) std::swap(w.at(r, j), w.at(p, j));
        Scalar inv = w.at(r, c).inverse();
        for (std::size_t j = c; j < C; ++j)
            if (!w.at(r, j).is_zero()) w.at(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r) continue;
            const Scalar f = w.at(i, c);
            if (f.is_zero()) continue;
            for (std::size_t j = c; j < C; ++j) {
                if (w.at(r, j).is_zero()) continue;
                w.at(i, j) -= f * w.at(r, j);
            }
        }
        pivot_cols.push_back(c);
        ++r;
    }
    RankKernel out;
    out.rank = r;
    std::vector<bool> is_pivot(C, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(C);
        v[f] = Scalar(1);
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -w.at(k, f);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(const Matrix& m) {
    Matrix w = m;
    const std::size_t R = w.rows(), C = w.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = R;
        for (std::size_t i = r; i < R; ++i)
            if (!w.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = c; j < C; ++j) std::swap(w.at(r, j), w.at(p, j));
        const Scalar piv = w.at(r, c);
        for (std::size_t i = r + 1; i < R; ++i) {
            const Scalar f = w.at(i, c);
            if (f.is_zero()) continue;
            const Scalar ratio = f / piv;
            for (std::size_t j = c; j < C; ++j) {
                if (w.at(r, j).is_zero()) continue;
                w.at(i, j) -= ratio * w.at(r, j);
            }
        }
        ++r;
    }
    return r;
}

}  // namespace planelift
