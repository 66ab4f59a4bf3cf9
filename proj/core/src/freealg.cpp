#include "planelift/freealg.hpp"

#include <cctype>
#include <stdexcept>

namespace planelift {

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += "x" + std::to_string(w[i]);
    }
    return out;
}

FreeElement FreeElement::generator(int dim, int i) {
    return from_word(dim, Word{i});
}

FreeElement FreeElement::from_word(int dim, Word w, Scalar c) {
    FreeElement e(dim);
    e.add_term(w, c);
    return e;
}

FreeElement FreeElement::constant(int dim, Scalar c) {
    return from_word(dim, Word{}, std::move(c));
}

void FreeElement::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    for (int letter : w)
        if (letter < 1 || letter > dim_)
            throw std::invalid_argument("word letter out of range: " + word_str(w));
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar FreeElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

FreeElement FreeElement::operator-() const {
    FreeElement r(dim_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FreeElement FreeElement::operator*(const FreeElement& o) const {
    FreeElement r(dim_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

FreeElement FreeElement::scaled(const Scalar& c) const {
    FreeElement r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
    return r;
}

int FreeElement::homogeneous_degree() const {
    int deg = -1;
    for (const auto& [w, c] : terms_) {
        if (deg == -1) deg = static_cast<int>(w.size());
        else if (deg != static_cast<int>(w.size())) return -1;
    }
    return deg;
}

namespace {

// Shared coefficient formatting: "" for +1, "-" for -1, "p/q*" for
// rationals, "(expr)*" otherwise. `word_follows` controls the trailing *.
std::string coeff_prefix(const Scalar& c, bool word_follows) {
    if (word_follows) {
        if (c.is_one()) return "";
        if (c == Scalar(-1)) return "-";
        if (c.is_rational()) return c.str() + "*";
        return "(" + c.str() + ")*";
    }
    if (c.is_rational()) return c.str();
    return "(" + c.str() + ")";
}

std::string join_term(std::string& out, const std::string& term) {
    if (out.empty()) {
        out = term;
    } else if (!term.empty() && term[0] == '-') {
        out += " - " + term.substr(1);
    } else {
        out += " + " + term;
    }
    return out;
}

}  // namespace

std::string FreeElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        std::string t;
        if (w.empty()) {
            t = coeff_prefix(c, false);
        } else {
            t = coeff_prefix(c, true) + word_str(w);
        }
        join_term(out, t);
    }
    return out;
}

void TensorSquareElement::add_term(const Word& left, const Word& right, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(left, right);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorSquareElement& TensorSquareElement::operator+=(const TensorSquareElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorSquareElement& TensorSquareElement::operator-=(const TensorSquareElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

std::string TensorSquareElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        std::string t = coeff_prefix(c, true);
        if (t == "-") t = "-(";
        else t += "(";
        t += word_str(k.first) + ") (x) (" + word_str(k.second) + ")";
        join_term(out, t);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dense tensor-power machinery.

std::size_t tensor_dim(int d, int n) {
    std::size_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > (std::size_t(1) << 40) / static_cast<std::size_t>(d))
            throw std::invalid_argument("tensor power too large");
        r *= static_cast<std::size_t>(d);
    }
    return r;
}

std::size_t word_to_index(int d, const Word& w) {
    std::size_t idx = 0;
    for (int letter : w) idx = idx * static_cast<std::size_t>(d) + (letter - 1);
    return idx;
}

Word index_to_word(int d, int n, std::size_t idx) {
    Word w(n);
    for (int i = n - 1; i >= 0; --i) {
        w[i] = static_cast<int>(idx % d) + 1;
        idx /= static_cast<std::size_t>(d);
    }
    return w;
}

FreeElement tensor_to_element(int d, int n, const TensorVec& v) {
    FreeElement e(d);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) e.add_term(index_to_word(d, n, i), v[i]);
    return e;
}

TensorVec element_to_tensor(int d, int n, const FreeElement& e) {
    TensorVec v(tensor_dim(d, n));
    for (const auto& [w, c] : e.terms()) {
        if (static_cast<int>(w.size()) != n)
            throw std::invalid_argument("element is not homogeneous of the requested degree");
        v[word_to_index(d, w)] += c;
    }
    return v;
}

TensorVec apply_sigma(const BraidedVectorSpace& space, int n, int i, const TensorVec& v) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("sigma index out of range");
    const int d = space.dim();
    const std::size_t tail = tensor_dim(d, n - i - 1);
    const std::size_t pair_stride = static_cast<std::size_t>(d) * d * tail;
    TensorVec out(v.size());
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (v[idx].is_zero()) continue;
        const std::size_t head = idx / pair_stride;
        const std::size_t rem = idx % pair_stride;
        const int a = static_cast<int>(rem / (d * tail)) + 1;
        const int b = static_cast<int>((rem / tail) % d) + 1;
        const std::size_t t = rem % tail;
        for (int k = 1; k <= d; ++k)
            for (int l = 1; l <= d; ++l) {
                const Scalar& co = space.coeff(a, b, k, l);
                if (co.is_zero()) continue;
                std::size_t nidx = head * pair_stride +
                                   static_cast<std::size_t>(k - 1) * d * tail +
                                   static_cast<std::size_t>(l - 1) * tail + t;
                out[nidx] += v[idx] * co;
            }
    }
    return out;
}

TensorVec apply_braid_word(const BraidedVectorSpace& space, int n, std::span<const int> word,
                           TensorVec v) {
    for (std::size_t i = word.size(); i-- > 0;) v = apply_sigma(space, n, word[i], v);
    return v;
}

std::vector<int> reduced_word(std::vector<int> perm) {
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
            if (perm[i] > perm[i + 1]) {
                std::swap(perm[i], perm[i + 1]);
                word.push_back(static_cast<int>(i) + 1);
                moved = true;
            }
        }
    }
    return word;
}

TensorVec braid_word_action(const BraidedVectorSpace& space, int n, const std::vector<int>& perm,
                            const TensorVec& v) {
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation length does not match tensor degree");
    return apply_braid_word(space, n, reduced_word(perm), v);
}

std::vector<Matrix> symmetrizer_matrices(const BraidedVectorSpace& space, int n_max) {
    const int d = space.dim();
    std::vector<Matrix> out;
    out.push_back(Matrix::identity(1));
    for (int n = 1; n <= n_max; ++n) {
        const std::size_t dn = tensor_dim(d, n);
        const std::size_t dprev = dn / static_cast<std::size_t>(d);
        const Matrix& prev = out.back();
        Matrix s(dn, dn);
        for (std::size_t c = 0; c < dn; ++c) {
            TensorVec basis(dn);
            basis[c] = Scalar(1);
            TensorVec acc = basis;  // identity coset representative
            for (int j = n - 1; j >= 1; --j) {
                TensorVec t = basis;
                for (int k = j; k <= n - 1; ++k) t = apply_sigma(space, n, k, t);
                for (std::size_t r = 0; r < dn; ++r)
                    if (!t[r].is_zero()) acc[r] += t[r];
            }
            // column of (S_{n-1} (x) id) * acc
            for (std::size_t r = 0; r < dn; ++r) {
                if (acc[r].is_zero()) continue;
                const std::size_t r1 = r / static_cast<std::size_t>(d);
                const std::size_t a = r % static_cast<std::size_t>(d);
                for (std::size_t k = 0; k < dprev; ++k) {
                    const Scalar& pv = prev.at(k, r1);
                    if (pv.is_zero()) continue;
                    s.at(k * d + a, c) += pv * acc[r];
                }
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

Matrix symmetrizer_matrix(const BraidedVectorSpace& space, int n) {
    if (n < 0) throw std::invalid_argument("negative tensor degree");
    return symmetrizer_matrices(space, n).back();
}

namespace {

// Braids the first m letters of v past the last n letters (the
// categorical braiding V^m (x) V^n -> V^n (x) V^m built from the hexagon).
TensorVec block_braid(const BraidedVectorSpace& space, int m, int n, TensorVec v) {
    for (int start = m; start >= 1; --start)
        for (int k = start; k <= start + n - 1; ++k) v = apply_sigma(space, m + n, k, v);
    return v;
}

}  // namespace

TensorSquareElement braided_tensor_multiply(const BraidedVectorSpace& space,
                                            const TensorSquareElement& a,
                                            const TensorSquareElement& b) {
    const int d = space.dim();
    TensorSquareElement out(d);
    for (const auto& [ka, ca] : a.terms()) {
        const Word& u = ka.first;
        const Word& v = ka.second;
        for (const auto& [kb, cb] : b.terms()) {
            const Word& u2 = kb.first;
            const Word& v2 = kb.second;
            const Scalar c = ca * cb;
            const int m = static_cast<int>(v.size());
            const int n = static_cast<int>(u2.size());
            if (m == 0 || n == 0) {
                Word left = u;
                left.insert(left.end(), u2.begin(), u2.end());
                Word right = v;
                right.insert(right.end(), v2.begin(), v2.end());
                out.add_term(left, right, c);
                continue;
            }
            Word mid = v;
            mid.insert(mid.end(), u2.begin(), u2.end());
            TensorVec t(tensor_dim(d, m + n));
            t[word_to_index(d, mid)] = Scalar(1);
            t = block_braid(space, m, n, std::move(t));
            for (std::size_t idx = 0; idx < t.size(); ++idx) {
                if (t[idx].is_zero()) continue;
                Word w = index_to_word(d, m + n, idx);
                Word left = u;
                left.insert(left.end(), w.begin(), w.begin() + n);
                Word right(w.begin() + n, w.end());
                right.insert(right.end(), v2.begin(), v2.end());
                out.add_term(left, right, c * t[idx]);
            }
        }
    }
    return out;
}

TensorSquareElement braided_coproduct(const BraidedVectorSpace& space, const FreeElement& e) {
    const int d = space.dim();
    TensorSquareElement out(d);
    for (const auto& [w, c] : e.terms()) {
        TensorSquareElement cur(d);
        cur.add_term({}, {}, Scalar(1));
        for (int letter : w) {
            TensorSquareElement delta_x(d);
            delta_x.add_term(Word{letter}, {}, Scalar(1));
            delta_x.add_term({}, Word{letter}, Scalar(1));
            cur = braided_tensor_multiply(space, cur, delta_x);
        }
        for (const auto& [k, cc] : cur.terms()) out.add_term(k.first, k.second, c * cc);
    }
    return out;
}

TensorSquareElement primitivity_defect(const BraidedVectorSpace& space, const FreeElement& e) {
    int deg = e.homogeneous_degree();
    if (e.is_zero() || deg < 1)
        throw std::invalid_argument("primitivity defect requires homogeneous degree >= 1");
    TensorSquareElement defect = braided_coproduct(space, e);
    for (const auto& [w, c] : e.terms()) {
        defect.add_term(w, {}, -c);
        defect.add_term({}, w, -c);
    }
    return defect;
}

// ---------------------------------------------------------------------------
// Element parser.

namespace {

struct ElementParser {
    std::string_view text;
    std::size_t pos = 0;
    int dim;
    FieldPtr field;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("element parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    long parse_index() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected generator index");
        return std::stol(std::string(text.substr(start, pos - start)));
    }

    // A coefficient: parenthesized scalar expression or plain rational.
    Scalar parse_coeff() {
        skip_ws();
        if (pos < text.size() && text[pos] == '(') {
            int depth = 0;
            std::size_t start = pos;
            for (; pos < text.size(); ++pos) {
                if (text[pos] == '(') ++depth;
                if (text[pos] == ')' && --depth == 0) {
                    ++pos;
                    return parse_scalar(text.substr(start + 1, pos - start - 2), field);
                }
            }
            fail("unbalanced parenthesis");
        }
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        if (pos == start) fail("expected coefficient");
        return parse_scalar(text.substr(start, pos - start), field);
    }

    // One additive term. Returns (coefficient, word).
    std::pair<Scalar, Word> parse_term() {
        Scalar c(1);
        char ch = peek();
        if (ch == '(' || std::isdigit(static_cast<unsigned char>(ch))) {
            c = parse_coeff();
            skip_ws();
            if (pos < text.size() && text[pos] == '*') ++pos;
            else return {c, {}};  // constant term
        }
        Word w;
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == 'x') {
                ++pos;
                long i = parse_index();
                if (i < 1 || i > dim) fail("generator index out of range");
                w.push_back(static_cast<int>(i));
            } else {
                break;
            }
        }
        if (w.empty()) fail("expected a word after coefficient");
        return {c, w};
    }

    FreeElement run() {
        FreeElement e(dim);
        bool neg = false;
        if (peek() == '-') {
            ++pos;
            neg = true;
        } else if (peek() == '+') {
            ++pos;
        }
        for (;;) {
            auto [c, w] = parse_term();
            e.add_term(w, neg ? -c : c);
            char ch = peek();
            if (ch == '+') {
                ++pos;
                neg = false;
            } else if (ch == '-') {
                ++pos;
                neg = true;
            } else if (ch == '\0') {
                // lift every coefficient into the session field
                return e;
            } else {
                fail("unexpected input");
            }
        }
    }
};

}  // namespace

FreeElement parse_free_element(std::string_view text, int dim, const FieldPtr& field) {
    ElementParser p{text, 0, dim, field};
    return p.run();
}

}  // namespace planelift
