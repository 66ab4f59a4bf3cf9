#include "planelift/ydcat.hpp"

#include <functional>
#include <stdexcept>

namespace planelift {

namespace {

long long mod_reduce(long long v, long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

void check_sizes(const FGAbelianGroup& g, const GroupElement& a) {
    if (static_cast<int>(a.free.size()) != g.free_rank ||
        a.tors.size() != g.torsion.size())
        throw std::invalid_argument("group element shape does not match group");
}

}  // namespace

FGAbelianGroup::FGAbelianGroup(int rank, std::vector<long> torsion_orders)
    : free_rank(rank), torsion(std::move(torsion_orders)) {
    if (rank < 0) throw std::invalid_argument("negative free rank");
    for (long m : torsion)
        if (m < 2) throw std::invalid_argument("torsion orders must be at least 2");
}

GroupElement group_identity(const FGAbelianGroup& g) {
    return {std::vector<long long>(g.free_rank, 0),
            std::vector<long long>(g.torsion.size(), 0)};
}

GroupElement group_generator(const FGAbelianGroup& g, int index) {
    GroupElement e = group_identity(g);
    if (index < 0 || index >= g.generator_count())
        throw std::invalid_argument("generator index out of range");
    if (index < g.free_rank) e.free[index] = 1;
    else e.tors[index - g.free_rank] = 1 % g.torsion[index - g.free_rank];
    return e;
}

GroupElement group_mul(const FGAbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    check_sizes(g, a);
    check_sizes(g, b);
    GroupElement r = a;
    for (int i = 0; i < g.free_rank; ++i) r.free[i] += b.free[i];
    for (std::size_t i = 0; i < g.torsion.size(); ++i)
        r.tors[i] = mod_reduce(r.tors[i] + b.tors[i], g.torsion[i]);
    return r;
}

GroupElement group_inverse(const FGAbelianGroup& g, const GroupElement& a) {
    check_sizes(g, a);
    GroupElement r = a;
    for (auto& v : r.free) v = -v;
    for (std::size_t i = 0; i < g.torsion.size(); ++i) r.tors[i] = mod_reduce(-r.tors[i], g.torsion[i]);
    return r;
}

GroupElement group_pow(const FGAbelianGroup& g, const GroupElement& a, long long e) {
    check_sizes(g, a);
    GroupElement r = a;
    for (auto& v : r.free) v *= e;
    for (std::size_t i = 0; i < g.torsion.size(); ++i)
        r.tors[i] = mod_reduce(r.tors[i] * e, g.torsion[i]);
    return r;
}

GroupElement group_element(const FGAbelianGroup& g, const std::vector<long long>& exponents) {
    if (static_cast<int>(exponents.size()) != g.generator_count())
        throw std::invalid_argument("exponent vector length does not match generator count");
    GroupElement e = group_identity(g);
    for (int i = 0; i < g.free_rank; ++i) e.free[i] = exponents[i];
    for (std::size_t i = 0; i < g.torsion.size(); ++i)
        e.tors[i] = mod_reduce(exponents[g.free_rank + i], g.torsion[i]);
    return e;
}

bool is_identity(const GroupElement& a) {
    for (auto v : a.free)
        if (v != 0) return false;
    for (auto v : a.tors)
        if (v != 0) return false;
    return true;
}

bool has_infinite_order(const GroupElement& a) {
    for (auto v : a.free)
        if (v != 0) return true;
    return false;
}

std::string group_element_str(const FGAbelianGroup& g, const GroupElement& a) {
    if (is_identity(a)) return "1";
    std::string out;
    bool single = g.generator_count() == 1;
    auto emit = [&](int index, long long e) {
        if (e == 0) return;
        if (!out.empty()) out += ' ';
        out += single ? "g" : "g" + std::to_string(index + 1);
        if (e != 1) out += "^" + std::to_string(e);
    };
    for (int i = 0; i < g.free_rank; ++i) emit(i, a.free[i]);
    for (std::size_t i = 0; i < g.torsion.size(); ++i) emit(g.free_rank + static_cast<int>(i), a.tors[i]);
    return out;
}

Scalar evaluate(const FGAbelianGroup& g, const Character& chi, const GroupElement& h) {
    check_sizes(g, h);
    if (static_cast<int>(chi.values.size()) != g.generator_count())
        throw std::invalid_argument("character value count does not match group");
    Scalar r(1);
    for (int i = 0; i < g.free_rank; ++i) r *= chi.values[i].pow(h.free[i]);
    for (std::size_t i = 0; i < g.torsion.size(); ++i)
        r *= chi.values[g.free_rank + i].pow(h.tors[i]);
    return r;
}

Scalar evaluate(const FGAbelianGroup& g, const Character& chi, const Derivation& eta,
                const GroupElement& h) {
    check_sizes(g, h);
    if (static_cast<int>(eta.values.size()) != g.generator_count())
        throw std::invalid_argument("derivation value count does not match group");
    // Fold the derivation rule eta(uv) = chi(u) eta(v) + eta(u) chi(v)
    // over the generator factorization, using
    // eta(g^a) = a chi(g)^{a-1} eta(g)  for all integers a.
    Scalar chi_acc(1), eta_acc(0);
    auto absorb = [&](const Scalar& cv, const Scalar& ev, long long a) {
        Scalar chi_pow = cv.pow(a);
        Scalar eta_pow = ev.is_zero() ? Scalar(0) : cv.pow(a - 1) * Scalar(a) * ev;
        eta_acc = chi_acc * eta_pow + eta_acc * chi_pow;
        chi_acc *= chi_pow;
    };
    for (int i = 0; i < g.free_rank; ++i)
        absorb(chi.values[i], eta.values[i], h.free[i]);
    for (std::size_t i = 0; i < g.torsion.size(); ++i)
        absorb(chi.values[g.free_rank + i], eta.values[g.free_rank + i], h.tors[i]);
    return eta_acc;
}

std::vector<std::string> validate_yd_triple(const YDTriple& t) {
    std::vector<std::string> out;
    const auto& g = t.group;
    if (static_cast<int>(t.chi.values.size()) != g.generator_count() ||
        static_cast<int>(t.eta.values.size()) != g.generator_count()) {
        out.push_back("chi/eta value counts do not match the group generators");
        return out;
    }
    for (int i = 0; i < g.generator_count(); ++i)
        if (t.chi.values[i].is_zero())
            out.push_back("chi vanishes on generator " + std::to_string(i + 1));
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        const Scalar& v = t.chi.values[g.free_rank + i];
        if (!v.is_zero() && !(v.pow(g.torsion[i]) == Scalar(1)))
            out.push_back("chi on torsion generator " + std::to_string(g.free_rank + i + 1) +
                          " is not an order-" + std::to_string(g.torsion[i]) + " root of unity");
        if (!t.eta.values[g.free_rank + i].is_zero())
            out.push_back("derivation must vanish on torsion generator " +
                          std::to_string(g.free_rank + i + 1));
    }
    if (!out.empty()) return out;

    Scalar eps = t.chi_of(t.g);
    if (!(eps == Scalar(1) || eps == Scalar(-1)))
        out.push_back("chi(g) = " + eps.str() + " is not +1 or -1 (not (super) Jordanian)");
    if (!(t.eta_of(t.g) == Scalar(1)))
        out.push_back("eta(g) = " + t.eta_of(t.g).str() + " is not normalized to 1");
    if (!has_infinite_order(t.g))
        out.push_back("g has finite order (g^2 . x2 = x2 + 2 eps x1 forbids this)");
    // For abelian groups the module-comodule compatibilities reduce to
    // centrality of g, which holds automatically.
    return out;
}

BraidedVectorSpace realize_braiding(const YDTriple& t, bool permissive) {
    auto violations = validate_yd_triple(t);
    if (!violations.empty() && !permissive)
        throw std::invalid_argument("invalid YD-triple: " + violations.front());
    const Scalar eps = t.chi_of(t.g);
    const Scalar etag = t.eta_of(t.g);
    // c(x_i (x) x_j) = (g . x_j) (x) x_i
    BraidedVectorSpace v(2, std::vector<Scalar>(16));
    for (int i = 1; i <= 2; ++i) {
        v.coeff(i, 1, 1, i) = eps;
        v.coeff(i, 2, 2, i) = eps;
        v.coeff(i, 2, 1, i) = etag;
    }
    return v;
}

FreeElement act(const YDTriple& t, const GroupElement& h, const FreeElement& e) {
    if (e.dim() != 2) throw std::invalid_argument("group action defined on dimension-2 modules");
    const Scalar c = t.chi_of(h);
    const Scalar d = t.eta_of(h);
    FreeElement out(2);
    for (const auto& [w, co] : e.terms()) {
        // expand prod over letters of (h . x_letter)
        std::vector<std::pair<Word, Scalar>> partial{{Word{}, co}};
        for (int letter : w) {
            std::vector<std::pair<Word, Scalar>> next;
            for (auto& [pw, pc] : partial) {
                Word w1 = pw;
                w1.push_back(letter);
                next.emplace_back(std::move(w1), pc * c);
                if (letter == 2 && !d.is_zero()) {
                    Word w2 = pw;
                    w2.push_back(1);
                    next.emplace_back(std::move(w2), pc * d);
                }
            }
            partial = std::move(next);
        }
        for (auto& [pw, pc] : partial) out.add_term(pw, pc);
    }
    return out;
}

Dim2Classification classify_dim2(const Matrix& g_action, const GroupElement& degree,
                                 const FGAbelianGroup& group) {
    if (g_action.rows() != 2 || g_action.cols() != 2)
        throw std::invalid_argument("classification requires a 2x2 action matrix");
    (void)group;
    const Scalar& a = g_action.at(0, 0);
    const Scalar& b = g_action.at(0, 1);
    const Scalar& c = g_action.at(1, 0);
    const Scalar& d = g_action.at(1, 1);
    Scalar det = a * d - b * c;
    if (det.is_zero()) throw std::invalid_argument("action matrix is not invertible");
    Scalar tr = a + d;
    Scalar disc = tr * tr - Scalar(4) * det;

    Dim2Classification out;
    if (!disc.is_zero()) {
        // distinct eigenvalues over the closure
        out.diagonal = true;
        return out;
    }
    Scalar alpha = tr / Scalar(2);
    Matrix nil = g_action;  // A - alpha
    nil.at(0, 0) -= alpha;
    nil.at(1, 1) -= alpha;
    bool nil_zero = nil.at(0, 0).is_zero() && nil.at(0, 1).is_zero() &&
                    nil.at(1, 0).is_zero() && nil.at(1, 1).is_zero();
    if (nil_zero) {
        out.diagonal = true;  // scalar action
        return out;
    }
    // x2 = first basis vector not killed by (A - alpha); x1 = (A - alpha) x2.
    // Then A x2 = alpha x2 + x1 and A x1 = alpha x1, so eta(g) = 1 without
    // touching x2 (only x1 absorbs the normalization).
    std::vector<Scalar> x2;
    if (!nil.at(0, 0).is_zero() || !nil.at(1, 0).is_zero()) x2 = {Scalar(1), Scalar(0)};
    else x2 = {Scalar(0), Scalar(1)};
    std::vector<Scalar> x1 = {nil.at(0, 0) * x2[0] + nil.at(0, 1) * x2[1],
                              nil.at(1, 0) * x2[0] + nil.at(1, 1) * x2[1]};

    // The triple lives over the infinite cyclic group generated by the
    // degree element.
    if (!has_infinite_order(degree) && group.generator_count() > 0)
        throw std::invalid_argument(
            "degree element has finite order; no block-type YD-triple exists");
    YDTriple t;
    t.group = FGAbelianGroup(1, {});
    t.g = group_generator(t.group, 0);
    t.chi.values = {alpha};
    t.eta.values = {Scalar(1)};
    out.triple = std::move(t);
    out.basis_x1 = std::move(x1);
    out.basis_x2 = std::move(x2);
    return out;
}

GroupElement apply_hom(const FGAbelianGroup& g, const GroupHom& f, const GroupElement& a) {
    check_sizes(g, a);
    if (static_cast<int>(f.images.size()) != g.generator_count())
        throw std::invalid_argument("homomorphism image count does not match group");
    GroupElement r = group_identity(g);
    for (int i = 0; i < g.free_rank; ++i)
        r = group_mul(g, r, group_pow(g, f.images[i], a.free[i]));
    for (std::size_t i = 0; i < g.torsion.size(); ++i)
        r = group_mul(g, r, group_pow(g, f.images[g.free_rank + i], a.tors[i]));
    return r;
}

GroupHom compose(const FGAbelianGroup& g, const GroupHom& f, const GroupHom& h) {
    GroupHom r;
    for (const auto& img : h.images) r.images.push_back(apply_hom(g, f, img));
    return r;
}

GroupHom hom_from_matrix(const FGAbelianGroup& g, const std::vector<std::vector<long long>>& cols) {
    GroupHom f;
    for (const auto& col : cols) f.images.push_back(group_element(g, col));
    if (static_cast<int>(f.images.size()) != g.generator_count())
        throw std::invalid_argument("automorphism matrix has wrong number of columns");
    return f;
}

namespace {

// Determinant of an integer matrix (exact, fraction-free expansion).
mpz_class int_det(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class det = 1, sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                if (k > 0) m[i][j] /= prev;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// All elements of the torsion subgroup, in lexicographic order.
std::vector<std::vector<long long>> torsion_elements(const FGAbelianGroup& g, std::size_t cap) {
    std::vector<std::vector<long long>> out{{}};
    for (long m : g.torsion) {
        std::vector<std::vector<long long>> next;
        for (const auto& t : out)
            for (long long v = 0; v < m; ++v) {
                auto e = t;
                e.push_back(v);
                next.push_back(std::move(e));
                if (next.size() > cap)
                    throw std::invalid_argument("torsion subgroup too large to enumerate");
            }
        out = std::move(next);
    }
    return out;
}

GroupElement torsion_only(const FGAbelianGroup& g, const std::vector<long long>& tors) {
    GroupElement e = group_identity(g);
    e.tors.assign(tors.begin(), tors.end());
    return e;
}

}  // namespace

bool is_automorphism(const FGAbelianGroup& g, const GroupHom& f, GroupHom* inverse) {
    if (static_cast<int>(f.images.size()) != g.generator_count()) return false;
    // Torsion generators must land in the torsion subgroup with compatible order.
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        const GroupElement& img = f.images[g.free_rank + i];
        if (has_infinite_order(img)) return false;
        if (!is_identity(group_pow(g, img, g.torsion[i]))) return false;
    }
    // Free block must be unimodular.
    std::vector<std::vector<mpz_class>> fb(g.free_rank, std::vector<mpz_class>(g.free_rank));
    for (int j = 0; j < g.free_rank; ++j)
        for (int i = 0; i < g.free_rank; ++i) fb[i][j] = static_cast<long>(f.images[j].free[i]);
    mpz_class det = int_det(fb);
    if (det != 1 && det != -1) return false;

    // Injectivity on torsion: only the identity torsion tuple maps to 1.
    const std::size_t cap = 200000;
    auto tors = g.torsion.empty() ? std::vector<std::vector<long long>>{{}}
                                  : torsion_elements(g, cap);
    if (!g.torsion.empty()) {
        int kernel_size = 0;
        for (const auto& t : tors) {
            GroupElement e = torsion_only(g, t);
            GroupElement img = group_identity(g);
            for (std::size_t i = 0; i < g.torsion.size(); ++i)
                img = group_mul(g, img, group_pow(g, f.images[g.free_rank + i], t[i]));
            if (is_identity(img)) ++kernel_size;
            (void)e;
        }
        if (kernel_size != 1) return false;
    }

    if (!inverse) return true;

    // Invert the free block exactly (det = +-1 keeps it integral).
    std::vector<std::vector<mpz_class>> inv(g.free_rank, std::vector<mpz_class>(g.free_rank));
    if (g.free_rank > 0) {
        // adjugate / det via cofactors
        auto minor_det = [&](int r, int c) {
            std::vector<std::vector<mpz_class>> m;
            for (int i = 0; i < g.free_rank; ++i) {
                if (i == r) continue;
                std::vector<mpz_class> row;
                for (int j = 0; j < g.free_rank; ++j)
                    if (j != c) row.push_back(fb[i][j]);
                m.push_back(std::move(row));
            }
            return int_det(std::move(m));
        };
        for (int i = 0; i < g.free_rank; ++i)
            for (int j = 0; j < g.free_rank; ++j) {
                mpz_class cof = minor_det(j, i);
                if ((i + j) % 2 == 1) cof = -cof;
                inv[i][j] = cof / det;
            }
    }

    GroupHom finv;
    finv.images.resize(g.generator_count(), group_identity(g));
    // Preimage of each generator: free part from the inverted block, then
    // a torsion correction found by exact search.
    for (int target = 0; target < g.generator_count(); ++target) {
        GroupElement want = group_generator(g, target);
        GroupElement base = group_identity(g);
        if (target < g.free_rank)
            for (int i = 0; i < g.free_rank; ++i) {
                if (!inv[i][target].fits_slong_p()) return false;
                base.free[i] = inv[i][target].get_si();
            }
        GroupElement partial = group_identity(g);
        for (int i = 0; i < g.free_rank; ++i)
            partial = group_mul(g, partial, group_pow(g, f.images[i], base.free[i]));
        bool found = false;
        for (const auto& t : tors) {
            GroupElement cand = base;
            cand.tors.assign(t.begin(), t.end());
            GroupElement img = partial;
            for (std::size_t i = 0; i < g.torsion.size(); ++i)
                img = group_mul(g, img, group_pow(g, f.images[g.free_rank + i], t[i]));
            if (img == want) {
                finv.images[target] = cand;
                found = true;
                break;
            }
        }
        if (!found) return false;  // not surjective
    }
    *inverse = std::move(finv);
    return true;
}

YDTriple transport_triple(const YDTriple& t, const GroupHom& f) {
    GroupHom finv;
    if (!is_automorphism(t.group, f, &finv))
        throw std::invalid_argument("map is not a group automorphism");
    YDTriple out;
    out.group = t.group;
    out.g = apply_hom(t.group, f, t.g);
    out.chi.values.reserve(t.group.generator_count());
    out.eta.values.reserve(t.group.generator_count());
    for (int i = 0; i < t.group.generator_count(); ++i) {
        out.chi.values.push_back(t.chi_of(finv.images[i]));
        out.eta.values.push_back(t.eta_of(finv.images[i]));
    }
    return out;
}

std::vector<GroupHom> enumerate_automorphisms(const FGAbelianGroup& g, long bound,
                                              bool* complete) {
    const std::size_t cap = 200000;
    auto tors = g.torsion.empty() ? std::vector<std::vector<long long>>{{}}
                                  : torsion_elements(g, cap);
    bool exact = g.free_rank <= 1;
    if (complete) *complete = exact;

    // Candidate images per free generator: free part entries in the
    // admissible range, any torsion tail.
    std::vector<std::vector<GroupElement>> choices;
    for (int i = 0; i < g.free_rank; ++i) {
        std::vector<GroupElement> c;
        std::vector<long long> frees(g.free_rank, 0);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == g.free_rank) {
                for (const auto& t : tors) {
                    GroupElement e = group_identity(g);
                    e.free = frees;
                    e.tors.assign(t.begin(), t.end());
                    c.push_back(std::move(e));
                }
                return;
            }
            long lo = exact ? -1 : -bound;
            long hi = exact ? 1 : bound;
            for (long v = lo; v <= hi; ++v) {
                frees[pos] = v;
                rec(pos + 1);
            }
            frees[pos] = 0;
        };
        rec(0);
        choices.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        std::vector<GroupElement> c;
        for (const auto& t : tors) {
            GroupElement e = torsion_only(g, t);
            if (!is_identity(group_pow(g, e, g.torsion[i]))) continue;
            c.push_back(std::move(e));
        }
        choices.push_back(std::move(c));
    }

    std::vector<GroupHom> out;
    GroupHom cur;
    cur.images.resize(g.generator_count(), group_identity(g));
    std::function<void(int)> rec = [&](int pos) {
        if (pos == g.generator_count()) {
            if (is_automorphism(g, cur)) out.push_back(cur);
            return;
        }
        for (const auto& img : choices[pos]) {
            cur.images[pos] = img;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace planelift
