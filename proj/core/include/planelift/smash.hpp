#pragma once

#include <map>
#include <string>

#include "planelift/freealg.hpp"
#include "planelift/ydcat.hpp"

namespace planelift {

/// The data needed to commute group letters past x-letters in
/// T(V)#kG for a 2-dimensional module:
///   h x1 = chi(h) x1 h,   h x2 = (chi(h) x2 + eta(h) x1) h.
/// A trivial context (no generators) makes SmashElement plain T(V).
struct SmashContext {
    FGAbelianGroup group;
    Character chi;
    Derivation eta;
    int dim = 2;

    static SmashContext trivial(int dim = 2);
    static SmashContext from_triple(const YDTriple& t);

    Scalar chi_of(const GroupElement& h) const { return evaluate(group, chi, h); }
    Scalar eta_of(const GroupElement& h) const { return evaluate(group, chi, eta, h); }

    // h . e as an algebra action on the free algebra.
    FreeElement act(const GroupElement& h, const FreeElement& e) const;
};

struct SmashKey {
    Word word;
    GroupElement grp;

    friend bool operator==(const SmashKey& a, const SmashKey& b) {
        return a.word == b.word && a.grp == b.grp;
    }
};

struct SmashKeyLess {
    bool operator()(const SmashKey& a, const SmashKey& b) const {
        WordLess less;
        if (less(a.word, b.word)) return true;
        if (less(b.word, a.word)) return false;
        return a.grp < b.grp;
    }
};

/// An element of T(V)#kG in canonical form: every term is an x-word
/// followed by one group letter (group letters are pushed right on
/// construction of products).
class SmashElement {
public:
    SmashElement() = default;

    static SmashElement from_free(const FGAbelianGroup& g, const FreeElement& e);
    static SmashElement monomial(const Word& w, const GroupElement& h, Scalar c = Scalar(1));
    static SmashElement group_like(const FGAbelianGroup& g, const GroupElement& h,
                                   Scalar c = Scalar(1));

    const std::map<SmashKey, Scalar, SmashKeyLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const GroupElement& h, const Scalar& c);
    Scalar coeff(const Word& w, const GroupElement& h) const;

    SmashElement operator-() const;
    SmashElement& operator+=(const SmashElement& o);
    SmashElement& operator-=(const SmashElement& o);
    friend SmashElement operator+(SmashElement a, const SmashElement& b) { return a += b; }
    friend SmashElement operator-(SmashElement a, const SmashElement& b) { return a -= b; }
    SmashElement scaled(const Scalar& c) const;

    friend bool operator==(const SmashElement& a, const SmashElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SmashElement& a, const SmashElement& b) { return !(a == b); }

    // Largest x-word length appearing (the filtration degree); -1 if zero.
    int x_degree() const;
    // Drops the group tags (sets every group letter to 1); the image in
    // T(V) under the group-trivializing map.
    FreeElement forget_group(int dim = 2) const;

    std::string str(const FGAbelianGroup& g) const;

private:
    std::map<SmashKey, Scalar, SmashKeyLess> terms_;
};

/// Product in T(V)#kG, group letters restored to the right.
SmashElement smash_multiply(const SmashContext& ctx, const SmashElement& a,
                            const SmashElement& b);
SmashElement smash_multiply(const YDTriple& t, const SmashElement& a, const SmashElement& b);

struct SmashPairLess {
    bool operator()(const std::pair<SmashKey, SmashKey>& a,
                    const std::pair<SmashKey, SmashKey>& b) const {
        SmashKeyLess less;
        if (less(a.first, b.first)) return true;
        if (less(b.first, a.first)) return false;
        return less(a.second, b.second);
    }
};

/// An element of (T(V)#kG) (x) (T(V)#kG); the ordinary tensor-product
/// algebra (bosonization makes the smash product an ordinary Hopf
/// algebra, so no braiding enters here).
class SmashTensorSquare {
public:
    const std::map<std::pair<SmashKey, SmashKey>, Scalar, SmashPairLess>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const SmashKey& l, const SmashKey& r, const Scalar& c);

    SmashTensorSquare& operator+=(const SmashTensorSquare& o);
    SmashTensorSquare& operator-=(const SmashTensorSquare& o);
    friend bool operator==(const SmashTensorSquare& a, const SmashTensorSquare& b) {
        return a.terms_ == b.terms_;
    }

    std::string str(const FGAbelianGroup& g) const;

private:
    std::map<std::pair<SmashKey, SmashKey>, Scalar, SmashPairLess> terms_;
};

SmashTensorSquare smash_tensor(const SmashElement& a, const SmashElement& b);
SmashTensorSquare tensor_multiply(const SmashContext& ctx, const SmashTensorSquare& a,
                                  const SmashTensorSquare& b);

/// The bosonized coproduct: Delta(x_i) = x_i (x) 1 + g (x) x_i on the
/// generators, Delta(h) = h (x) h on group letters, extended as an
/// algebra map.
SmashTensorSquare smash_coproduct(const YDTriple& t, const SmashElement& e);

/// Counit: kills x-letters, sends group letters to 1.
Scalar counit(const SmashElement& e);

/// Parses sums of products of factors `xK`, `gK` / `g` (optionally with
/// `^exponent`), and scalar coefficients; factors multiply in the smash
/// product, so non-canonical input like "g x1" is accepted.
SmashElement parse_smash_element(std::string_view text, const SmashContext& ctx,
                                 const FieldPtr& field);

}  // namespace planelift
