#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "planelift/braided.hpp"

namespace planelift {

/// A word in the generators x_1..x_d, stored as 1-based letter indices.
using Word = std::vector<int>;

/// Degree-then-lexicographic word order (the canonical term order).
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

std::string word_str(const Word& w);

/// An exact linear combination of words: an element of the free algebra
/// T(V). Zero coefficients are never stored; terms are kept in the
/// canonical degree-lex order.
class FreeElement {
public:
    FreeElement() : dim_(0) {}
    explicit FreeElement(int dim) : dim_(dim) {}

    static FreeElement generator(int dim, int i);
    static FreeElement from_word(int dim, Word w, Scalar c = Scalar(1));
    static FreeElement constant(int dim, Scalar c);

    int dim() const { return dim_; }
    const std::map<Word, Scalar, WordLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const Scalar& c);
    Scalar coeff(const Word& w) const;

    FreeElement operator-() const;
    FreeElement& operator+=(const FreeElement& o);
    FreeElement& operator-=(const FreeElement& o);
    friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
    friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
    FreeElement operator*(const FreeElement& o) const;  // concatenation product
    FreeElement scaled(const Scalar& c) const;

    friend bool operator==(const FreeElement& a, const FreeElement& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const FreeElement& a, const FreeElement& b) { return !(a == b); }

    // Degree if homogeneous, otherwise -1. Zero counts as homogeneous of
    // degree -1 as well; callers that care check is_zero first.
    int homogeneous_degree() const;

    std::string str() const;

private:
    int dim_;
    std::map<Word, Scalar, WordLess> terms_;
};

/// Parses the element grammar produced by FreeElement::str:
/// sums of terms `c*x1 x2 ...`, coefficient omitted when +-1,
/// parenthesized when not a plain rational.
FreeElement parse_free_element(std::string_view text, int dim, const FieldPtr& field);

struct WordPairLess {
    bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
        WordLess less;
        if (less(a.first, b.first)) return true;
        if (less(b.first, a.first)) return false;
        return less(a.second, b.second);
    }
};

/// An element of T(V) (x) T(V) with word-pair keys.
class TensorSquareElement {
public:
    TensorSquareElement() : dim_(0) {}
    explicit TensorSquareElement(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const std::map<std::pair<Word, Word>, Scalar, WordPairLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& left, const Word& right, const Scalar& c);

    TensorSquareElement& operator+=(const TensorSquareElement& o);
    TensorSquareElement& operator-=(const TensorSquareElement& o);
    friend bool operator==(const TensorSquareElement& a, const TensorSquareElement& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int dim_;
    std::map<std::pair<Word, Word>, Scalar, WordPairLess> terms_;
};

/// Dense coordinates of an element of V^(x)n.
using TensorVec = std::vector<Scalar>;

std::size_t tensor_dim(int d, int n);
std::size_t word_to_index(int d, const Word& w);
Word index_to_word(int d, int n, std::size_t idx);
FreeElement tensor_to_element(int d, int n, const TensorVec& v);
TensorVec element_to_tensor(int d, int n, const FreeElement& e);

/// Applies sigma_i = id^(i-1) (x) c (x) id^(n-i-1) to v, 1 <= i <= n-1.
TensorVec apply_sigma(const BraidedVectorSpace& space, int n, int i, const TensorVec& v);

/// Applies the braid word sigma_{w[0]} o sigma_{w[1]} o ... (rightmost
/// letter acts first, matching the group-product reading of the word).
TensorVec apply_braid_word(const BraidedVectorSpace& space, int n, std::span<const int> word,
                           TensorVec v);

/// A reduced word (as adjacent transposition indices) for the permutation
/// given in one-line notation (perm[i] = image of position i+1, 1-based
/// values). The returned word has length = number of inversions.
std::vector<int> reduced_word(std::vector<int> perm);

/// The Matsumoto lift of a permutation acting on V^(x)n: lifts any
/// reduced word; the result is word-independent because the braiding
/// satisfies the braid equation.
TensorVec braid_word_action(const BraidedVectorSpace& space, int n, const std::vector<int>& perm,
                            const TensorVec& v);

/// The quantum symmetrizer S_n as a d^n x d^n matrix, computed by the
/// coset factorization S_n = (S_{n-1} (x) id) (id + sigma_{n-1} +
/// sigma_{n-1}sigma_{n-2} + ... + sigma_{n-1}...sigma_1).
Matrix symmetrizer_matrix(const BraidedVectorSpace& space, int n);

/// All symmetrizers S_0..S_N in one pass (shares the recursion).
std::vector<Matrix> symmetrizer_matrices(const BraidedVectorSpace& space, int n_max);

/// Braided tensor-square product: (a (x) b)(a' (x) b') =
/// a c(b (x) a')_1 (x) c(b (x) a')_2 b', with c the block braiding.
TensorSquareElement braided_tensor_multiply(const BraidedVectorSpace& space,
                                            const TensorSquareElement& a,
                                            const TensorSquareElement& b);

/// The braided coproduct of T(V): the algebra map to the braided tensor
/// square with all generators primitive.
TensorSquareElement braided_coproduct(const BraidedVectorSpace& space, const FreeElement& e);

/// Delta(e) - e (x) 1 - 1 (x) e for homogeneous e of degree >= 1;
/// zero iff e is primitive in T(V). Throws on inhomogeneous input.
TensorSquareElement primitivity_defect(const BraidedVectorSpace& space, const FreeElement& e);

}  // namespace planelift
