#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planelift/rewrite.hpp"

namespace planelift {

enum class LiftCase { Jordanian, SuperJordanian };

std::string lift_case_str(LiftCase c);

/// The lifting U(D, lambda): the smash product T(V)#kG modulo the
/// deformed defining relations, presented as a completed rewriting
/// system. Jordanian case: one relation
///   x2 x1 - x1 x2 + 1/2 x1^2 = lambda (1 - g^2);
/// super Jordanian case: two relations
///   x1^2 = lambda (1 - g^2),
///   x2 x21 - x21 x2 - x1 x21 + 2 lambda x2 + lambda x1 g^2 = 0,
/// with x21 = x2 x1 - eps x1 x2. The deformation parameter must vanish
/// unless chi^2 is the trivial character.
struct LiftingPresentation {
    YDTriple triple;
    Scalar lambda;
    LiftCase kind;
    RewriteSystem rules;
    std::vector<SmashElement> relations;  // as oriented: lhs - rhs = 0

    const FGAbelianGroup& group() const { return triple.group; }
};

/// Whether lambda is admissible for the triple (lambda = 0 when chi^2 is
/// not the trivial character).
bool lambda_admissible(const YDTriple& t, const Scalar& lambda);

LiftingPresentation build_lifting(const YDTriple& t, const Scalar& lambda, int degree = 8);

struct HopfIdealReport {
    bool ok = true;
    std::string relation;      // name of the first failing relation
    SmashTensorSquare defect;  // the surviving terms
};

/// Verifies each defining relation e is (g^m, 1)-skew-primitive:
/// Delta(e) = e (x) 1 + g^m (x) e, exactly in T(V)#kG for the quadratic
/// relations, and with both tensor legs reduced modulo relation 1 for
/// the cubic super Jordanian relation.
HopfIdealReport hopf_ideal_check(const LiftingPresentation& p);

struct PbwReport {
    bool ok = true;
    bool rules_added = false;
    int first_bad_degree = -1;
    std::vector<long> counts;    // irreducible words per x-degree
    std::vector<long> expected;  // graded dimensions of the Nichols algebra
};

/// Flatness check to x-degree n: completion added no rules, and the
/// irreducible words are counted by the Nichols algebra's graded
/// dimensions (computed from symmetrizer ranks unless supplied).
PbwReport pbw_check(const LiftingPresentation& p, int n,
                    const std::vector<long>* expected_dims = nullptr);

struct OneDimRepReport {
    bool ok = true;
    std::string relation;  // first violated relation
    Scalar value;          // its nonzero evaluation
};

/// Evaluates the defining relations of the group-free fiber algebra
/// E(D, lambda) at x1 -> c1, x2 -> c2 (commuting scalars):
/// Jordanian  { 1/2 x1^2 - lambda },
/// super      { x1^2 - lambda,
///              x2 x21 - x21 x2 - x1 x21 + 2 lambda x2 }.
OneDimRepReport one_dim_rep(const LiftingPresentation& p, const Scalar& c1, const Scalar& c2);

struct ZeroDivisorReport {
    bool ok = true;
    SmashElement product;  // normal form of a b (zero when ok)
};

/// Remark-style zero divisor witness in the super Jordanian lifting:
/// a = sqrt_lambda (g - 1) + x1, b = sqrt_lambda (g + 1) + x1 multiply
/// to zero. Requires sqrt_lambda^2 = lambda.
ZeroDivisorReport zero_divisor_witness(const LiftingPresentation& p, const Scalar& sqrt_lambda);

struct IsoReport {
    enum class Verdict { Isomorphic, NotIsomorphic, Inconclusive } verdict;
    std::optional<GroupHom> witness;  // automorphism matching the triples
    std::string scaling;              // description of the scaling class
    std::string obstruction;          // set for the negative/inconclusive cases

    std::string str() const;
};

/// Decides U(D, lambda) ~ U(D', lambda'): searches Aut(G) for f with
/// f(D) = D', then compares the lambda classes (over a closed field
/// every nonzero scalar is a square, so the classes are zero/nonzero).
/// Negative verdicts are only conclusive when Aut(G) was enumerated
/// exactly (free rank <= 1); otherwise the result is inconclusive.
IsoReport iso_classify(const LiftingPresentation& p, const LiftingPresentation& q,
                       long bound = 3);

}  // namespace planelift
