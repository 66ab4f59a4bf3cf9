#include "planelift/lifting.hpp"

#include <stdexcept>

namespace planelift {

std::string lift_case_str(LiftCase c) {
    return c == LiftCase::Jordanian ? "jordanian" : "super-jordanian";
}

bool lambda_admissible(const YDTriple& t, const Scalar& lambda) {
    if (lambda.is_zero()) return true;
    for (const auto& v : t.chi.values)
        if (!(v * v == Scalar(1))) return false;  // chi^2 != counit forces lambda = 0
    return true;
}

namespace {

FreeElement x21_element(const Scalar& eps) {
    // ad_c x2 x1 = x2 x1 - eps x1 x2
    FreeElement e(2);
    e.add_term({2, 1}, Scalar(1));
    e.add_term({1, 2}, -eps);
    return e;
}

// The cubic super Jordanian expression x2 x21 - x21 x2 - x1 x21 in T(V).
FreeElement super_cubic(const Scalar& eps) {
    FreeElement x1 = FreeElement::generator(2, 1);
    FreeElement x2 = FreeElement::generator(2, 2);
    FreeElement x21 = x21_element(eps);
    return x2 * x21 - x21 * x2 - x1 * x21;
}

FreeElement jordan_quadratic() {
    // x2 x1 - x1 x2 + 1/2 x1^2
    FreeElement e(2);
    e.add_term({2, 1}, Scalar(1));
    e.add_term({1, 2}, Scalar(-1));
    e.add_term({1, 1}, Scalar::rational(1, 2));
    return e;
}

}  // namespace

LiftingPresentation build_lifting(const YDTriple& t, const Scalar& lambda, int degree) {
    auto violations = validate_yd_triple(t);
    if (!violations.empty())
        throw std::invalid_argument("invalid YD-triple: " + violations.front());
    if (!lambda_admissible(t, lambda))
        throw std::invalid_argument(
            "lambda must vanish when chi^2 is not the trivial character");
    const Scalar eps = t.eps();
    const LiftCase kind = eps == Scalar(1) ? LiftCase::Jordanian : LiftCase::SuperJordanian;
    const SmashContext ctx = SmashContext::from_triple(t);
    const GroupElement id = group_identity(t.group);
    const GroupElement g2 = group_pow(t.group, t.g, 2);

    std::vector<SmashElement> rels;
    if (kind == LiftCase::Jordanian) {
        SmashElement rel = SmashElement::from_free(t.group, jordan_quadratic());
        rel.add_term({}, id, -lambda);
        rel.add_term({}, g2, lambda);
        rels.push_back(std::move(rel));
    } else {
        SmashElement rel1 = SmashElement::monomial({1, 1}, id);
        rel1.add_term({}, id, -lambda);
        rel1.add_term({}, g2, lambda);
        SmashElement rel2 = SmashElement::from_free(t.group, super_cubic(eps));
        rel2.add_term({2}, id, Scalar(2) * lambda);
        rel2.add_term({1}, g2, lambda);
        rels.push_back(std::move(rel1));
        rels.push_back(std::move(rel2));
    }

    LiftingPresentation p{t, lambda, kind,
                          complete_to_degree(ctx, rels, MonomialOrder{}, degree), rels};
    return p;
}

namespace {

SmashTensorSquare skew_primitive_defect(const YDTriple& t, const SmashElement& e, long power) {
    SmashTensorSquare defect = smash_coproduct(t, e);
    const GroupElement id = group_identity(t.group);
    const GroupElement gm = group_pow(t.group, t.g, power);
    for (const auto& [k, c] : e.terms()) {
        defect.add_term(k, SmashKey{{}, id}, -c);
        defect.add_term(SmashKey{{}, gm}, k, -c);
    }
    return defect;
}

SmashTensorSquare reduce_legs(const RewriteSystem& sys, const SmashTensorSquare& in) {
    SmashTensorSquare out;
    for (const auto& [k, c] : in.terms()) {
        SmashElement l = sys.normal_form(SmashElement::monomial(k.first.word, k.first.grp));
        SmashElement r = sys.normal_form(SmashElement::monomial(k.second.word, k.second.grp));
        for (const auto& [lk, lc] : l.terms())
            for (const auto& [rk, rc] : r.terms()) out.add_term(lk, rk, c * lc * rc);
    }
    return out;
}

}  // namespace

HopfIdealReport hopf_ideal_check(const LiftingPresentation& p) {
    if (p.kind == LiftCase::Jordanian) {
        SmashTensorSquare defect = skew_primitive_defect(p.triple, p.relations[0], 2);
        if (!defect.is_zero()) return {false, "relation 1 (g^2-skew-primitivity)", defect};
        return {};
    }
    SmashTensorSquare d1 = skew_primitive_defect(p.triple, p.relations[0], 2);
    if (!d1.is_zero()) return {false, "relation 1 (g^2-skew-primitivity)", d1};
    // Relation 2 is skew-primitive only modulo relation 1: reduce both
    // tensor legs by the subsystem generated by relation 1 alone.
    const SmashContext ctx = SmashContext::from_triple(p.triple);
    RewriteSystem rel1_only =
        complete_to_degree(ctx, {p.relations[0]}, p.rules.order(), p.rules.degree_bound());
    SmashTensorSquare d2 =
        reduce_legs(rel1_only, skew_primitive_defect(p.triple, p.relations[1], 3));
    if (!d2.is_zero()) return {false, "relation 2 (g^3-skew-primitivity mod relation 1)", d2};
    return {};
}

PbwReport pbw_check(const LiftingPresentation& p, int n, const std::vector<long>* expected_dims) {
    PbwReport out;
    const RewriteSystem* sys = &p.rules;
    std::optional<RewriteSystem> rebuilt;
    if (p.rules.confluent_up_to() < n) {
        rebuilt = complete_to_degree(SmashContext::from_triple(p.triple), p.relations,
                                     p.rules.order(), n);
        sys = &*rebuilt;
    }
    out.rules_added = sys->added_rule_count() > 0;
    if (out.rules_added) {
        out.ok = false;
        out.first_bad_degree = static_cast<int>(sys->rules()[sys->initial_rule_count()].lhs.size());
    }
    out.counts = sys->hilbert_function(n).dims;
    if (expected_dims) {
        out.expected = *expected_dims;
        out.expected.resize(n + 1);
    } else {
        out.expected = nichols_dims(realize_braiding(p.triple), n).dims;
    }
    for (int d = 0; d <= n; ++d)
        if (out.counts[d] != out.expected[d]) {
            out.ok = false;
            if (out.first_bad_degree < 0) out.first_bad_degree = d;
            break;
        }
    return out;
}

OneDimRepReport one_dim_rep(const LiftingPresentation& p, const Scalar& c1, const Scalar& c2) {
    const Scalar eps = p.triple.eps();
    std::vector<std::pair<std::string, FreeElement>> fiber_relations;
    if (p.kind == LiftCase::Jordanian) {
        FreeElement rel = jordan_quadratic();
        rel += FreeElement::constant(2, -p.lambda);
        fiber_relations.emplace_back("relation 1", std::move(rel));
    } else {
        FreeElement rel1 = FreeElement::from_word(2, {1, 1});
        rel1 += FreeElement::constant(2, -p.lambda);
        FreeElement rel2 = super_cubic(eps);
        rel2.add_term({2}, Scalar(2) * p.lambda);
        fiber_relations.emplace_back("relation 1", std::move(rel1));
        fiber_relations.emplace_back("relation 2", std::move(rel2));
    }
    for (const auto& [name, rel] : fiber_relations) {
        Scalar value(0);
        for (const auto& [w, c] : rel.terms()) {
            Scalar m = c;
            for (int letter : w) m *= (letter == 1 ? c1 : c2);
            value += m;
        }
        if (!value.is_zero()) return {false, name, value};
    }
    return {};
}

ZeroDivisorReport zero_divisor_witness(const LiftingPresentation& p, const Scalar& sqrt_lambda) {
    if (p.kind != LiftCase::SuperJordanian)
        throw std::invalid_argument("zero divisor witness lives in the super Jordanian lifting");
    if (!(sqrt_lambda * sqrt_lambda == p.lambda))
        throw std::invalid_argument("sqrt_lambda^2 != lambda");
    const SmashContext ctx = SmashContext::from_triple(p.triple);
    const GroupElement id = group_identity(p.group());
    SmashElement a = SmashElement::monomial({1}, id);
    a.add_term({}, p.triple.g, sqrt_lambda);
    a.add_term({}, id, -sqrt_lambda);
    SmashElement b = SmashElement::monomial({1}, id);
    b.add_term({}, p.triple.g, sqrt_lambda);
    b.add_term({}, id, sqrt_lambda);
    SmashElement nf = p.rules.normal_form(smash_multiply(ctx, a, b));
    return {nf.is_zero(), nf};
}

std::string IsoReport::str() const {
    switch (verdict) {
        case Verdict::Isomorphic: return "isomorphic (" + scaling + ")";
        case Verdict::NotIsomorphic: return "not isomorphic (" + obstruction + ")";
        default: return "inconclusive (" + obstruction + ")";
    }
}

IsoReport iso_classify(const LiftingPresentation& p, const LiftingPresentation& q, long bound) {
    if (!(p.group() == q.group()))
        throw std::invalid_argument("presentations live over different groups");
    IsoReport out{IsoReport::Verdict::NotIsomorphic, std::nullopt, "", ""};
    if (p.kind != q.kind) {
        out.obstruction = "different cases: " + lift_case_str(p.kind) + " vs " +
                          lift_case_str(q.kind) + "; transport preserves chi(g)";
        return out;
    }
    bool complete = false;
    auto auts = enumerate_automorphisms(p.group(), bound, &complete);
    std::optional<GroupHom> witness;
    for (const auto& f : auts)
        if (transport_triple(p.triple, f) == q.triple) {
            witness = f;
            break;
        }
    if (!witness) {
        if (complete) {
            out.obstruction = "no Hopf algebra automorphism of kG transports one triple to the other";
        } else {
            out.verdict = IsoReport::Verdict::Inconclusive;
            out.obstruction = "automorphism search bound exceeded without a match";
        }
        return out;
    }
    const bool pz = p.lambda.is_zero(), qz = q.lambda.is_zero();
    if (pz != qz) {
        out.obstruction = "lambda classes differ: " + p.lambda.str() + " vs " + q.lambda.str() +
                          " (zero vs nonzero is invariant)";
        return out;
    }
    out.verdict = IsoReport::Verdict::Isomorphic;
    out.witness = witness;
    if (pz) {
        out.scaling = "lambda = lambda' = 0; any c works";
    } else {
        out.scaling = "any c with lambda = c lambda'; c = " + (p.lambda / q.lambda).str();
    }
    return out;
}

}  // namespace planelift
