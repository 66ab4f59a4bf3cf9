#pragma once

#include <string>
#include <vector>

#include "planelift/nichols.hpp"
#include "planelift/smash.hpp"

namespace planelift {

/// Word order used to orient rules: filtration degree (x-length) first,
/// then lexicographic with a configurable letter precedence
/// (default x1 < x2 < ...). Group tags do not participate.
struct MonomialOrder {
    std::vector<int> precedence;  // precedence[letter-1]; empty = identity

    bool word_less(const Word& a, const Word& b) const;
    std::string str(int dim) const;
};

struct RewriteRule {
    Word lhs;
    SmashElement rhs;        // every term strictly below lhs in the order
    std::string provenance;  // which overlap produced it ("input" otherwise)
};

/// An oriented, degree-truncated rewriting system over T(V)#kG.
class RewriteSystem {
public:
    RewriteSystem(SmashContext ctx, MonomialOrder order, int degree_bound);

    const SmashContext& context() const { return ctx_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    int degree_bound() const { return degree_bound_; }
    int confluent_up_to() const { return confluent_up_to_; }
    int initial_rule_count() const { return initial_rules_; }
    int added_rule_count() const { return static_cast<int>(rules_.size()) - initial_rules_; }

    /// Fully reduces e; deterministic (always rewrites the largest
    /// reducible term at its leftmost redex with the first matching
    /// rule). Throws if the x-degree exceeds the bound.
    SmashElement normal_form(const SmashElement& e) const;
    FreeElement normal_form(const FreeElement& e) const;

    /// Reduces with a seeded randomized strategy (redex and rule chosen
    /// at random); used to exercise confluence.
    SmashElement normal_form_randomized(const SmashElement& e, unsigned seed) const;

    bool word_irreducible(const Word& w) const;

    /// Counts irreducible words per x-degree 0..n (the group part is not
    /// counted; over kG each word carries a free group tag).
    GradedDims hilbert_function(int n) const;

    std::string serialize() const;

    friend RewriteSystem complete_to_degree(const SmashContext& ctx,
                                            const std::vector<SmashElement>& relations,
                                            const MonomialOrder& order, int max_degree);

private:
    void add_relation(const SmashElement& rel, const std::string& provenance);
    SmashElement reduce_once(const Word& w, const GroupElement& h, std::size_t pos,
                             std::size_t rule_index) const;
    void complete(int max_degree);

    SmashContext ctx_;
    MonomialOrder order_;
    std::vector<RewriteRule> rules_;
    int degree_bound_;
    int confluent_up_to_ = 0;
    int initial_rules_ = 0;
};

/// Orients the relations and resolves all overlap ambiguities of
/// x-degree <= max_degree, adding rules as needed. Throws when the order
/// fails to orient a relation (leading term not unique).
RewriteSystem complete_to_degree(const SmashContext& ctx,
                                 const std::vector<SmashElement>& relations,
                                 const MonomialOrder& order, int max_degree);

/// Group-free convenience overload over T(V).
RewriteSystem complete_to_degree(int dim, const std::vector<FreeElement>& relations,
                                 const MonomialOrder& order, int max_degree);

}  // namespace planelift
