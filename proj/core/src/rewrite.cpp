#include "planelift/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <stdexcept>

namespace planelift {

bool MonomialOrder::word_less(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int ra = precedence.empty() ? a[i] : precedence[a[i] - 1];
        int rb = precedence.empty() ? b[i] : precedence[b[i] - 1];
        if (ra != rb) return ra < rb;
    }
    return false;
}

std::string MonomialOrder::str(int dim) const {
    std::vector<int> letters(dim);
    for (int i = 0; i < dim; ++i) letters[i] = i + 1;
    std::stable_sort(letters.begin(), letters.end(), [&](int a, int b) {
        int ra = precedence.empty() ? a : precedence[a - 1];
        int rb = precedence.empty() ? b : precedence[b - 1];
        return ra < rb;
    });
    std::string out = "deglex ";
    for (int i = 0; i < dim; ++i) {
        if (i) out += " < ";
        out += "x" + std::to_string(letters[i]);
    }
    return out;
}

RewriteSystem::RewriteSystem(SmashContext ctx, MonomialOrder order, int degree_bound)
    : ctx_(std::move(ctx)), order_(std::move(order)), degree_bound_(degree_bound) {}

namespace {

bool word_has_factor_at(const Word& w, const Word& f, std::size_t pos) {
    if (pos + f.size() > w.size()) return false;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (w[pos + i] != f[i]) return false;
    return true;
}

}  // namespace

bool RewriteSystem::word_irreducible(const Word& w) const {
    for (const auto& rule : rules_)
        for (std::size_t pos = 0; pos + rule.lhs.size() <= w.size(); ++pos)
            if (word_has_factor_at(w, rule.lhs, pos)) return false;
    return true;
}

SmashElement RewriteSystem::reduce_once(const Word& w, const GroupElement& h, std::size_t pos,
                                        std::size_t rule_index) const {
    const RewriteRule& rule = rules_[rule_index];
    const GroupElement id = group_identity(ctx_.group);
    Word prefix(w.begin(), w.begin() + pos);
    Word suffix(w.begin() + pos + rule.lhs.size(), w.end());
    SmashElement out = smash_multiply(ctx_, SmashElement::monomial(prefix, id), rule.rhs);
    return smash_multiply(ctx_, out, SmashElement::monomial(suffix, h));
}

SmashElement RewriteSystem::normal_form(const SmashElement& e) const {
    if (e.x_degree() > degree_bound_)
        throw std::invalid_argument("element degree exceeds the system's degree bound");
    SmashElement work = e;
    SmashElement done;
    while (!work.is_zero()) {
        // largest term first
        auto it = std::prev(work.terms().end());
        const SmashKey key = it->first;
        const Scalar c = it->second;
        bool reduced = false;
        for (std::size_t pos = 0; pos < key.word.size() && !reduced; ++pos)
            for (std::size_t r = 0; r < rules_.size() && !reduced; ++r)
                if (word_has_factor_at(key.word, rules_[r].lhs, pos)) {
                    work.add_term(key.word, key.grp, -c);
                    work += reduce_once(key.word, key.grp, pos, r).scaled(c);
                    reduced = true;
                }
        if (!reduced) {
            work.add_term(key.word, key.grp, -c);
            done.add_term(key.word, key.grp, c);
        }
    }
    return done;
}

FreeElement RewriteSystem::normal_form(const FreeElement& e) const {
    SmashElement s = SmashElement::from_free(ctx_.group, e);
    SmashElement nf = normal_form(s);
    const GroupElement id = group_identity(ctx_.group);
    FreeElement out(e.dim());
    for (const auto& [k, c] : nf.terms()) {
        if (!(k.grp == id))
            throw std::invalid_argument("normal form left the free algebra (group letter present)");
        out.add_term(k.word, c);
    }
    return out;
}

SmashElement RewriteSystem::normal_form_randomized(const SmashElement& e, unsigned seed) const {
    if (e.x_degree() > degree_bound_)
        throw std::invalid_argument("element degree exceeds the system's degree bound");
    std::mt19937 rng(seed);
    SmashElement work = e;
    SmashElement done;
    while (!work.is_zero()) {
        std::uniform_int_distribution<std::size_t> pick_term(0, work.terms().size() - 1);
        auto it = work.terms().begin();
        std::advance(it, pick_term(rng));
        const SmashKey key = it->first;
        const Scalar c = it->second;
        std::vector<std::pair<std::size_t, std::size_t>> redexes;
        for (std::size_t pos = 0; pos < key.word.size(); ++pos)
            for (std::size_t r = 0; r < rules_.size(); ++r)
                if (word_has_factor_at(key.word, rules_[r].lhs, pos)) redexes.emplace_back(pos, r);
        work.add_term(key.word, key.grp, -c);
        if (redexes.empty()) {
            done.add_term(key.word, key.grp, c);
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
            auto [pos, r] = redexes[pick(rng)];
            work += reduce_once(key.word, key.grp, pos, r).scaled(c);
        }
    }
    return done;
}

void RewriteSystem::add_relation(const SmashElement& rel, const std::string& provenance) {
    SmashElement nf = normal_form(rel);
    if (nf.is_zero()) return;
    // leading word = maximal word among the terms
    const Word* lead = nullptr;
    for (const auto& [k, c] : nf.terms())
        if (!lead || order_.word_less(*lead, k.word)) lead = &k.word;
    // collect terms carrying the leading word
    std::vector<std::pair<GroupElement, Scalar>> lead_terms;
    for (const auto& [k, c] : nf.terms())
        if (k.word == *lead) lead_terms.emplace_back(k.grp, c);
    if (lead_terms.size() != 1)
        throw std::invalid_argument(
            "order does not orient a relation: leading word " + word_str(*lead) +
            " appears with " + std::to_string(lead_terms.size()) + " group tags");
    if (lead->empty())
        throw std::invalid_argument("relation reduces to an invertible element (inconsistent presentation)");
    const GroupElement h = lead_terms.front().first;
    const Scalar c = lead_terms.front().second;
    const GroupElement hinv = group_inverse(ctx_.group, h);
    RewriteRule rule;
    rule.lhs = *lead;
    rule.provenance = provenance;
    for (const auto& [k, co] : nf.terms()) {
        if (k.word == rule.lhs) continue;
        rule.rhs.add_term(k.word, group_mul(ctx_.group, k.grp, hinv), -(co / c));
    }
    for (const auto& [k, co] : rule.rhs.terms())
        if (!order_.word_less(k.word, rule.lhs))
            throw std::logic_error("oriented rule has a tail not below its lhs");
    rules_.push_back(std::move(rule));
}

void RewriteSystem::complete(int max_degree) {
    // Deterministic worklist of rule pairs; indexes grow as rules are added.
    std::deque<std::pair<std::size_t, std::size_t>> queue;
    for (std::size_t i = 0; i < rules_.size(); ++i)
        for (std::size_t j = 0; j < rules_.size(); ++j) queue.emplace_back(i, j);

    const GroupElement id = group_identity(ctx_.group);
    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.pop_front();
        const Word li = rules_[i].lhs;
        const Word lj = rules_[j].lhs;

        // Overlap ambiguities: a proper suffix of li equals a prefix of lj.
        for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
            bool match = true;
            for (std::size_t p = 0; p < k; ++p)
                if (li[li.size() - k + p] != lj[p]) {
                    match = false;
                    break;
                }
            if (!match) continue;
            Word w = li;
            w.insert(w.end(), lj.begin() + k, lj.end());
            if (static_cast<int>(w.size()) > max_degree) continue;
            SmashElement via_i = reduce_once(w, id, 0, i);
            SmashElement via_j = reduce_once(w, id, li.size() - k, j);
            SmashElement diff = normal_form(via_i) - normal_form(via_j);
            diff = normal_form(diff);
            if (!diff.is_zero()) {
                std::size_t fresh = rules_.size();
                add_relation(diff, "overlap " + word_str(li) + " | " + word_str(lj) +
                                       " at " + std::to_string(li.size() - k));
                for (std::size_t r = rules_.size(); r-- > fresh;)
                    for (std::size_t s = 0; s < rules_.size(); ++s) {
                        queue.emplace_back(r, s);
                        if (s != r) queue.emplace_back(s, r);
                    }
            }
        }

        // Inclusion ambiguities: lj a proper factor of li.
        if (i != j && lj.size() < li.size()) {
            for (std::size_t pos = 0; pos + lj.size() <= li.size(); ++pos) {
                if (!word_has_factor_at(li, lj, pos)) continue;
                if (static_cast<int>(li.size()) > max_degree) continue;
                SmashElement via_i = reduce_once(li, id, 0, i);
                SmashElement via_j = reduce_once(li, id, pos, j);
                SmashElement diff = normal_form(via_i) - normal_form(via_j);
                diff = normal_form(diff);
                if (!diff.is_zero()) {
                    std::size_t fresh = rules_.size();
                    add_relation(diff, "inclusion " + word_str(lj) + " in " + word_str(li));
                    for (std::size_t r = rules_.size(); r-- > fresh;)
                        for (std::size_t s = 0; s < rules_.size(); ++s) {
                            queue.emplace_back(r, s);
                            if (s != r) queue.emplace_back(s, r);
                        }
                }
            }
        }
    }
    confluent_up_to_ = max_degree;
}

GradedDims RewriteSystem::hilbert_function(int n) const {
    if (n > confluent_up_to_)
        throw std::invalid_argument("system is not certified confluent to that degree");
    GradedDims out;
    out.dims.assign(n + 1, 0);
    Word cur;
    // depth-first enumeration of words with no rule lhs as a factor;
    // a new redex can only appear as a suffix of the extended word
    std::function<void(int)> rec = [&](int depth) {
        ++out.dims[depth];
        if (depth == n) return;
        for (int letter = 1; letter <= ctx_.dim; ++letter) {
            cur.push_back(letter);
            bool blocked = false;
            for (const auto& rule : rules_)
                if (rule.lhs.size() <= cur.size() &&
                    word_has_factor_at(cur, rule.lhs, cur.size() - rule.lhs.size())) {
                    blocked = true;
                    break;
                }
            if (!blocked) rec(depth + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::string RewriteSystem::serialize() const {
    std::string out;
    out += "order = " + order_.str(ctx_.dim) + "\n";
    out += "degree-bound = " + std::to_string(degree_bound_) + "\n";
    out += "confluent-up-to = " + std::to_string(confluent_up_to_) + "\n";
    out += "rules = " + std::to_string(rules_.size()) + "\n";
    for (const auto& rule : rules_) {
        out += word_str(rule.lhs) + " -> " + rule.rhs.str(ctx_.group);
        if (rule.provenance != "input") out += "   # " + rule.provenance;
        out += "\n";
    }
    return out;
}

RewriteSystem complete_to_degree(const SmashContext& ctx,
                                 const std::vector<SmashElement>& relations,
                                 const MonomialOrder& order, int max_degree) {
    RewriteSystem sys(ctx, order, max_degree);
    for (const auto& rel : relations) sys.add_relation(rel, "input");
    sys.initial_rules_ = static_cast<int>(sys.rules_.size());
    sys.complete(max_degree);
    return sys;
}

RewriteSystem complete_to_degree(int dim, const std::vector<FreeElement>& relations,
                                 const MonomialOrder& order, int max_degree) {
    SmashContext ctx = SmashContext::trivial(dim);
    std::vector<SmashElement> rels;
    rels.reserve(relations.size());
    for (const auto& r : relations) rels.push_back(SmashElement::from_free(ctx.group, r));
    return complete_to_degree(ctx, rels, order, max_degree);
}

}  // namespace planelift
