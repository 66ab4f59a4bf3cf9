#include "planelift/smash.hpp"

#include <stdexcept>

namespace planelift {

SmashContext SmashContext::trivial(int dim) {
    SmashContext ctx;
    ctx.group = FGAbelianGroup(0, {});
    ctx.dim = dim;
    return ctx;
}

SmashContext SmashContext::from_triple(const YDTriple& t) {
    SmashContext ctx;
    ctx.group = t.group;
    ctx.chi = t.chi;
    ctx.eta = t.eta;
    ctx.dim = 2;
    return ctx;
}

FreeElement SmashContext::act(const GroupElement& h, const FreeElement& e) const {
    const Scalar c = group.generator_count() == 0 ? Scalar(1) : chi_of(h);
    const Scalar d = group.generator_count() == 0 ? Scalar(0) : eta_of(h);
    FreeElement out(e.dim());
    for (const auto& [w, co] : e.terms()) {
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

SmashElement SmashElement::from_free(const FGAbelianGroup& g, const FreeElement& e) {
    SmashElement out;
    const GroupElement id = group_identity(g);
    for (const auto& [w, c] : e.terms()) out.add_term(w, id, c);
    return out;
}

SmashElement SmashElement::monomial(const Word& w, const GroupElement& h, Scalar c) {
    SmashElement out;
    out.add_term(w, h, c);
    return out;
}

SmashElement SmashElement::group_like(const FGAbelianGroup& g, const GroupElement& h, Scalar c) {
    return monomial({}, h, std::move(c));
}

void SmashElement::add_term(const Word& w, const GroupElement& h, const Scalar& c) {
    if (c.is_zero()) return;
    SmashKey key{w, h};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar SmashElement::coeff(const Word& w, const GroupElement& h) const {
    auto it = terms_.find(SmashKey{w, h});
    return it == terms_.end() ? Scalar(0) : it->second;
}

SmashElement SmashElement::operator-() const {
    SmashElement r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

SmashElement& SmashElement::operator+=(const SmashElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.word, k.grp, c);
    return *this;
}

SmashElement& SmashElement::operator-=(const SmashElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.word, k.grp, -c);
    return *this;
}

SmashElement SmashElement::scaled(const Scalar& c) const {
    SmashElement r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

int SmashElement::x_degree() const {
    int deg = -1;
    for (const auto& [k, c] : terms_) deg = std::max(deg, static_cast<int>(k.word.size()));
    return deg;
}

FreeElement SmashElement::forget_group(int dim) const {
    FreeElement out(dim);
    for (const auto& [k, c] : terms_) out.add_term(k.word, c);
    return out;
}

namespace {

std::string smash_coeff_prefix(const Scalar& c) {
    if (c.is_one()) return "";
    if (c == Scalar(-1)) return "-";
    if (c.is_rational()) return c.str() + "*";
    return "(" + c.str() + ")*";
}

std::string smash_term_str(const FGAbelianGroup& g, const SmashKey& k, const Scalar& c) {
    std::string body;
    if (!k.word.empty()) body = word_str(k.word);
    if (!is_identity(k.grp)) {
        if (!body.empty()) body += ' ';
        body += group_element_str(g, k.grp);
    }
    if (body.empty()) {
        if (c.is_rational()) return c.str();
        return "(" + c.str() + ")";
    }
    return smash_coeff_prefix(c) + body;
}

void join_term(std::string& out, const std::string& term) {
    if (out.empty()) out = term;
    else if (!term.empty() && term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
}

}  // namespace

std::string SmashElement::str(const FGAbelianGroup& g) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) join_term(out, smash_term_str(g, k, c));
    return out;
}

SmashElement smash_multiply(const SmashContext& ctx, const SmashElement& a,
                            const SmashElement& b) {
    SmashElement out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            // (w1 h1)(w2 h2) = w1 (h1 . w2) h1 h2
            const GroupElement h = group_mul(ctx.group, ka.grp, kb.grp);
            if (kb.word.empty()) {
                out.add_term(ka.word, h, ca * cb);
                continue;
            }
            FreeElement moved = ctx.act(ka.grp, FreeElement::from_word(ctx.dim, kb.word));
            for (const auto& [mw, mc] : moved.terms()) {
                Word w = ka.word;
                w.insert(w.end(), mw.begin(), mw.end());
                out.add_term(w, h, ca * cb * mc);
            }
        }
    }
    return out;
}

SmashElement smash_multiply(const YDTriple& t, const SmashElement& a, const SmashElement& b) {
    return smash_multiply(SmashContext::from_triple(t), a, b);
}

void SmashTensorSquare::add_term(const SmashKey& l, const SmashKey& r, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(l, r);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SmashTensorSquare& SmashTensorSquare::operator+=(const SmashTensorSquare& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

SmashTensorSquare& SmashTensorSquare::operator-=(const SmashTensorSquare& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

std::string SmashTensorSquare::str(const FGAbelianGroup& g) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        std::string t = smash_coeff_prefix(c);
        if (t == "-") t = "-(";
        else t += "(";
        t += smash_term_str(g, k.first, Scalar(1)) + ") (x) (" +
             smash_term_str(g, k.second, Scalar(1)) + ")";
        join_term(out, t);
    }
    return out;
}

SmashTensorSquare smash_tensor(const SmashElement& a, const SmashElement& b) {
    SmashTensorSquare out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out.add_term(ka, kb, ca * cb);
    return out;
}

SmashTensorSquare tensor_multiply(const SmashContext& ctx, const SmashTensorSquare& a,
                                  const SmashTensorSquare& b) {
    SmashTensorSquare out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            SmashElement left = smash_multiply(ctx, SmashElement::monomial(ka.first.word, ka.first.grp),
                                               SmashElement::monomial(kb.first.word, kb.first.grp));
            SmashElement right = smash_multiply(ctx, SmashElement::monomial(ka.second.word, ka.second.grp),
                                                SmashElement::monomial(kb.second.word, kb.second.grp));
            const Scalar c = ca * cb;
            for (const auto& [lk, lc] : left.terms())
                for (const auto& [rk, rc] : right.terms())
                    out.add_term(lk, rk, c * lc * rc);
        }
    return out;
}

SmashTensorSquare smash_coproduct(const YDTriple& t, const SmashElement& e) {
    const SmashContext ctx = SmashContext::from_triple(t);
    const GroupElement id = group_identity(t.group);
    SmashTensorSquare out;
    for (const auto& [k, c] : e.terms()) {
        SmashTensorSquare cur;
        cur.add_term(SmashKey{{}, id}, SmashKey{{}, id}, Scalar(1));
        for (int letter : k.word) {
            SmashTensorSquare delta_x;
            delta_x.add_term(SmashKey{{letter}, id}, SmashKey{{}, id}, Scalar(1));
            delta_x.add_term(SmashKey{{}, t.g}, SmashKey{{letter}, id}, Scalar(1));
            cur = tensor_multiply(ctx, cur, delta_x);
        }
        SmashTensorSquare delta_h;
        delta_h.add_term(SmashKey{{}, k.grp}, SmashKey{{}, k.grp}, Scalar(1));
        cur = tensor_multiply(ctx, cur, delta_h);
        for (const auto& [kk, cc] : cur.terms()) out.add_term(kk.first, kk.second, c * cc);
    }
    return out;
}

Scalar counit(const SmashElement& e) {
    Scalar out(0);
    for (const auto& [k, c] : e.terms())
        if (k.word.empty()) out += c;
    return out;
}

namespace {

struct SmashParser {
    std::string_view text;
    std::size_t pos = 0;
    const SmashContext& ctx;
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

    long parse_int(bool allow_sign) {
        skip_ws();
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (text[start] == '-' && pos == start + 1)) fail("expected integer");
        return std::stol(std::string(text.substr(start, pos - start)));
    }

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

    SmashElement parse_term() {
        const GroupElement id = group_identity(ctx.group);
        SmashElement acc = SmashElement::monomial({}, id);
        bool saw_factor = false;
        for (;;) {
            char ch = peek();
            if (ch == '(' || std::isdigit(static_cast<unsigned char>(ch))) {
                Scalar c = parse_coeff();
                skip_ws();
                if (pos < text.size() && text[pos] == '*') ++pos;
                acc = acc.scaled(c);
                saw_factor = true;
            } else if (ch == 'x') {
                ++pos;
                long i = parse_int(false);
                if (i < 1 || i > ctx.dim) fail("generator index out of range");
                acc = smash_multiply(ctx, acc,
                                     SmashElement::monomial({static_cast<int>(i)}, id));
                saw_factor = true;
            } else if (ch == 'g') {
                ++pos;
                int gidx = 1;
                if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    gidx = static_cast<int>(parse_int(false));
                long e = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    e = parse_int(true);
                }
                if (gidx < 1 || gidx > ctx.group.generator_count())
                    fail("group generator index out of range");
                GroupElement h = group_pow(ctx.group, group_generator(ctx.group, gidx - 1), e);
                acc = smash_multiply(ctx, acc, SmashElement::group_like(ctx.group, h));
                saw_factor = true;
            } else {
                break;
            }
        }
        if (!saw_factor) fail("expected a term");
        return acc;
    }

    SmashElement run() {
        SmashElement out;
        bool neg = false;
        if (peek() == '-') {
            ++pos;
            neg = true;
        } else if (peek() == '+') {
            ++pos;
        }
        for (;;) {
            SmashElement t = parse_term();
            out += neg ? -t : t;
            char ch = peek();
            if (ch == '+') {
                ++pos;
                neg = false;
            } else if (ch == '-') {
                ++pos;
                neg = true;
            } else if (ch == '\0') {
                return out;
            } else {
                fail("unexpected input");
            }
        }
    }
};

}  // namespace

SmashElement parse_smash_element(std::string_view text, const SmashContext& ctx,
                                 const FieldPtr& field) {
    SmashParser p{text, 0, ctx, field};
    return p.run();
}

}  // namespace planelift
