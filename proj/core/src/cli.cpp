#include "planelift/cli.hpp"

#include <CLI11.hpp>

#include <cctype>

#include "planelift/config.hpp"
#include "planelift/lifting.hpp"

namespace planelift::cli {

namespace {

struct SpaceFlags {
    std::string kind = "jordan";
    std::string eps = "1";
    long ell = 2;
    std::string q12 = "1", q21 = "1", q22 = "1", a = "0";
    long dim = 2;
    std::string qmat;  // "1,z;z,1" rows ; columns ,
    std::string config;
};

void add_space_flags(CLI::App* cmd, SpaceFlags& f) {
    cmd->add_option("--space", f.kind,
                    "jordan | super-jordan | block | block-point | diagonal | custom");
    cmd->add_option("--eps", f.eps, "block parameter eps");
    cmd->add_option("--ell", f.ell, "block dimension");
    cmd->add_option("--q12", f.q12, "block-point q12");
    cmd->add_option("--q21", f.q21, "block-point q21");
    cmd->add_option("--q22", f.q22, "block-point q22");
    cmd->add_option("--a", f.a, "block-point interaction a");
    cmd->add_option("--q", f.qmat, "diagonal braiding matrix, rows ';', entries ','");
    cmd->add_option("--config", f.config, "config file with a [space] section");
}

void check_config_conductor(Config& cfg, const FieldPtr& field) {
    long n = cfg.get_long_or("", "conductor", field->conductor());
    if (n != field->conductor())
        throw std::invalid_argument("config conductor " + std::to_string(n) +
                                    " does not match the session conductor " +
                                    std::to_string(field->conductor()));
}

BraidedVectorSpace build_space(const SpaceFlags& f, const FieldPtr& field) {
    if (!f.config.empty()) {
        Config cfg = Config::load(f.config);
        check_config_conductor(cfg, field);
        BraidedVectorSpace v = space_from_config(cfg, field);
        cfg.ensure_all_consumed();
        return v;
    }
    if (f.kind == "jordan") return make_block(Scalar(1), 2);
    if (f.kind == "super-jordan") return make_block(Scalar(-1), 2);
    if (f.kind == "block") return make_block(parse_scalar(f.eps, field), static_cast<int>(f.ell));
    if (f.kind == "block-point")
        return make_block_point(parse_scalar(f.eps, field), parse_scalar(f.q12, field),
                                parse_scalar(f.q21, field), parse_scalar(f.q22, field),
                                parse_scalar(f.a, field));
    if (f.kind == "diagonal") {
        std::vector<std::vector<Scalar>> q;
        std::string row;
        std::vector<std::string> rows;
        for (char c : f.qmat) {
            if (c == ';') {
                rows.push_back(row);
                row.clear();
            } else
                row += c;
        }
        if (!row.empty()) rows.push_back(row);
        for (const auto& r : rows) {
            std::vector<Scalar> qr;
            std::string cell;
            for (char c : r) {
                if (c == ',') {
                    qr.push_back(parse_scalar(cell, field));
                    cell.clear();
                } else
                    cell += c;
            }
            qr.push_back(parse_scalar(cell, field));
            q.push_back(std::move(qr));
        }
        return make_diagonal(q);
    }
    throw std::invalid_argument("unknown --space kind: " + f.kind +
                                " (custom braidings need --config)");
}

struct TripleFlags {
    std::string config;
    std::string case_name;  // jordanian | super-jordanian (canonical triple over Z)
    std::string lambda;     // overrides the config value when set
    long degree = 8;
};

void add_triple_flags(CLI::App* cmd, TripleFlags& f) {
    cmd->add_option("--config", f.config, "config file with [group] and [triple] sections");
    cmd->add_option("--case", f.case_name,
                    "jordanian | super-jordanian (canonical YD-triple over Z)");
    cmd->add_option("--lambda", f.lambda, "deformation parameter");
    cmd->add_option("--degree", f.degree, "completion degree bound");
}

std::pair<YDTriple, Scalar> build_triple(const TripleFlags& f, const FieldPtr& field) {
    YDTriple t;
    Scalar lambda(0);
    if (!f.config.empty()) {
        Config cfg = Config::load(f.config);
        check_config_conductor(cfg, field);
        t = triple_from_config(cfg, field);
        lambda = lambda_from_config(cfg, field);
        cfg.ensure_all_consumed();
    } else if (!f.case_name.empty()) {
        t.group = FGAbelianGroup(1, {});
        t.g = group_generator(t.group, 0);
        if (f.case_name == "jordanian") t.chi.values = {Scalar(1)};
        else if (f.case_name == "super-jordanian") t.chi.values = {Scalar(-1)};
        else throw std::invalid_argument("unknown --case: " + f.case_name);
        t.eta.values = {Scalar(1)};
    } else {
        throw std::invalid_argument("a YD-triple is required: pass --config or --case");
    }
    if (!f.lambda.empty()) lambda = parse_scalar(f.lambda, field);
    return {t, lambda};
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string dims_line(const std::vector<long>& dims) {
    std::string out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(dims[i]);
    }
    return out;
}

std::string hom_str(const FGAbelianGroup& g, const GroupHom& f) {
    std::string out;
    for (int i = 0; i < g.generator_count(); ++i) {
        if (i) out += "; ";
        out += group_element_str(g, group_generator(g, i)) + " -> " +
               group_element_str(g, f.images[i]);
    }
    return out;
}

MonomialOrder order_from_flag(const std::string& spec, int dim) {
    MonomialOrder order;
    if (spec.empty()) return order;
    // e.g. "x1,x2" low to high
    order.precedence.assign(dim, 0);
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c)))
            cur += c;
    }
    if (!cur.empty()) parts.push_back(cur);
    if (static_cast<int>(parts.size()) != dim)
        throw std::invalid_argument("--order must list every generator");
    for (int rank = 0; rank < dim; ++rank) {
        const std::string& p = parts[rank];
        if (p.size() < 2 || p[0] != 'x') throw std::invalid_argument("bad --order entry: " + p);
        int letter = std::stoi(p.substr(1));
        if (letter < 1 || letter > dim) throw std::invalid_argument("bad --order entry: " + p);
        order.precedence[letter - 1] = rank + 1;
    }
    return order;
}

// Prop-2.1-style defining relations of the Nichols algebra of a space,
// taken from the symmetrizer kernels in degrees 2..3.
std::vector<FreeElement> nichols_relations(const BraidedVectorSpace& space) {
    std::vector<FreeElement> rels;
    for (int n = 2; n <= 3; ++n)
        for (auto& e : relation_generators(space, n)) rels.push_back(std::move(e));
    return rels;
}

const std::vector<std::string> kCommands = {
    "check-braid", "dims",    "relations", "primitives", "classify", "ghost",
    "table1",      "complete", "nf",       "hilbert",    "lift build",
    "lift check",  "lift pbw", "lift iso", "lift nf",    "lift rep",
    "lift zerodiv"};

}  // namespace

const std::vector<std::string>& command_names() { return kCommands; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computer algebra for Jordan and super Jordan planes, their "
                 "block-plus-point braidings, and the lifted Hopf algebras U(D, lambda)"};
    app.name("planelift");
    long conductor = 12;
    app.add_option("--conductor", conductor, "cyclotomic conductor N; scalars live in Q(zeta_N)");
    app.require_subcommand(1);

    // check-braid
    auto* cmd_braid = app.add_subcommand("check-braid", "validate the braid equation");
    SpaceFlags braid_space;
    add_space_flags(cmd_braid, braid_space);

    // dims
    auto* cmd_dims = app.add_subcommand("dims", "graded dimensions via symmetrizer ranks");
    SpaceFlags dims_space;
    long dims_max = 6;
    add_space_flags(cmd_dims, dims_space);
    cmd_dims->add_option("--max-degree", dims_max, "top degree");

    // relations
    auto* cmd_rel = app.add_subcommand("relations", "new minimal Nichols relations per degree");
    SpaceFlags rel_space;
    long rel_min = 2, rel_max = 6;
    add_space_flags(cmd_rel, rel_space);
    cmd_rel->add_option("--min-degree", rel_min, "first degree");
    cmd_rel->add_option("--max-degree", rel_max, "last degree");

    // primitives
    auto* cmd_prim = app.add_subcommand(
        "primitives", "block-plus-point parameters of an adjoined primitive candidate");
    std::string prim_case = "jordanian", prim_candidate, prim_element;
    long prim_xdeg = 0;
    bool prim_defect = false;
    cmd_prim->add_option("--case", prim_case, "jordanian | super-jordanian");
    cmd_prim->add_option("--candidate", prim_candidate, "y | x1^2 | r (named candidates)");
    cmd_prim->add_option("--element", prim_element, "explicit candidate element");
    cmd_prim->add_option("--xdeg", prim_xdeg, "x-degree of --element");
    cmd_prim->add_flag("--show-defect", prim_defect, "also print the T(V) primitivity defect");

    // classify
    auto* cmd_cls = app.add_subcommand("classify", "classify a 2-dimensional module from the g-action");
    std::string cls_action;
    cmd_cls->add_option("--action", cls_action, "2x2 action matrix of g, rows ';', entries ','")
        ->required();

    // ghost
    auto* cmd_ghost = app.add_subcommand("ghost", "ghost invariant of a block-plus-point datum");
    std::string ghost_eps = "1", ghost_a = "0";
    cmd_ghost->add_option("--eps", ghost_eps, "+1 or -1");
    cmd_ghost->add_option("--a", ghost_a, "interaction parameter");

    // table1
    auto* cmd_t1 = app.add_subcommand("table1", "finite-GKdim classification lookup");
    std::string t1_q12q21 = "1", t1_eps = "1", t1_q22 = "1", t1_ghost = "0";
    cmd_t1->add_option("--q12q21", t1_q12q21, "product q12 q21");
    cmd_t1->add_option("--eps", t1_eps, "+1 or -1");
    cmd_t1->add_option("--q22", t1_q22, "point self-braiding");
    cmd_t1->add_option("--ghost", t1_ghost, "ghost invariant");

    // complete / nf / hilbert (free rewriting)
    SpaceFlags comp_space, nf_space, hil_space;
    std::vector<std::string> comp_rels, nf_rels, hil_rels;
    std::string comp_order, nf_order, hil_order, nf_element;
    long comp_dim = 2, nf_dim = 2, hil_dim = 2;
    long comp_max = 8, nf_max = 8, hil_max = 6;

    auto* cmd_comp = app.add_subcommand("complete", "complete a presentation to a degree bound");
    add_space_flags(cmd_comp, comp_space);
    cmd_comp->add_option("--relation", comp_rels, "relation element (repeatable)");
    cmd_comp->add_option("--dim", comp_dim, "generator count for --relation mode");
    cmd_comp->add_option("--order", comp_order, "letter precedence low to high, e.g. x1,x2");
    cmd_comp->add_option("--max-degree", comp_max, "completion degree bound");

    auto* cmd_nf = app.add_subcommand("nf", "normal form in a completed presentation");
    add_space_flags(cmd_nf, nf_space);
    cmd_nf->add_option("--relation", nf_rels, "relation element (repeatable)");
    cmd_nf->add_option("--dim", nf_dim, "generator count for --relation mode");
    cmd_nf->add_option("--order", nf_order, "letter precedence low to high");
    cmd_nf->add_option("--max-degree", nf_max, "completion degree bound");
    cmd_nf->add_option("--element", nf_element, "element to reduce")->required();

    auto* cmd_hil = app.add_subcommand("hilbert", "irreducible-word counts per degree");
    add_space_flags(cmd_hil, hil_space);
    cmd_hil->add_option("--relation", hil_rels, "relation element (repeatable)");
    cmd_hil->add_option("--dim", hil_dim, "generator count for --relation mode");
    cmd_hil->add_option("--order", hil_order, "letter precedence low to high");
    cmd_hil->add_option("--max-degree", hil_max, "top degree");

    // lift family
    auto* cmd_lift = app.add_subcommand("lift", "liftings U(D, lambda) of the (super) Jordan plane");
    cmd_lift->require_subcommand(1);

    TripleFlags lb_t, lc_t, lp_t, li_t, ln_t, lr_t, lz_t;
    auto* cmd_lb = cmd_lift->add_subcommand("build", "build and complete the presentation");
    add_triple_flags(cmd_lb, lb_t);
    auto* cmd_lc = cmd_lift->add_subcommand("check", "Hopf-ideal (skew-primitivity) check");
    add_triple_flags(cmd_lc, lc_t);
    auto* cmd_lp = cmd_lift->add_subcommand("pbw", "flatness / PBW check");
    long lp_max = 8;
    add_triple_flags(cmd_lp, lp_t);
    cmd_lp->add_option("--max-degree", lp_max, "degree bound for the check");
    auto* cmd_li = cmd_lift->add_subcommand("iso", "isomorphism classification");
    std::string li_other, li_lambda2;
    long li_bound = 3;
    add_triple_flags(cmd_li, li_t);
    cmd_li->add_option("--other", li_other, "config file of the second presentation");
    cmd_li->add_option("--other-lambda", li_lambda2, "lambda' (same triple) when --other is absent");
    cmd_li->add_option("--bound", li_bound, "automorphism search bound");
    auto* cmd_ln = cmd_lift->add_subcommand("nf", "normal form in the lifting");
    std::string ln_element;
    add_triple_flags(cmd_ln, ln_t);
    cmd_ln->add_option("--element", ln_element, "smash element to reduce")->required();
    auto* cmd_lr = cmd_lift->add_subcommand("rep", "one-dimensional representation witness");
    std::string lr_x1 = "0", lr_x2 = "0";
    add_triple_flags(cmd_lr, lr_t);
    cmd_lr->add_option("--x1", lr_x1, "image of x1");
    cmd_lr->add_option("--x2", lr_x2, "image of x2");
    auto* cmd_lz = cmd_lift->add_subcommand("zerodiv", "zero-divisor witness (super case)");
    std::string lz_sqrt = "0";
    add_triple_flags(cmd_lz, lz_t);
    cmd_lz->add_option("--sqrt-lambda", lz_sqrt, "square root of lambda");

    // parse
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const FieldPtr field = CyclotomicField::get(conductor);

        if (*cmd_braid) {
            BraidedVectorSpace v = build_space(braid_space, field);
            out << "dim = " << v.dim() << "\n";
            out << "invertible = " << bool_str(v.is_invertible()) << "\n";
            auto res = braid_check(v);
            if (res.ok) {
                out << "braid = ok\n";
                return 0;
            }
            out << "braid = fail at (" << res.failing_triple[0] << ", " << res.failing_triple[1]
                << ", " << res.failing_triple[2] << ")\n";
            return 1;
        }

        if (*cmd_dims) {
            BraidedVectorSpace v = build_space(dims_space, field);
            out << dims_line(nichols_dims(v, static_cast<int>(dims_max)).dims) << "\n";
            return 0;
        }

        if (*cmd_rel) {
            BraidedVectorSpace v = build_space(rel_space, field);
            for (long n = rel_min; n <= rel_max; ++n) {
                auto gens = relation_generators(v, static_cast<int>(n));
                if (gens.empty()) {
                    out << "degree " << n << ": (none)\n";
                } else {
                    for (const auto& e : gens) out << "degree " << n << ": " << e.str() << "\n";
                }
            }
            return 0;
        }

        if (*cmd_prim) {
            YDTriple t;
            t.group = FGAbelianGroup(1, {});
            t.g = group_generator(t.group, 0);
            t.eta.values = {Scalar(1)};
            const bool super = prim_case == "super-jordanian";
            if (!super && prim_case != "jordanian")
                throw std::invalid_argument("unknown --case: " + prim_case);
            t.chi.values = {super ? Scalar(-1) : Scalar(1)};
            FreeElement z;
            int m = 0;
            if (!prim_element.empty()) {
                if (prim_xdeg <= 0) throw std::invalid_argument("--element requires --xdeg");
                z = parse_free_element(prim_element, 2, field);
                m = static_cast<int>(prim_xdeg);
            } else if (prim_candidate == "y" && !super) {
                z = parse_free_element("x2 x1 - x1 x2 + 1/2*x1 x1", 2, field);
                m = 2;
            } else if (prim_candidate == "x1^2" && super) {
                z = parse_free_element("x1 x1", 2, field);
                m = 2;
            } else if (prim_candidate == "r" && super) {
                // x2 x21 - x21 x2 - x1 x21 with x21 = x2 x1 + x1 x2
                z = parse_free_element(
                    "x2 x2 x1 - x1 x2 x2 - x1 x2 x1 - x1 x1 x2", 2, field);
                m = 3;
            } else {
                throw std::invalid_argument(
                    "pass --element/--xdeg or a --candidate matching the case (y | x1^2 | r)");
            }
            out << "case = " << prim_case << "\n";
            out << "xdeg = " << m << "\n";
            BlockPointParams p = adjoin_primitive_params(t, z, m);
            out << "q12 = " << p.q12.str() << "\n";
            out << "q21 = " << p.q21.str() << "\n";
            out << "q22 = " << p.q22.str() << "\n";
            out << "a = " << p.a.str() << "\n";
            out << "ghost = " << p.ghost().str() << "\n";
            out << "discrete = " << bool_str(p.ghost_discrete()) << "\n";
            auto verdict = table1_lookup(p.q12q21(), p.eps, p.q22, p.ghost());
            out << "gkdim = " << verdict.str() << "\n";
            if (prim_defect) {
                auto defect = primitivity_defect(realize_braiding(t), z);
                out << "primitivity-defect = " << defect.str() << "\n";
            }
            return 0;
        }

        if (*cmd_cls) {
            std::vector<std::vector<Scalar>> rows;
            std::string row, cell;
            std::vector<std::string> rowstrs;
            for (char c : cls_action) {
                if (c == ';') {
                    rowstrs.push_back(row);
                    row.clear();
                } else
                    row += c;
            }
            rowstrs.push_back(row);
            Matrix m(2, 2);
            if (rowstrs.size() != 2) throw std::invalid_argument("--action must have 2 rows");
            for (int i = 0; i < 2; ++i) {
                std::vector<std::string> cells;
                cell.clear();
                for (char c : rowstrs[i]) {
                    if (c == ',') {
                        cells.push_back(cell);
                        cell.clear();
                    } else
                        cell += c;
                }
                cells.push_back(cell);
                if (cells.size() != 2) throw std::invalid_argument("--action rows need 2 entries");
                for (int j = 0; j < 2; ++j) m.at(i, j) = parse_scalar(cells[j], field);
            }
            FGAbelianGroup z(1, {});
            auto res = classify_dim2(m, group_generator(z, 0), z);
            if (res.diagonal) {
                out << "kind = diagonal\n";
                return 0;
            }
            out << "kind = block\n";
            out << "eps = " << res.triple->eps().str() << "\n";
            out << "chi = [" << res.triple->chi.values[0].str() << "]\n";
            out << "eta = [" << res.triple->eta.values[0].str() << "]\n";
            out << "basis-x1 = " << res.basis_x1[0].str() << ", " << res.basis_x1[1].str() << "\n";
            out << "basis-x2 = " << res.basis_x2[0].str() << ", " << res.basis_x2[1].str() << "\n";
            auto violations = validate_yd_triple(*res.triple);
            out << "triple-valid = " << (violations.empty() ? "ok" : violations.front()) << "\n";
            return 0;
        }

        if (*cmd_ghost) {
            Scalar g = ghost_of(parse_scalar(ghost_eps, field), parse_scalar(ghost_a, field));
            out << "ghost = " << g.str() << "\n";
            out << "discrete = " << bool_str(ghost_is_discrete(g)) << "\n";
            return 0;
        }

        if (*cmd_t1) {
            auto verdict = table1_lookup(parse_scalar(t1_q12q21, field), parse_scalar(t1_eps, field),
                                         parse_scalar(t1_q22, field), parse_scalar(t1_ghost, field));
            switch (verdict.outcome) {
                case GkdimVerdict::Outcome::Finite:
                    out << "finite gkdim = " << verdict.value << "\n";
                    out << "formula = " << verdict.formula << "\n";
                    break;
                case GkdimVerdict::Outcome::Infinite:
                    out << "infinite gkdim\n";
                    break;
                default:
                    out << "gkdim not in table\n";
                    break;
            }
            return 0;
        }

        auto build_free_system = [&](const SpaceFlags& sf, const std::vector<std::string>& rels,
                                     const std::string& order_flag, long dim_flag,
                                     long max_degree) {
            if (!rels.empty()) {
                int dim = static_cast<int>(dim_flag);
                std::vector<FreeElement> relations;
                for (const auto& r : rels) relations.push_back(parse_free_element(r, dim, field));
                return complete_to_degree(dim, relations, order_from_flag(order_flag, dim),
                                          static_cast<int>(max_degree));
            }
            BraidedVectorSpace v = build_space(sf, field);
            return complete_to_degree(v.dim(), nichols_relations(v),
                                      order_from_flag(order_flag, v.dim()),
                                      static_cast<int>(max_degree));
        };

        if (*cmd_comp) {
            RewriteSystem sys = build_free_system(comp_space, comp_rels, comp_order, comp_dim, comp_max);
            out << sys.serialize();
            return 0;
        }

        if (*cmd_nf) {
            RewriteSystem sys = build_free_system(nf_space, nf_rels, nf_order, nf_dim, nf_max);
            FreeElement e = parse_free_element(nf_element, sys.context().dim, field);
            out << "nf = " << sys.normal_form(e).str() << "\n";
            return 0;
        }

        if (*cmd_hil) {
            RewriteSystem sys = build_free_system(hil_space, hil_rels, hil_order, hil_dim, hil_max);
            out << dims_line(sys.hilbert_function(static_cast<int>(hil_max)).dims) << "\n";
            return 0;
        }

        if (*cmd_lift) {
            auto make_lift = [&](const TripleFlags& tf) {
                auto [t, lambda] = build_triple(tf, field);
                return build_lifting(t, lambda, static_cast<int>(tf.degree));
            };

            if (*cmd_lb) {
                LiftingPresentation p = make_lift(lb_t);
                out << "case = " << lift_case_str(p.kind) << "\n";
                out << "lambda = " << p.lambda.str() << "\n";
                out << "completion-added = " << p.rules.added_rule_count() << "\n";
                out << p.rules.serialize();
                return 0;
            }
            if (*cmd_lc) {
                LiftingPresentation p = make_lift(lc_t);
                auto rep = hopf_ideal_check(p);
                if (rep.ok) {
                    out << "hopf-ideal: ok\n";
                    return 0;
                }
                out << "hopf-ideal: defect in " << rep.relation << "\n";
                out << "defect = " << rep.defect.str(p.group()) << "\n";
                return 1;
            }
            if (*cmd_lp) {
                LiftingPresentation p = make_lift(lp_t);
                auto rep = pbw_check(p, static_cast<int>(lp_max));
                out << "counts   = " << dims_line(rep.counts) << "\n";
                out << "expected = " << dims_line(rep.expected) << "\n";
                out << "completion-added = " << bool_str(rep.rules_added) << "\n";
                if (rep.ok) {
                    out << "pbw: ok\n";
                    return 0;
                }
                out << "pbw: fail at degree " << rep.first_bad_degree << "\n";
                return 1;
            }
            if (*cmd_li) {
                LiftingPresentation p = make_lift(li_t);
                LiftingPresentation q = [&] {
                    if (!li_other.empty()) {
                        TripleFlags other;
                        other.config = li_other;
                        other.degree = li_t.degree;
                        return make_lift(other);
                    }
                    if (li_lambda2.empty())
                        throw std::invalid_argument("lift iso needs --other or --other-lambda");
                    return build_lifting(p.triple, parse_scalar(li_lambda2, field),
                                         static_cast<int>(li_t.degree));
                }();
                auto rep = iso_classify(p, q, li_bound);
                switch (rep.verdict) {
                    case IsoReport::Verdict::Isomorphic:
                        out << "iso: isomorphic\n";
                        out << "scaling = " << rep.scaling << "\n";
                        out << "witness = " << hom_str(p.group(), *rep.witness) << "\n";
                        return 0;
                    case IsoReport::Verdict::NotIsomorphic:
                        out << "iso: not isomorphic\n";
                        out << "obstruction = " << rep.obstruction << "\n";
                        return 0;
                    default:
                        out << "iso: inconclusive\n";
                        out << "reason = " << rep.obstruction << "\n";
                        return 1;
                }
            }
            if (*cmd_ln) {
                LiftingPresentation p = make_lift(ln_t);
                SmashContext ctx = SmashContext::from_triple(p.triple);
                SmashElement e = parse_smash_element(ln_element, ctx, field);
                out << "nf = " << p.rules.normal_form(e).str(p.group()) << "\n";
                return 0;
            }
            if (*cmd_lr) {
                LiftingPresentation p = make_lift(lr_t);
                auto rep = one_dim_rep(p, parse_scalar(lr_x1, field), parse_scalar(lr_x2, field));
                if (rep.ok) {
                    out << "rep: ok\n";
                    return 0;
                }
                out << "rep: violated " << rep.relation << " -> " << rep.value.str() << "\n";
                return 1;
            }
            if (*cmd_lz) {
                LiftingPresentation p = make_lift(lz_t);
                auto rep = zero_divisor_witness(p, parse_scalar(lz_sqrt, field));
                if (rep.ok) {
                    out << "zerodiv: ok (a b = 0)\n";
                    return 0;
                }
                out << "zerodiv: nonzero product\n";
                out << "product = " << rep.product.str(p.group()) << "\n";
                return 1;
            }
        }
        err << "error: no subcommand dispatched\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace planelift::cli
