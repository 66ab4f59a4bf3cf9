#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planelift/braided.hpp"
#include "planelift/freealg.hpp"

namespace planelift {

/// A finitely generated abelian group Z^r x Z/m_1 x ... x Z/m_s.
/// Generators are ordered free-first; elements store canonical residues
/// in [0, m_i) for the torsion part.
struct FGAbelianGroup {
    int free_rank = 0;
    std::vector<long> torsion;  // each >= 2

    FGAbelianGroup() = default;
    FGAbelianGroup(int rank, std::vector<long> torsion_orders);

    int generator_count() const { return free_rank + static_cast<int>(torsion.size()); }
    friend bool operator==(const FGAbelianGroup& a, const FGAbelianGroup& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
};

struct GroupElement {
    std::vector<long long> free;  // length free_rank
    std::vector<long long> tors;  // length torsion.size(), canonical residues

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.free == b.free && a.tors == b.tors;
    }
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        if (a.free != b.free) return a.free < b.free;
        return a.tors < b.tors;
    }
};

GroupElement group_identity(const FGAbelianGroup& g);
GroupElement group_generator(const FGAbelianGroup& g, int index);  // 0-based
GroupElement group_mul(const FGAbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement group_inverse(const FGAbelianGroup& g, const GroupElement& a);
GroupElement group_pow(const FGAbelianGroup& g, const GroupElement& a, long long e);
GroupElement group_element(const FGAbelianGroup& g, const std::vector<long long>& exponents);
bool is_identity(const GroupElement& a);
bool has_infinite_order(const GroupElement& a);
std::string group_element_str(const FGAbelianGroup& g, const GroupElement& a);

/// A character of the group: one nonzero scalar per generator; on a
/// torsion generator of order m the value must satisfy v^m = 1.
struct Character {
    std::vector<Scalar> values;

    friend bool operator==(const Character& a, const Character& b) { return a.values == b.values; }
};

/// A (chi, chi)-derivation eta: Gamma -> k; determined by its values on
/// the free generators (it vanishes on torsion in characteristic zero).
struct Derivation {
    std::vector<Scalar> values;  // one per generator; torsion entries must be 0

    friend bool operator==(const Derivation& a, const Derivation& b) { return a.values == b.values; }
};

Scalar evaluate(const FGAbelianGroup& g, const Character& chi, const GroupElement& h);
Scalar evaluate(const FGAbelianGroup& g, const Character& chi, const Derivation& eta,
                const GroupElement& h);

/// The YD-triple (g, chi, eta) with eta(g) = 1 and chi(g) = +-1;
/// Jordanian when chi(g) = 1, super Jordanian when chi(g) = -1.
struct YDTriple {
    FGAbelianGroup group;
    GroupElement g;
    Character chi;
    Derivation eta;

    Scalar eps() const { return evaluate(group, chi, g); }
    Scalar chi_of(const GroupElement& h) const { return evaluate(group, chi, h); }
    Scalar eta_of(const GroupElement& h) const { return evaluate(group, chi, eta, h); }

    friend bool operator==(const YDTriple& a, const YDTriple& b) {
        return a.group == b.group && a.g == b.g && a.chi == b.chi && a.eta == b.eta;
    }
};

/// Checks the YD-triple constraints; returns the list of violations
/// (empty means valid). Violations are data, not errors.
std::vector<std::string> validate_yd_triple(const YDTriple& t);

/// The 2-dimensional braiding c(u (x) v) = (g . v) (x) u carried by the
/// triple. With eta(g) = 1 this equals the eps-block of dimension 2;
/// with eta = 0 (permissive mode only) it is of diagonal type.
BraidedVectorSpace realize_braiding(const YDTriple& t, bool permissive = false);

/// Action of a group element on T(V) for the triple's 2-dimensional
/// module: h . x1 = chi(h) x1, h . x2 = chi(h) x2 + eta(h) x1, extended
/// as an algebra map.
FreeElement act(const YDTriple& t, const GroupElement& h, const FreeElement& e);

struct Dim2Classification {
    bool diagonal = false;
    // Block case: the unique triple over the infinite cyclic group
    // generated by the degree element, plus the basis achieving it.
    std::optional<YDTriple> triple;
    std::vector<Scalar> basis_x1, basis_x2;  // coordinates in the input basis
};

/// Classifies a 2-dimensional module from the action matrix of its
/// degree element: diagonal type iff the action is diagonalizable (over
/// the algebraic closure); otherwise produces the unique YD-triple with
/// eta(g) = 1, normalizing by adjusting x1 only.
Dim2Classification classify_dim2(const Matrix& g_action, const GroupElement& degree,
                                 const FGAbelianGroup& group);

/// A group endomorphism by generator images; column i is the image of
/// generator i.
struct GroupHom {
    std::vector<GroupElement> images;
};

GroupElement apply_hom(const FGAbelianGroup& g, const GroupHom& f, const GroupElement& a);
GroupHom compose(const FGAbelianGroup& g, const GroupHom& f, const GroupHom& h);  // f o h
GroupHom hom_from_matrix(const FGAbelianGroup& g, const std::vector<std::vector<long long>>& cols);

/// Checks f is an automorphism; if so fills `inverse` (generator
/// preimages). The torsion part is resolved by exact enumeration of the
/// finite torsion subgroup.
bool is_automorphism(const FGAbelianGroup& g, const GroupHom& f, GroupHom* inverse = nullptr);

/// Transport of a triple along an automorphism f:
/// (g, chi, eta) |-> (f(g), chi o f^{-1}, eta o f^{-1}).
YDTriple transport_triple(const YDTriple& t, const GroupHom& f);

/// Enumerates Aut(G) exactly when the free rank is at most 1; for higher
/// rank, enumerates free blocks with entries in [-bound, bound] (an
/// incomplete list). `complete` reports which case occurred.
std::vector<GroupHom> enumerate_automorphisms(const FGAbelianGroup& g, long bound,
                                              bool* complete);

}  // namespace planelift
