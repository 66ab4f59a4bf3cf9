#include "planelift/nichols.hpp"

#include <stdexcept>

namespace planelift {

std::string GradedDims::str() const {
    std::string out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(dims[i]);
    }
    return out;
}

int default_degree_cap(int dim) { return dim <= 2 ? 12 : 8; }

GradedDims nichols_dims(const BraidedVectorSpace& space, int n_max) {
    if (n_max < 0) throw std::invalid_argument("negative degree bound");
    if (n_max > default_degree_cap(space.dim()))
        throw std::invalid_argument("degree bound exceeds the configured cap of " +
                                    std::to_string(default_degree_cap(space.dim())));
    auto mats = symmetrizer_matrices(space, n_max);
    GradedDims out;
    for (const auto& m : mats) out.dims.push_back(static_cast<long>(rank(m)));
    return out;
}

namespace {

// Row-echelon span with rows monic at their leading (rightmost nonzero)
// coordinate, so relation generators come out monic in the highest word
// of the degree-lex order.
class EchelonBasis {
public:
    std::vector<Scalar> reduce(std::vector<Scalar> v) const {
        for (const auto& [lead, row] : rows_) {
            if (v[lead].is_zero()) continue;
            const Scalar f = v[lead];
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!row[j].is_zero()) v[j] -= f * row[j];
        }
        return v;
    }

    bool insert(std::vector<Scalar> v) {
        v = reduce(std::move(v));
        std::size_t lead = v.size();
        for (std::size_t j = v.size(); j-- > 0;)
            if (!v[j].is_zero()) {
                lead = j;
                break;
            }
        if (lead == v.size()) return false;
        const Scalar inv = v[lead].inverse();
        for (auto& c : v)
            if (!c.is_zero()) c *= inv;
        for (auto& [l, row] : rows_) {
            if (row[lead].is_zero()) continue;
            const Scalar f = row[lead];
            for (std::size_t j = 0; j < row.size(); ++j)
                if (!v[j].is_zero()) row[j] -= f * v[j];
        }
        rows_.emplace_back(lead, std::move(v));
        return true;
    }

    std::size_t size() const { return rows_.size(); }
    const std::vector<std::pair<std::size_t, std::vector<Scalar>>>& rows() const { return rows_; }

private:
    std::vector<std::pair<std::size_t, std::vector<Scalar>>> rows_;
};

// Echelon span of the degree-n slice of the two-sided ideal generated by
// the symmetrizer kernels in degrees 2..n-1: all u (x) kappa (x) w.
EchelonBasis ideal_slice(const BraidedVectorSpace& space, const std::vector<Matrix>& mats,
                         int n) {
    const int d = space.dim();
    EchelonBasis ideal;
    for (int j = 2; j < n; ++j) {
        auto kern = rank_and_kernel(mats[j]).kernel;
        for (const auto& kappa : kern) {
            for (int lead = 0; lead + j <= n; ++lead) {
                const int tail = n - j - lead;
                const std::size_t dl = tensor_dim(d, lead), dt = tensor_dim(d, tail);
                for (std::size_t u = 0; u < dl; ++u)
                    for (std::size_t w = 0; w < dt; ++w) {
                        std::vector<Scalar> vec(tensor_dim(d, n));
                        for (std::size_t m = 0; m < kappa.size(); ++m) {
                            if (kappa[m].is_zero()) continue;
                            vec[(u * kappa.size() + m) * dt + w] = kappa[m];
                        }
                        ideal.insert(std::move(vec));
                    }
            }
        }
    }
    return ideal;
}

}  // namespace

std::vector<FreeElement> relation_generators(const BraidedVectorSpace& space, int n) {
    if (n < 2) throw std::invalid_argument("relations live in degree >= 2");
    if (n > default_degree_cap(space.dim()))
        throw std::invalid_argument("degree exceeds the configured cap");
    const int d = space.dim();
    auto mats = symmetrizer_matrices(space, n);
    EchelonBasis ideal = ideal_slice(space, mats, n);

    EchelonBasis fresh;
    for (const auto& kv : rank_and_kernel(mats[n]).kernel) fresh.insert(ideal.reduce(kv));

    std::vector<FreeElement> out;
    for (const auto& [lead, row] : fresh.rows()) out.push_back(tensor_to_element(d, n, row));
    return out;
}

Scalar ghost_of(const Scalar& eps, const Scalar& a) {
    BlockPointParams p{eps, Scalar(1), Scalar(1), Scalar(1), a};
    return p.ghost();
}

bool ghost_is_discrete(const Scalar& ghost) {
    return ghost.is_integer() && !(ghost.rational_value() < 0);
}

std::string GkdimVerdict::str() const {
    switch (outcome) {
        case Outcome::Finite: return "finite " + std::to_string(value);
        case Outcome::Infinite: return "infinite";
        default: return "not in table";
    }
}

namespace {

// The finite-GKdim classification table for a block plus a point,
// transcribed row by row; matched in order, first hit wins.
//
//   q12q21 | eps | q22                 | ghost    | GKdim
//   -------+-----+---------------------+----------+---------
//      1   | +-1 | 1 or not a root     | 0        | 3
//      1   | +-1 | root of unity != 1  | 0        | 2
//      1   |  1  | 1                   | discrete | G + 3
//      1   |  1  | -1                  | discrete | 2
//      1   |  1  | primitive cube root | 1        | 2
//      1   | -1  | 1                   | discrete | G + 3
//      1   | -1  | -1                  | discrete | G + 2
//     -1   | -1  | -1                  | 1        | 2
enum class Q22Class { One, MinusOne, PrimCubeRoot, RootNotOne, OneOrNotRoot };
enum class GhostClass { Zero, Discrete, One };

struct TableRow {
    int q12q21;  // +1 or -1
    int eps;     // +1, -1, or 0 for "either"
    Q22Class q22;
    GhostClass ghost;
    int base;
    bool plus_ghost;
};

const TableRow kTable[] = {
    {+1, 0, Q22Class::OneOrNotRoot, GhostClass::Zero, 3, false},
    {+1, 0, Q22Class::RootNotOne, GhostClass::Zero, 2, false},
    {+1, +1, Q22Class::One, GhostClass::Discrete, 3, true},
    {+1, +1, Q22Class::MinusOne, GhostClass::Discrete, 2, false},
    {+1, +1, Q22Class::PrimCubeRoot, GhostClass::One, 2, false},
    {+1, -1, Q22Class::One, GhostClass::Discrete, 3, true},
    {+1, -1, Q22Class::MinusOne, GhostClass::Discrete, 2, true},
    {-1, -1, Q22Class::MinusOne, GhostClass::One, 2, false},
};

bool q22_matches(Q22Class cls, const Scalar& q22) {
    auto order = is_root_of_unity(q22);
    switch (cls) {
        case Q22Class::One: return q22 == Scalar(1);
        case Q22Class::MinusOne: return q22 == Scalar(-1);
        case Q22Class::PrimCubeRoot: return order.has_value() && *order == 3;
        case Q22Class::RootNotOne: return order.has_value() && *order > 1;
        case Q22Class::OneOrNotRoot: return q22 == Scalar(1) || !order.has_value();
    }
    return false;
}

bool ghost_matches(GhostClass cls, const Scalar& ghost) {
    switch (cls) {
        case GhostClass::Zero: return ghost.is_zero();
        case GhostClass::Discrete: return ghost_is_discrete(ghost);
        case GhostClass::One: return ghost == Scalar(1);
    }
    return false;
}

}  // namespace

GkdimVerdict table1_lookup(const Scalar& q12q21, const Scalar& eps, const Scalar& q22,
                           const Scalar& ghost) {
    if (q12q21.is_zero() || q22.is_zero())
        throw std::invalid_argument("q parameters must be nonzero");
    const int eps_sign = eps == Scalar(1) ? +1 : eps == Scalar(-1) ? -1 : 0;
    if (eps_sign == 0) return {GkdimVerdict::Outcome::NotInTable, 0, ""};
    for (const TableRow& row : kTable) {
        if (!(q12q21 == Scalar(row.q12q21))) continue;
        if (row.eps != 0 && row.eps != eps_sign) continue;
        if (!q22_matches(row.q22, q22)) continue;
        if (!ghost_matches(row.ghost, ghost)) continue;
        GkdimVerdict v{GkdimVerdict::Outcome::Finite, row.base, ""};
        if (row.plus_ghost) {
            v.value += ghost.integer_value();
            v.formula = "G + " + std::to_string(row.base);
        } else {
            v.formula = std::to_string(row.base);
        }
        return v;
    }
    return {GkdimVerdict::Outcome::Infinite, 0, ""};
}

BlockPointParams adjoin_primitive_params(const YDTriple& t, const FreeElement& z, int m) {
    if (z.is_zero() || z.homogeneous_degree() != m)
        throw std::invalid_argument("candidate must be homogeneous of the stated degree");
    auto violations = validate_yd_triple(t);
    if (!violations.empty())
        throw std::invalid_argument("invalid YD-triple: " + violations.front());
    const Scalar eps = t.eps();
    const Scalar weight = eps.pow(m);  // forced on any degree-m weight vector

    // Weight-vector check: g . z - weight z must vanish modulo the ideal
    // of lower-degree relations (the candidate lives in that quotient).
    FreeElement defect = act(t, t.g, z) - z.scaled(weight);
    if (!defect.is_zero()) {
        const BraidedVectorSpace v = realize_braiding(t);
        auto mats = symmetrizer_matrices(v, m);
        EchelonBasis ideal = ideal_slice(v, mats, m);
        std::vector<Scalar> vec = ideal.reduce(element_to_tensor(v.dim(), m, defect));
        FreeElement residue = tensor_to_element(v.dim(), m, vec);
        if (!residue.is_zero())
            throw std::invalid_argument("candidate is not a weight vector; residual term " +
                                        word_str(residue.terms().begin()->first));
    }

    BlockPointParams p;
    p.eps = eps;
    p.q12 = weight;
    p.q21 = eps.pow(m);
    p.q22 = eps.pow(static_cast<long>(m) * m);
    p.a = Scalar(m) * eps.inverse() * t.eta_of(t.g);
    return p;
}

}  // namespace planelift
