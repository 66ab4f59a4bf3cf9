#pragma once

#include <string>
#include <vector>

#include "planelift/braided.hpp"
#include "planelift/freealg.hpp"
#include "planelift/ydcat.hpp"

namespace planelift {

/// Dimensions of the graded components in degrees 0..N.
struct GradedDims {
    std::vector<long> dims;

    friend bool operator==(const GradedDims& a, const GradedDims& b) { return a.dims == b.dims; }
    std::string str() const;
};

/// dims[n] = rank of the quantum symmetrizer S_n, exactly. The cap
/// guards the exponential tensor sizes (default 12 for dim 2, 8 above).
GradedDims nichols_dims(const BraidedVectorSpace& space, int n_max);

int default_degree_cap(int dim);

/// A basis of the new minimal relations of the Nichols algebra in degree
/// n: ker S_n modulo the degree-n slice of the ideal generated by the
/// lower-degree kernels. Elements are monic in their leading word and
/// inter-reduced; empty when the degree contributes no new relations.
std::vector<FreeElement> relation_generators(const BraidedVectorSpace& space, int n);

/// Ghost invariant of a block-plus-point datum.
Scalar ghost_of(const Scalar& eps, const Scalar& a);
bool ghost_is_discrete(const Scalar& ghost);

struct GkdimVerdict {
    enum class Outcome { Finite, Infinite, NotInTable } outcome;
    long value = 0;        // set when Finite
    std::string formula;   // e.g. "G + 3" with G resolved

    bool finite() const { return outcome == Outcome::Finite; }
    std::string str() const;
};

/// Looks up the finite-GKdim classification of a block-plus-point
/// braiding by (q12*q21, eps, q22, ghost). A matching row yields the
/// finite value; no row means the Nichols algebra has infinite GKdim.
/// eps outside {+1,-1} is outside the table's scope.
GkdimVerdict table1_lookup(const Scalar& q12q21, const Scalar& eps, const Scalar& q22,
                           const Scalar& ghost);

/// Parameters of the 3-dimensional braiding obtained by adjoining a
/// degree-m primitive candidate z to the 2-dimensional module of a
/// YD-triple: q12 = weight of z under g, q21 = chi(g)^m, q22 = eps^{m^2},
/// a = m eps^{-1} eta(g). The weight-vector condition is verified with
/// the defect reduced modulo the ideal of lower-degree symmetrizer
/// kernels; a surviving term is reported in the error.
BlockPointParams adjoin_primitive_params(const YDTriple& t, const FreeElement& z, int m);

}  // namespace planelift
