#pragma once

#include <map>
#include <span>
#include <vector>

#include "mehr/enumeration.hpp"
#include "mehr/lattice_polytope.hpp"
#include "mehr/minkowski_family.hpp"
#include "mehr/multivariate.hpp"
#include "mehr/parallel.hpp"
#include "mehr/polynomial.hpp"

namespace mehr {

struct EhrhartPolynomial {
    Polynomial polynomial;
    int dimension = 0;  // degree of the polynomial = dim of the polytope
};

/// h*-vector of a single polytope: non-negative integers with h*_0 = 1.
struct HStarVector {
    std::vector<Int> entries;  // length degree + 1
    int degree = 0;
    bool operator==(const HStarVector&) const = default;
};

/// Normalized mixed volumes MV_d(P_1[a_1], ..., P_k[a_k]) for all
/// multiplicity patterns a with |a| = d.
struct MixedVolumeTable {
    int arity = 0;
    int dimension = 0;
    std::map<std::vector<int>, Rat> entries;
};

/// Interpolates |nP| at n = 0..dim(P) and validates the result against
/// fresh counts at dim(P)+1 and dim(P)+2 before returning it.
EhrhartPolynomial ehrhart(const LatticePolytope& p);

/// The multivariate lattice-point enumerator of n_1 P_1 + ... + n_k P_k,
/// interpolated on the minimal grid and validated at held-out nodes.
MultivariatePolynomial multivariate_ehrhart(const MinkowskiFamily& family,
                                            const Parallelism& par = {});
MultivariatePolynomial multivariate_ehrhart(std::span<const LatticePolytope> polytopes,
                                            const Parallelism& par = {});

/// Basis change of an Ehrhart polynomial; rejects inputs that are not
/// Ehrhart polynomials ("input is not an Ehrhart polynomial").
HStarVector hstar_from_polynomial(const EhrhartPolynomial& e);

/// Normalized lattice volume: the leading Ehrhart coefficient, computed in
/// affine-hull coordinates when the polytope is lower-dimensional.
Rat volume(const LatticePolytope& p);

/// Mixed volumes read off the top-degree part of the multivariate
/// enumerator. The sum of the collection must be full-dimensional.
MixedVolumeTable mixed_volume_table(const MinkowskiFamily& family, const Parallelism& par = {});
MixedVolumeTable mixed_volume_table(std::span<const LatticePolytope> polytopes,
                                    const Parallelism& par = {});

}  // namespace mehr
