#pragma once

#include <cstdint>
#include <vector>

#include "mehr/ehrhart.hpp"
#include "mehr/minkowski_family.hpp"
#include "mehr/parallel.hpp"
#include "mehr/polynomial.hpp"

namespace mehr {

/// A fixed collection P_1..P_k with its Minkowski subset sums precomputed.
class PolytopeCollection {
public:
    explicit PolytopeCollection(std::vector<LatticePolytope> polytopes);

    int size() const { return family_.part_count(); }
    int ambient_dimension() const { return family_.ambient_dimension(); }
    /// dim(P_1 + ... + P_k), the degree bound of the mixed Ehrhart polynomial.
    int sum_dimension() const { return family_.full_sum().dim(); }
    const LatticePolytope& polytope(int i) const { return family_.part(i); }
    const MinkowskiFamily& family() const { return family_; }
    bool all_full_dimensional() const;

private:
    MinkowskiFamily family_;
};

struct MixedEhrhartResult {
    Polynomial polynomial;            // ME(n)
    std::vector<Rat> coefficients;    // me_0 .. me_d, d = sum_dimension
    Int dmv;                          // ME(1)
};

/// Binomial-basis coefficients of ME; entries are integers but may be
/// negative, unlike the h*-vector of a single polytope.
struct MixedHStarVector {
    std::vector<Int> entries;  // length degree + 1
    int degree = 0;
    bool operator==(const MixedHStarVector&) const = default;
};

/// Per-subset count ledger row for traced runs; subsets are 1-based index
/// lists ordered by size then lexicographically.
struct SubsetCount {
    std::vector<int> subset;
    std::int64_t points = 0;
};

/// Inclusion-exclusion over all subset sums (the empty sum is the origin).
Int dmv(const PolytopeCollection& c, const Parallelism& par = {});
Int dmv(const PolytopeCollection& c, std::vector<SubsetCount>* trace, const Parallelism& par = {});

/// Alternating sum of the subset-sum Ehrhart polynomials.
MixedEhrhartResult mixed_ehrhart(const PolytopeCollection& c, const Parallelism& par = {});

/// me_i as the sum of the multivariate coefficients e_alpha over alpha >= 1
/// with |alpha| = i. Computed independently of mixed_ehrhart.
std::vector<Rat> me_from_multivariate(const PolytopeCollection& c, const Parallelism& par = {});

/// Leading coefficient from the mixed-volume table. Requires a
/// full-dimensional sum.
Rat me_top(const PolytopeCollection& c, const Parallelism& par = {});

/// Second-highest coefficient via the facet normals of the full sum and the
/// mixed volumes of the projected faces. Requires every P_i full-dimensional.
Rat me_second(const PolytopeCollection& c, const Parallelism& par = {});

/// MV_d(P_1,...,P_d) for k = d; also checks ME is the pure monomial
/// d! MV n^d.
Rat bernstein_mixed_volume(const PolytopeCollection& c, const Parallelism& par = {});

/// Binomial-basis coefficients of ME; cross-checked against the direct
/// alternating h*-formula whenever all P_i are full-dimensional.
MixedHStarVector mixed_hstar(const PolytopeCollection& c, const Parallelism& par = {});

/// ME of k copies of P evaluated from the h*-vector of P alone.
Polynomial single_polytope_me(const LatticePolytope& p, int k);

/// DMV of k copies of P as the weighted h*-sum sum_j C(d-j, d-k) h*_j(P).
Int single_polytope_dmv(const LatticePolytope& p, int k);

/// Counts lattice points of the full sum lying in no proper subset sum.
/// Requires all P_i to contain the origin and complementary directions
/// ("complementary-dimension hypothesis fails").
Int complementary_dmv_oracle(const PolytopeCollection& c);

/// Closed-form me-coefficients of k unit d-cubes: C(d,i) k! S(i,k).
std::vector<Rat> cube_reference(int d, int k);

}  // namespace mehr
