#include "mehr/mixed_invariants.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "mehr/binomial_basis.hpp"
#include "mehr/combinatorics.hpp"
#include "mehr/io.hpp"

namespace mehr {

namespace {

int popcount(std::uint32_t mask) { return std::popcount(mask); }

std::vector<int> subset_indices(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i + 1);
    return out;
}

// masks 0..2^k-1 ordered by size, then lexicographically by index list
std::vector<std::uint32_t> subset_order(int k) {
    std::vector<std::uint32_t> masks(size_t(1) << k);
    std::iota(masks.begin(), masks.end(), 0u);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return subset_indices(a) < subset_indices(b);
    });
    return masks;
}

}  // namespace

PolytopeCollection::PolytopeCollection(std::vector<LatticePolytope> polytopes)
    : family_(std::move(polytopes)) {}

bool PolytopeCollection::all_full_dimensional() const {
    for (int i = 0; i < size(); ++i)
        if (polytope(i).dim() != ambient_dimension()) return false;
    return true;
}

Int dmv(const PolytopeCollection& c, const Parallelism& par) { return dmv(c, nullptr, par); }

Int dmv(const PolytopeCollection& c, std::vector<SubsetCount>* trace, const Parallelism& par) {
    const int k = c.size();
    const std::uint32_t subsets = 1u << k;
    std::vector<std::int64_t> counts(subsets);
    counts[0] = 1;  // the empty sum is the origin polytope
    parallel_for(static_cast<int>(subsets) - 1, par, [&](int i) {
        const std::uint32_t mask = static_cast<std::uint32_t>(i) + 1;
        counts[mask] = count_points(c.family().subset_sum(mask)).total;
    });
    Int acc = 0;
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        if ((k - popcount(mask)) % 2 == 0)
            acc += counts[mask];
        else
            acc -= counts[mask];
    }
    if (log_level() >= LogLevel::Trace)
        for (std::uint32_t mask : subset_order(k)) {
            std::string subset;
            for (int i : subset_indices(mask)) subset += (subset.empty() ? "" : ",") + std::to_string(i);
            log_trace("subset {" + subset + "}: " + std::to_string(counts[mask]) + " points");
        }
    if (trace) {
        trace->clear();
        for (std::uint32_t mask : subset_order(k))
            trace->push_back({subset_indices(mask), counts[mask]});
    }
    return acc;
}

MixedEhrhartResult mixed_ehrhart(const PolytopeCollection& c, const Parallelism& par) {
    const int k = c.size();
    const int d = c.sum_dimension();
    const std::uint32_t subsets = 1u << k;
    std::vector<Polynomial> subsum_ehrhart(subsets);
    subsum_ehrhart[0] = Polynomial::constant(1);
    parallel_for(static_cast<int>(subsets) - 1, par, [&](int i) {
        const std::uint32_t mask = static_cast<std::uint32_t>(i) + 1;
        subsum_ehrhart[mask] = ehrhart(c.family().subset_sum(mask)).polynomial;
    });

    Polynomial me;
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        if ((k - popcount(mask)) % 2 == 0)
            me += subsum_ehrhart[mask];
        else
            me -= subsum_ehrhart[mask];
    }

    MixedEhrhartResult out;
    out.coefficients.resize(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) out.coefficients[static_cast<size_t>(i)] = me.coeff(i);
    if (me.degree() > d) throw std::logic_error("mixed Ehrhart degree exceeds the sum dimension");
    for (int i = 0; i < std::min(k, d + 1); ++i)
        if (out.coefficients[static_cast<size_t>(i)] != 0)
            throw std::logic_error("mixed Ehrhart coefficient below degree k is nonzero");
    out.dmv = to_integer(me(1));
    out.polynomial = std::move(me);
    return out;
}

std::vector<Rat> me_from_multivariate(const PolytopeCollection& c, const Parallelism& par) {
    const int d = c.sum_dimension();
    const MultivariatePolynomial e = multivariate_ehrhart(c.family(), par);
    std::vector<Rat> me(static_cast<size_t>(d) + 1, Rat(0));
    for (const auto& [alpha, coeff] : e.terms()) {
        bool all_positive = true;
        int total = 0;
        for (int a : alpha) {
            if (a < 1) all_positive = false;
            total += a;
        }
        if (!all_positive) continue;
        if (total > d) throw std::logic_error("term of degree above the sum dimension");
        me[static_cast<size_t>(total)] += coeff;
    }
    return me;
}

Rat me_top(const PolytopeCollection& c, const Parallelism& par) {
    const int d = c.ambient_dimension();
    if (c.sum_dimension() != d) throw std::invalid_argument("sum not full-dimensional");
    const MixedVolumeTable table = mixed_volume_table(c.family(), par);
    Rat acc = 0;
    for (const auto& [alpha, mv] : table.entries) {
        bool all_positive = true;
        for (int a : alpha)
            if (a < 1) all_positive = false;
        if (!all_positive) continue;
        acc += Rat(multinomial(d, alpha)) * mv;
    }
    return acc;
}

Rat me_second(const PolytopeCollection& c, const Parallelism& par) {
    const int d = c.ambient_dimension();
    if (!c.all_full_dimensional())
        throw std::invalid_argument("corollary requires full-dimensional polytopes");
    const std::vector<Point> normals = facet_normals(c.family().full_sum());
    std::vector<Rat> per_normal(normals.size(), Rat(0));
    parallel_for(static_cast<int>(normals.size()), par, [&](int i) {
        const Point& a = normals[static_cast<size_t>(i)];
        std::vector<LatticePolytope> faces;
        faces.reserve(static_cast<size_t>(c.size()));
        for (int j = 0; j < c.size(); ++j)
            faces.push_back(face_in_direction(c.polytope(j), a).face);
        // the face collection lives in Z^(d-1) and sums to a facet, so its
        // top mixed coefficient is exactly the inner sum of the corollary
        PolytopeCollection projected(std::move(faces));
        if (projected.sum_dimension() != d - 1)
            throw std::logic_error("projected facet collection has wrong dimension");
        per_normal[static_cast<size_t>(i)] = me_top(projected);
    });
    Rat acc = 0;
    for (const Rat& v : per_normal) acc += v;
    return acc / 2;
}

Rat bernstein_mixed_volume(const PolytopeCollection& c, const Parallelism& par) {
    const int d = c.ambient_dimension();
    if (c.size() != d) throw std::invalid_argument("requires exactly d polytopes in dimension d");
    if (c.sum_dimension() != d) throw std::invalid_argument("sum not full-dimensional");
    const MixedEhrhartResult me = mixed_ehrhart(c, par);
    for (int i = 0; i < d; ++i)
        if (me.coefficients[static_cast<size_t>(i)] != 0)
            throw std::logic_error("internal consistency error: lower-order coefficients nonzero");
    return me.coefficients[static_cast<size_t>(d)] / Rat(factorial(d));
}

MixedHStarVector mixed_hstar(const PolytopeCollection& c, const Parallelism& par) {
    const int d = c.sum_dimension();
    const int k = c.size();
    const MixedEhrhartResult me = mixed_ehrhart(c, par);
    const BinomialBasisVector basis = to_binomial_basis(me.polynomial, d);
    MixedHStarVector h;
    h.degree = d;
    for (const Rat& q : basis.entries) {
        if (!is_integral(q)) throw std::logic_error("mixed h* entry is not an integer");
        h.entries.push_back(q.get_num());
    }

    if (c.all_full_dimensional()) {
        // cross-check against the alternating-sum formula over subset h*-vectors
        std::vector<Int> direct(static_cast<size_t>(d) + 1, 0);
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            const HStarVector hs = hstar_from_polynomial(ehrhart(c.family().subset_sum(mask)));
            const bool positive = (k - popcount(mask)) % 2 == 0;
            for (int i = 0; i <= d; ++i) {
                if (positive)
                    direct[static_cast<size_t>(i)] += hs.entries[static_cast<size_t>(i)];
                else
                    direct[static_cast<size_t>(i)] -= hs.entries[static_cast<size_t>(i)];
            }
        }
        for (int i = 0; i <= d; ++i) {
            Int offset = binomial(d, i);
            if ((k + i) % 2 != 0) offset = -offset;
            direct[static_cast<size_t>(i)] += offset;
            if (direct[static_cast<size_t>(i)] != h.entries[static_cast<size_t>(i)])
                throw std::logic_error("mixed h* cross-check failed");
        }
    }
    return h;
}

Polynomial single_polytope_me(const LatticePolytope& p, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (p.dim() != p.ambient_dimension())
        throw std::invalid_argument("proposition requires a full-dimensional polytope");
    const HStarVector h = hstar_from_polynomial(ehrhart(p));
    const int d = h.degree;
    Polynomial me;
    for (int j = 0; j <= d; ++j) {
        if (h.entries[static_cast<size_t>(j)] == 0) continue;
        Polynomial inner;
        for (int i = 0; i <= k; ++i) {
            // C(i*n + d - j, d) as a polynomial in n
            Polynomial basis = Polynomial::constant(1);
            for (int t = 0; t < d; ++t)
                basis = basis * Polynomial{Rat(d - j - t), Rat(i)};
            basis = basis / Rat(factorial(d)) * Rat(binomial(k, i));
            if ((k - i) % 2 == 0)
                inner += basis;
            else
                inner -= basis;
        }
        me += inner * Rat(h.entries[static_cast<size_t>(j)]);
    }
    return me;
}

Int single_polytope_dmv(const LatticePolytope& p, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (p.dim() != p.ambient_dimension())
        throw std::invalid_argument("proposition requires a full-dimensional polytope");
    const HStarVector h = hstar_from_polynomial(ehrhart(p));
    const int d = h.degree;
    Int acc = 0;
    for (int j = 0; j <= d; ++j) acc += binomial(d - j, d - k) * h.entries[static_cast<size_t>(j)];
    return acc;
}

Int complementary_dmv_oracle(const PolytopeCollection& c) {
    const int k = c.size();
    const Point zero(static_cast<size_t>(c.ambient_dimension()), 0);
    int dim_sum = 0;
    for (int i = 0; i < k; ++i) {
        if (c.polytope(i).contains(zero) == Containment::Outside)
            throw std::invalid_argument("complementary-dimension hypothesis fails");
        dim_sum += c.polytope(i).dim();
    }
    if (dim_sum != c.sum_dimension())
        throw std::invalid_argument("complementary-dimension hypothesis fails");

    const std::uint32_t full = (1u << k) - 1;
    Int count = 0;
    for (const Point& z : enumerate_points(c.family().full_sum())) {
        bool in_proper_subsum = false;
        for (std::uint32_t mask = 0; mask < full && !in_proper_subsum; ++mask)
            if (c.family().subset_sum(mask).contains(z) != Containment::Outside)
                in_proper_subsum = true;
        if (!in_proper_subsum) ++count;
    }
    return count;
}

std::vector<Rat> cube_reference(int d, int k) {
    if (d < 1 || k < 1) throw std::invalid_argument("cube reference needs d, k >= 1");
    std::vector<Rat> me(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        me[static_cast<size_t>(i)] = Rat(binomial(d, i) * factorial(k) * stirling2(i, k));
    return me;
}

}  // namespace mehr
