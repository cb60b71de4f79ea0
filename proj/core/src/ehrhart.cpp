#include "mehr/ehrhart.hpp"

#include <stdexcept>

#include "mehr/combinatorics.hpp"
#include "mehr/binomial_basis.hpp"
#include "mehr/interpolation.hpp"

namespace mehr {

EhrhartPolynomial ehrhart(const LatticePolytope& p) {
    const int m = p.dim();
    std::vector<std::pair<Int, Rat>> samples;
    samples.reserve(static_cast<size_t>(m) + 1);
    for (int n = 0; n <= m; ++n)
        samples.emplace_back(Int(n), Rat(count_points(dilate(p, n)).total));
    Polynomial poly = interpolate_univariate(samples);
    for (int n = m + 1; n <= m + 2; ++n) {
        const Rat predicted = poly(Rat(n));
        const std::int64_t counted = count_points(dilate(p, n)).total;
        if (predicted != Rat(counted))
            throw std::logic_error("ehrhart held-out validation failed");
    }
    if (poly.degree() != m || poly.leading_coefficient() <= 0 || poly(0) != 1)
        throw std::logic_error("ehrhart polynomial violates its invariants");
    return {std::move(poly), m};
}

MultivariatePolynomial multivariate_ehrhart(const MinkowskiFamily& family, const Parallelism& par) {
    const int k = family.part_count();
    std::vector<int> bounds(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) bounds[static_cast<size_t>(i)] = family.part(i).dim();

    // precompute all grid counts (these are the expensive evaluations)
    size_t cells = 1;
    for (int b : bounds) cells *= static_cast<size_t>(b) + 1;
    std::vector<std::int64_t> counts(cells);
    auto node_of = [&](size_t cell) {
        std::vector<Coord> node(static_cast<size_t>(k));
        for (int v = 0; v < k; ++v) {
            const size_t extent = static_cast<size_t>(bounds[static_cast<size_t>(v)]) + 1;
            node[static_cast<size_t>(v)] = static_cast<Coord>(cell % extent);
            cell /= extent;
        }
        return node;
    };
    parallel_for(static_cast<int>(cells), par, [&](int cell) {
        counts[static_cast<size_t>(cell)] =
            count_points(family.weighted_sum(node_of(static_cast<size_t>(cell)))).total;
    });

    auto lookup = [&](std::span<const int> node) {
        size_t cell = 0, stride = 1;
        for (int v = 0; v < k; ++v) {
            cell += static_cast<size_t>(node[static_cast<size_t>(v)]) * stride;
            stride *= static_cast<size_t>(bounds[static_cast<size_t>(v)]) + 1;
        }
        return Rat(counts[cell]);
    };
    MultivariatePolynomial e = interpolate_multivariate(bounds, lookup);

    for (int i = 0; i < k; ++i)
        if (e.degree_in(i) != family.part(i).dim())
            throw std::logic_error("multivariate enumerator has wrong per-variable degree");
    if (e.total_degree() != family.full_sum().dim())
        throw std::logic_error("multivariate enumerator has wrong total degree");

    // held-out validation at two nodes just outside the grid
    for (int variant = 0; variant < 2; ++variant) {
        std::vector<Coord> node(static_cast<size_t>(k));
        std::vector<Rat> rat_node(static_cast<size_t>(k));
        for (int v = 0; v < k; ++v) {
            Coord w = bounds[static_cast<size_t>(v)] + 1 + (variant == 1 && v == 0 ? 1 : 0);
            node[static_cast<size_t>(v)] = w;
            rat_node[static_cast<size_t>(v)] = Rat(static_cast<long>(w));
        }
        const std::int64_t counted = count_points(family.weighted_sum(node)).total;
        if (e.evaluate(rat_node) != Rat(counted))
            throw std::logic_error("multivariate held-out validation failed");
    }
    return e;
}

MultivariatePolynomial multivariate_ehrhart(std::span<const LatticePolytope> polytopes,
                                            const Parallelism& par) {
    MinkowskiFamily family(std::vector<LatticePolytope>(polytopes.begin(), polytopes.end()));
    return multivariate_ehrhart(family, par);
}

HStarVector hstar_from_polynomial(const EhrhartPolynomial& e) {
    const BinomialBasisVector basis = to_binomial_basis(e.polynomial, e.dimension);
    HStarVector h;
    h.degree = e.dimension;
    h.entries.reserve(basis.entries.size());
    Int sum = 0;
    for (const Rat& q : basis.entries) {
        if (!is_integral(q)) throw std::invalid_argument("input is not an Ehrhart polynomial");
        h.entries.push_back(q.get_num());
        if (q < 0) throw std::invalid_argument("input is not an Ehrhart polynomial");
        sum += q.get_num();
    }
    if (h.entries[0] != 1) throw std::invalid_argument("input is not an Ehrhart polynomial");
    if (Rat(sum) != e.polynomial.leading_coefficient() * Rat(factorial(e.dimension)))
        throw std::logic_error("h* sum does not match the normalized volume");
    return h;
}

Rat volume(const LatticePolytope& p) {
    const EhrhartPolynomial e = p.dim() == p.ambient_dimension()
                                    ? ehrhart(p)
                                    : ehrhart(affine_hull_coordinates(p));
    return e.dimension == 0 ? Rat(1) : e.polynomial.coeff(e.dimension);
}

namespace {

void compositions(int total, int parts, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        prefix.push_back(total);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        prefix.push_back(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

MixedVolumeTable mixed_volume_table(const MinkowskiFamily& family, const Parallelism& par) {
    const int d = family.ambient_dimension();
    if (family.full_sum().dim() != d) throw std::invalid_argument("sum not full-dimensional");
    const MultivariatePolynomial top = multivariate_ehrhart(family, par).homogeneous_part(d);

    MixedVolumeTable table;
    table.arity = family.part_count();
    table.dimension = d;
    std::vector<std::vector<int>> alphas;
    std::vector<int> prefix;
    compositions(d, family.part_count(), prefix, alphas);
    for (const auto& alpha : alphas) {
        const Rat mv = top.coefficient(alpha) / Rat(multinomial(d, alpha));
        if (mv < 0) throw std::logic_error("negative mixed volume");
        table.entries.emplace(alpha, mv);
    }
    return table;
}

MixedVolumeTable mixed_volume_table(std::span<const LatticePolytope> polytopes,
                                    const Parallelism& par) {
    MinkowskiFamily family(std::vector<LatticePolytope>(polytopes.begin(), polytopes.end()));
    return mixed_volume_table(family, par);
}

}  // namespace mehr
