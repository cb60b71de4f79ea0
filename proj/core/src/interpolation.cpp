#include "mehr/interpolation.hpp"

#include <set>
#include <stdexcept>

namespace mehr {

Polynomial interpolate_univariate(std::span<const std::pair<Int, Rat>> samples) {
    if (samples.empty()) throw std::invalid_argument("interpolation needs at least one sample");
    std::set<Int> nodes;
    for (const auto& [x, y] : samples)
        if (!nodes.insert(x).second) throw std::invalid_argument("degenerate interpolation nodes");

    Polynomial out;
    for (size_t i = 0; i < samples.size(); ++i) {
        Polynomial basis = Polynomial::constant(1);
        Rat denom = 1;
        for (size_t j = 0; j < samples.size(); ++j) {
            if (j == i) continue;
            basis = basis * Polynomial{Rat(-samples[j].first), Rat(1)};
            denom *= Rat(samples[i].first - samples[j].first);
        }
        out += basis * (samples[i].second / denom);
    }
    return out;
}

namespace {

// Falling factorial n(n-1)...(n-m+1), the Newton basis element for the
// integer nodes 0..m-1.
Polynomial newton_basis(int m) {
    Polynomial out = Polynomial::constant(1);
    for (int t = 0; t < m; ++t) out = out * Polynomial{Rat(-t), Rat(1)};
    return out;
}

}  // namespace

MultivariatePolynomial interpolate_multivariate(
    std::span<const int> degree_bounds,
    const std::function<Rat(std::span<const int>)>& evaluate) {
    const int k = static_cast<int>(degree_bounds.size());
    for (int b : degree_bounds)
        if (b < 0) throw std::invalid_argument("negative degree bound");

    // flat grid storage, axis 0 fastest
    std::vector<size_t> stride(static_cast<size_t>(k), 1);
    size_t cells = 1;
    for (int v = 0; v < k; ++v) {
        stride[static_cast<size_t>(v)] = cells;
        cells *= static_cast<size_t>(degree_bounds[static_cast<size_t>(v)]) + 1;
    }

    std::vector<Rat> table(cells);
    std::vector<int> node(static_cast<size_t>(k), 0);
    for (size_t cell = 0; cell < cells; ++cell) {
        size_t rest = cell;
        for (int v = 0; v < k; ++v) {
            const size_t extent = static_cast<size_t>(degree_bounds[static_cast<size_t>(v)]) + 1;
            node[static_cast<size_t>(v)] = static_cast<int>(rest % extent);
            rest /= extent;
        }
        table[cell] = evaluate(node);
    }

    // divided differences along each axis in turn (unit-spaced nodes)
    for (int v = 0; v < k; ++v) {
        const int extent = degree_bounds[static_cast<size_t>(v)] + 1;
        const size_t step = stride[static_cast<size_t>(v)];
        for (size_t base = 0; base < cells; ++base) {
            const size_t pos_in_axis = (base / step) % static_cast<size_t>(extent);
            if (pos_in_axis != 0) continue;
            for (int m = 1; m < extent; ++m)
                for (int t = extent - 1; t >= m; --t)
                    table[base + static_cast<size_t>(t) * step] =
                        (table[base + static_cast<size_t>(t) * step] -
                         table[base + static_cast<size_t>(t - 1) * step]) /
                        Rat(m);
        }
    }

    std::vector<Polynomial> bases;
    int max_bound = 0;
    for (int b : degree_bounds) max_bound = std::max(max_bound, b);
    for (int m = 0; m <= max_bound; ++m) bases.push_back(newton_basis(m));

    MultivariatePolynomial result(k);
    std::vector<int> beta(static_cast<size_t>(k), 0);
    std::vector<int> alpha(static_cast<size_t>(k), 0);
    for (size_t cell = 0; cell < cells; ++cell) {
        if (table[cell] == 0) continue;
        size_t rest = cell;
        for (int v = 0; v < k; ++v) {
            const size_t extent = static_cast<size_t>(degree_bounds[static_cast<size_t>(v)]) + 1;
            beta[static_cast<size_t>(v)] = static_cast<int>(rest % extent);
            rest /= extent;
        }
        // expand c_beta * prod_v N_{beta_v}(n_v) into monomials
        std::vector<std::pair<std::vector<int>, Rat>> expansion = {{alpha, table[cell]}};
        for (auto& a : expansion[0].first) a = 0;
        for (int v = 0; v < k; ++v) {
            const Polynomial& nb = bases[static_cast<size_t>(beta[static_cast<size_t>(v)])];
            std::vector<std::pair<std::vector<int>, Rat>> next;
            for (const auto& [exps, c] : expansion) {
                for (int e = 0; e <= nb.degree(); ++e) {
                    if (nb.coeff(e) == 0) continue;
                    auto exps2 = exps;
                    exps2[static_cast<size_t>(v)] = e;
                    next.emplace_back(std::move(exps2), c * nb.coeff(e));
                }
            }
            expansion = std::move(next);
        }
        for (auto& [exps, c] : expansion) result.add_term(std::move(exps), c);
    }
    return result;
}

}  // namespace mehr
