#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "mehr/multivariate.hpp"
#include "mehr/polynomial.hpp"
#include "mehr/rational.hpp"

namespace mehr {

/// Lagrange interpolation through exact samples (node, value). Nodes must be
/// pairwise distinct ("degenerate interpolation nodes" otherwise); the result
/// has degree < samples.size() and matches every sample exactly.
Polynomial interpolate_univariate(std::span<const std::pair<Int, Rat>> samples);

/// Tensor-product Newton interpolation on the grid {0..D_1} x ... x {0..D_k}.
/// The callback is queried once per grid node; the result has degree <= D_i
/// in variable i and reproduces the callback on the whole grid.
MultivariatePolynomial interpolate_multivariate(
    std::span<const int> degree_bounds,
    const std::function<Rat(std::span<const int>)>& evaluate);

}  // namespace mehr
