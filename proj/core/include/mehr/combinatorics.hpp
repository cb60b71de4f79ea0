#pragma once

#include <span>

#include "mehr/rational.hpp"

namespace mehr {

Int factorial(int n);

/// C(n, k); zero for k < 0 or k > n. Requires n >= 0.
Int binomial(int n, int k);

/// C(n; parts...) with sum(parts) == n.
Int multinomial(int n, std::span<const int> parts);

/// Stirling numbers of the second kind via S(i,k) = k*S(i-1,k) + S(i-1,k-1).
Int stirling2(int i, int k);

/// k-th forward difference at 0: sum_j (-1)^(k-j) C(k,j) f(j), where
/// values = f(0), ..., f(k) at least.
Rat finite_difference(std::span<const Rat> values, int k);

}  // namespace mehr
