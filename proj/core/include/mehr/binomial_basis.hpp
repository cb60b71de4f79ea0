#pragma once

#include <vector>

#include "mehr/polynomial.hpp"
#include "mehr/rational.hpp"

namespace mehr {

/// Coefficients h_0..h_d of a degree-<=d polynomial in the shifted binomial
/// basis C(n+d-j, d), j = 0..d. Always has exactly d+1 entries.
struct BinomialBasisVector {
    std::vector<Rat> entries;
    int ambient_degree = 0;

    bool operator==(const BinomialBasisVector& o) const = default;
};

/// The basis polynomial C(n+d-j, d) as a polynomial in n.
Polynomial binomial_basis_polynomial(int d, int j);

/// Expands p in the basis {C(n+d-j, d)}. Throws std::invalid_argument
/// ("degree exceeds ambient dimension") when degree(p) > d.
BinomialBasisVector to_binomial_basis(const Polynomial& p, int d);

/// Inverse of to_binomial_basis: sum_j h_j * C(n+d-j, d).
Polynomial from_binomial_basis(const BinomialBasisVector& h);

}  // namespace mehr
