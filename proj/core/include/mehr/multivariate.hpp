#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "mehr/polynomial.hpp"
#include "mehr/rational.hpp"

namespace mehr {

/// Sparse multivariate polynomial over the rationals. Terms map exponent
/// tuples of a fixed arity to nonzero coefficients; the ordered map keeps
/// every traversal deterministic.
class MultivariatePolynomial {
public:
    using Exponents = std::vector<int>;

    explicit MultivariatePolynomial(int arity);
    static MultivariatePolynomial constant(int arity, Rat c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    /// Accumulates c into the coefficient of the given exponent tuple.
    void add_term(Exponents alpha, const Rat& c);

    Rat coefficient(const Exponents& alpha) const;
    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(int var) const;

    Rat evaluate(std::span<const Rat> point) const;
    Rat evaluate_at_integers(std::span<const long> point) const;

    /// Substitutes every variable by the same univariate variable n.
    Polynomial diagonal() const;

    /// Terms of exact total degree deg.
    MultivariatePolynomial homogeneous_part(int deg) const;

    MultivariatePolynomial operator+(const MultivariatePolynomial& o) const;
    MultivariatePolynomial operator*(const MultivariatePolynomial& o) const;
    bool operator==(const MultivariatePolynomial& o) const = default;

    std::string str() const;

private:
    int arity_;
    std::map<Exponents, Rat> terms_;
};

}  // namespace mehr
