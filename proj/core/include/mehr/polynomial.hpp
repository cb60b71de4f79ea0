#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mehr/rational.hpp"

namespace mehr {

/// Dense univariate polynomial with exact rational coefficients, stored
/// lowest degree first. Trailing zeros are trimmed; the zero polynomial has
/// an empty coefficient vector and degree() reports -1 as a sentinel for
/// "degree minus infinity".
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs);
    Polynomial(std::initializer_list<Rat> coeffs);

    static Polynomial constant(Rat c);
    static Polynomial monomial(int degree, Rat c);
    /// The variable itself, n.
    static Polynomial variable();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of n^i (zero outside the stored range).
    const Rat& coeff(int i) const;
    Rat leading_coefficient() const;
    std::span<const Rat> coefficients() const { return coeffs_; }

    Rat operator()(const Rat& x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial operator/(const Rat& c) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    bool operator==(const Polynomial& o) const = default;

    /// p(c*n): substitutes a scalar multiple of the variable.
    Polynomial scale_variable(const Rat& c) const;
    Polynomial derivative() const;

    /// Human-readable form, e.g. "6n^3 + 6n^2"; "0" for the zero polynomial.
    std::string str(const std::string& var = "n") const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

Polynomial operator*(const Rat& c, const Polynomial& p);

/// Euclidean division remainder over the rationals. Divisor must be nonzero.
Polynomial polynomial_remainder(const Polynomial& num, const Polynomial& den);

/// Monic gcd over the rationals (1 for coprime inputs, 0 only if both zero).
Polynomial polynomial_gcd(Polynomial a, Polynomial b);

}  // namespace mehr
