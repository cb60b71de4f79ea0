#include "mehr/binomial_basis.hpp"

#include <stdexcept>

#include "mehr/combinatorics.hpp"

namespace mehr {

Polynomial binomial_basis_polynomial(int d, int j) {
    if (d < 0) throw std::invalid_argument("negative ambient degree");
    // C(n+d-j, d) = (n+d-j)(n+d-j-1)...(n-j+1) / d!
    Polynomial out = Polynomial::constant(1);
    for (int t = 0; t < d; ++t)
        out = out * Polynomial{Rat(d - j - t), Rat(1)};
    return out / Rat(factorial(d));
}

BinomialBasisVector to_binomial_basis(const Polynomial& p, int d) {
    if (d < 0) throw std::invalid_argument("negative ambient degree");
    if (p.degree() > d) throw std::invalid_argument("degree exceeds ambient dimension");
    // Multiplying the series sum_n p(n) z^n by (1-z)^(d+1) truncates it to the
    // numerator polynomial; its coefficients are the basis coordinates.
    BinomialBasisVector h;
    h.ambient_degree = d;
    h.entries.resize(static_cast<size_t>(d) + 1);
    std::vector<Rat> values(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) values[static_cast<size_t>(i)] = p(Rat(i));
    for (int j = 0; j <= d; ++j) {
        Rat acc = 0;
        for (int i = 0; i <= j; ++i) {
            Rat term = Rat(binomial(d + 1, j - i)) * values[static_cast<size_t>(i)];
            if ((j - i) % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        h.entries[static_cast<size_t>(j)] = acc;
    }
    return h;
}

Polynomial from_binomial_basis(const BinomialBasisVector& h) {
    if (std::cmp_not_equal(h.entries.size(), h.ambient_degree + 1))
        throw std::invalid_argument("binomial basis vector has wrong length");
    Polynomial out;
    for (int j = 0; j <= h.ambient_degree; ++j)
        out += binomial_basis_polynomial(h.ambient_degree, j) * h.entries[static_cast<size_t>(j)];
    return out;
}

}  // namespace mehr
