#include <doctest.h>

#include <random>

#include "mehr/binomial_basis.hpp"
#include "mehr/combinatorics.hpp"
#include "mehr/interpolation.hpp"
#include "mehr/multivariate.hpp"
#include "mehr/polynomial.hpp"
#include "mehr/rational.hpp"

using namespace mehr;

namespace {

// brute-force |n * simplex_3| for the interpolation oracle
long simplex3_count(long n) {
    long count = 0;
    for (long x = 0; x <= n; ++x)
        for (long y = 0; x + y <= n; ++y)
            for (long z = 0; x + y + z <= n; ++z) ++count;
    return count;
}

Polynomial poly(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("rational serialization round trips") {
    CHECK(to_string(ratio(3, 4)) == "3/4");
    CHECK(to_string(ratio(-6, 4)) == "-3/2");
    CHECK(to_string(ratio(8, 4)) == "2");
    CHECK(parse_rational("3/4") == ratio(3, 4));
    CHECK(parse_rational("-7") == ratio(-7));
    CHECK_THROWS_AS(parse_rational("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(ratio(1, 0), std::invalid_argument);
    CHECK(is_integral(ratio(4, 2)));
    CHECK(to_integer(ratio(4, 2)) == 2);
    CHECK_THROWS_AS(to_integer(ratio(1, 2)), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic and evaluation") {
    const Polynomial p = poly({1, 3, 3, 1});  // (n+1)^3
    CHECK(p.degree() == 3);
    CHECK(p(Rat(2)) == 27);
    CHECK(p(Rat(-1)) == 0);
    CHECK((p * p).degree() == 6);
    CHECK(p - p == Polynomial{});
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(p.scale_variable(Rat(2)) == poly({1, 6, 12, 8}));
    CHECK(p.derivative() == poly({3, 6, 3}));
    CHECK(p.str() == "n^3 + 3*n^2 + 3*n + 1");
    CHECK(Polynomial{}.str() == "0");
}

TEST_CASE("polynomial gcd and remainder") {
    const Polynomial p = poly({-1, 0, 1});       // n^2 - 1
    const Polynomial q = poly({1, 1});           // n + 1
    CHECK(polynomial_remainder(p, q).is_zero());
    CHECK(polynomial_gcd(p, q) == q);
    CHECK(polynomial_gcd(poly({0, 1}), poly({1})) == poly({1}));
}

TEST_CASE("univariate interpolation reproduces the cube example") {
    std::vector<std::pair<Int, Rat>> samples = {
        {Int(0), Rat(1)}, {Int(1), Rat(8)}, {Int(2), Rat(27)}, {Int(3), Rat(64)}};
    CHECK(interpolate_univariate(samples) == poly({1, 3, 3, 1}));
}

TEST_CASE("univariate interpolation of a single node is constant") {
    std::vector<std::pair<Int, Rat>> samples = {{Int(0), Rat(5)}};
    CHECK(interpolate_univariate(samples) == poly({5}));
}

TEST_CASE("univariate interpolation matches brute-force simplex counts") {
    std::vector<std::pair<Int, Rat>> samples;
    for (long n = 0; n <= 3; ++n) samples.emplace_back(Int(n), Rat(simplex3_count(n)));
    const Polynomial p = interpolate_univariate(samples);
    // (n+1)(n+2)(n+3)/6
    CHECK(p == Polynomial{ratio(1), ratio(11, 6), ratio(1), ratio(1, 6)});
    CHECK(p(Rat(4)) == 35);  // held-out node
    CHECK(p(Rat(5)) == simplex3_count(5));
}

TEST_CASE("duplicate interpolation nodes are rejected") {
    std::vector<std::pair<Int, Rat>> samples = {{Int(1), Rat(2)}, {Int(1), Rat(3)}};
    CHECK_THROWS_WITH_AS(interpolate_univariate(samples), "degenerate interpolation nodes",
                         std::invalid_argument);
}

TEST_CASE("multivariate interpolation on a product of segments") {
    const std::vector<int> bounds = {1, 1};
    auto counts = [](std::span<const int> node) {
        return Rat((node[0] + 1) * (node[1] + 1));  // grid counts of n1[0,e1] + n2[0,e2]
    };
    const MultivariatePolynomial e = interpolate_multivariate(bounds, counts);
    CHECK(e.coefficient({0, 0}) == 1);
    CHECK(e.coefficient({1, 0}) == 1);
    CHECK(e.coefficient({0, 1}) == 1);
    CHECK(e.coefficient({1, 1}) == 1);
    CHECK(e.total_degree() == 2);
    CHECK(e.diagonal() == poly({1, 2, 1}));
}

TEST_CASE("multivariate interpolation with zero bounds is constant") {
    const std::vector<int> bounds = {0, 0, 0};
    auto ones = [](std::span<const int>) { return Rat(1); };
    const MultivariatePolynomial e = interpolate_multivariate(bounds, ones);
    CHECK(e == MultivariatePolynomial::constant(3, 1));
}

TEST_CASE("multivariate interpolation covers the univariate cube instance") {
    const std::vector<int> bounds = {3};
    auto cube_counts = [](std::span<const int> node) {
        const long n = node[0];
        return Rat((n + 1) * (n + 1) * (n + 1));
    };
    CHECK(interpolate_multivariate(bounds, cube_counts).diagonal() == poly({1, 3, 3, 1}));
}

TEST_CASE("multivariate interpolation matches a random exact polynomial") {
    std::mt19937_64 rng(7);
    MultivariatePolynomial target(3);
    const std::vector<int> bounds = {2, 3, 1};
    for (int t = 0; t < 8; ++t) {
        std::vector<int> alpha = {static_cast<int>(rng() % 3), static_cast<int>(rng() % 4),
                                  static_cast<int>(rng() % 2)};
        target.add_term(std::move(alpha), ratio(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3));
    }
    auto eval = [&](std::span<const int> node) {
        std::vector<Rat> point;
        for (int v : node) point.emplace_back(v);
        return target.evaluate(point);
    };
    CHECK(interpolate_multivariate(bounds, eval) == target);
}

TEST_CASE("binomial basis matches the published cube h*-vector") {
    const BinomialBasisVector h = to_binomial_basis(poly({1, 3, 3, 1}), 3);
    CHECK(h.entries == std::vector<Rat>{1, 4, 1, 0});
}

TEST_CASE("binomial basis of a basis element is a unit vector") {
    const BinomialBasisVector h = to_binomial_basis(binomial_basis_polynomial(3, 0), 3);
    CHECK(h.entries == std::vector<Rat>{1, 0, 0, 0});
}

TEST_CASE("binomial basis of the mixed cube polynomial") {
    const BinomialBasisVector h = to_binomial_basis(poly({0, 0, 6, 6}), 3);
    CHECK(h.entries == std::vector<Rat>{0, 12, 24, 0});
    // verify by evaluating both presentations at several nodes
    const Polynomial back = from_binomial_basis(h);
    for (long n = 0; n <= 5; ++n) CHECK(back(Rat(n)) == poly({0, 0, 6, 6})(Rat(n)));
}

TEST_CASE("binomial basis rejects degree overflow") {
    CHECK_THROWS_WITH_AS(to_binomial_basis(poly({0, 0, 6, 6}), 2),
                         "degree exceeds ambient dimension", std::invalid_argument);
}

TEST_CASE("binomial basis round trips random rational polynomials") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = static_cast<int>(rng() % 9);
        std::vector<Rat> coeffs;
        for (int i = 0; i <= d; ++i)
            coeffs.push_back(ratio(static_cast<long>(rng() % 21) - 10, 1 + rng() % 6));
        const Polynomial p(std::move(coeffs));
        CHECK(from_binomial_basis(to_binomial_basis(p, d)) == p);
    }
}

TEST_CASE("stirling numbers of the second kind") {
    CHECK(stirling2(2, 2) == 1);
    CHECK(stirling2(1, 3) == 0);
    CHECK(stirling2(2, 3) == 0);
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(5, 1) == 1);
}

TEST_CASE("finite differences match the published examples") {
    std::vector<Rat> squares = {Rat(0), Rat(1), Rat(4)};
    CHECK(finite_difference(squares, 2) == 2);
    std::vector<Rat> cubes = {Rat(0), Rat(1), Rat(8)};
    CHECK(finite_difference(cubes, 2) == 6);
    std::vector<Rat> constant = {Rat(9), Rat(9), Rat(9)};
    CHECK(finite_difference(constant, 1) == 0);
    CHECK(finite_difference(constant, 2) == 0);
    CHECK_THROWS_AS(finite_difference(std::vector<Rat>{Rat(1)}, 1), std::invalid_argument);
}

TEST_CASE("finite differences of powers are k! S(i,k)") {
    for (int i = 0; i <= 8; ++i) {
        for (int k = 0; k <= 8; ++k) {
            std::vector<Rat> values;
            for (long x = 0; x <= k; ++x) values.push_back(rat_pow(Rat(x), static_cast<unsigned>(i)));
            CHECK(finite_difference(values, k) == Rat(factorial(k) * stirling2(i, k)));
        }
    }
}
