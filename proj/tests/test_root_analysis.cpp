#include <doctest.h>

#include "mehr/binomial_basis.hpp"
#include "mehr/combinatorics.hpp"
#include "mehr/root_analysis.hpp"

using namespace mehr;

namespace {

LatticePolytope cube(int d, Coord scale = 1) {
    std::vector<Point> corners;
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        Point p(static_cast<size_t>(d), 0);
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) p[static_cast<size_t>(i)] = scale;
        corners.push_back(std::move(p));
    }
    return LatticePolytope(d, std::move(corners));
}

LatticePolytope simplex(int d, Coord scale = 1) {
    std::vector<Point> gens = {Point(static_cast<size_t>(d), 0)};
    for (int i = 0; i < d; ++i) {
        Point p(static_cast<size_t>(d), 0);
        p[static_cast<size_t>(i)] = scale;
        gens.push_back(std::move(p));
    }
    return LatticePolytope(d, std::move(gens));
}

PolytopeCollection copies(const LatticePolytope& p, int k) {
    return PolytopeCollection(std::vector<LatticePolytope>(static_cast<size_t>(k), p));
}

Polynomial poly(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

// truncated power series sum_{n<=N} n^d z^n
Polynomial power_series_truncation(int d, int terms) {
    std::vector<Rat> coeffs(static_cast<size_t>(terms) + 1);
    for (long n = 0; n <= terms; ++n) coeffs[static_cast<size_t>(n)] = rat_pow(Rat(n), static_cast<unsigned>(d));
    return Polynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("eulerian polynomials from the recurrence") {
    CHECK(eulerian(1).polynomial == poly({0, 1}));
    CHECK(eulerian(2).polynomial == poly({0, 1, 1}));
    CHECK(eulerian(3).polynomial == poly({0, 1, 4, 1}));
    CHECK(eulerian(4).polynomial == poly({0, 1, 11, 11, 1}));
    CHECK_THROWS_AS(eulerian(0), std::invalid_argument);
}

TEST_CASE("eulerian polynomials satisfy the generating identity") {
    // (1-z)^(d+1) * sum_{n<=2d+2} n^d z^n starts with A_d(z)
    for (int d = 1; d <= 8; ++d) {
        const int terms = 2 * d + 2;
        Polynomial one_minus_z_power = Polynomial::constant(1);
        for (int i = 0; i <= d; ++i) one_minus_z_power = one_minus_z_power * poly({1, -1});
        const Polynomial product = one_minus_z_power * power_series_truncation(d, terms);
        const Polynomial a_d = eulerian(d).polynomial;
        for (int j = 0; j <= terms - (d + 1); ++j) CHECK(product.coeff(j) == a_d.coeff(j));
    }
}

TEST_CASE("eulerian invariants: row sums and palindromy") {
    for (int d = 1; d <= 8; ++d) {
        const Polynomial a = eulerian(d).polynomial;
        Rat sum = 0;
        for (int j = 0; j <= a.degree(); ++j) sum += a.coeff(j);
        CHECK(sum == Rat(factorial(d)));
        for (int j = 1; j <= d; ++j) CHECK(a.coeff(j) == a.coeff(d + 1 - j));
        for (int j = 1; j <= d; ++j) CHECK(a.coeff(j) > 0);
    }
}

TEST_CASE("sturm root counting on published intervals") {
    const Polynomial quadratic = poly({1, 4, 1});  // roots -2 +- sqrt(3)
    CHECK(sturm_real_root_count(quadratic, ratio(-10), ratio(0)) == 2);
    CHECK(sturm_real_root_count(poly({1, 0, 1}), ratio(-10), ratio(10)) == 0);
    CHECK(sturm_real_root_count(eulerian(3).polynomial, ratio(-10), ratio(1)) == 3);
    CHECK_THROWS_WITH_AS(sturm_real_root_count(Polynomial{}, ratio(0), ratio(1)),
                         "zero polynomial", std::invalid_argument);
    CHECK_THROWS_AS(sturm_real_root_count(quadratic, ratio(1), ratio(0)), std::invalid_argument);
}

TEST_CASE("sturm counting against constructed rational roots") {
    // (2z-1)(z+3)(z-5): roots 1/2, -3, 5
    const Polynomial p = poly({1, -2}) * poly({3, 1}) * poly({-5, 1}) * Rat(-1);
    CHECK(sturm_real_root_count(p, ratio(-10), ratio(10)) == 3);
    CHECK(sturm_real_root_count(p, ratio(-10), ratio(0)) == 1);
    CHECK(sturm_real_root_count(p, ratio(0), ratio(1)) == 1);
    CHECK(sturm_real_root_count(p, ratio(-3), ratio(5)) == 2);   // half-open: -3 excluded, 5 included
    CHECK(sturm_real_root_count(p, ratio(-4), ratio(-3)) == 1);  // right endpoint included
    // squares are reduced before counting
    CHECK(sturm_real_root_count(p * p, ratio(-10), ratio(10)) == 3);
}

TEST_CASE("real-rootedness reports") {
    const RootReport a3 = is_real_rooted(poly({0, 6, 24, 6}));  // 6 A_3(z)
    CHECK(a3.real_rooted);
    REQUIRE(a3.roots.size() == 3);
    for (const IsolatedRoot& root : a3.roots) {
        CHECK(root.multiplicity == 1);
        CHECK(root.hi - root.lo < ratio(1, 1024));
    }
    CHECK(a3.roots[0].lo < a3.roots[1].lo);
    CHECK(a3.roots[1].lo < a3.roots[2].lo);
    // the largest root is 0 exactly
    CHECK(a3.roots[2].lo < 0);
    CHECK(a3.roots[2].hi >= 0);

    CHECK_FALSE(is_real_rooted(poly({1, 0, 1})).real_rooted);
    CHECK(is_real_rooted(poly({7})).real_rooted);  // constants are vacuously real-rooted

    // h*-polynomial of the third dilate of the simplex pair
    const RootReport h3 = is_real_rooted(poly({0, 45, 108, 9}));
    CHECK(h3.real_rooted);
    CHECK(h3.roots.size() == 3);
}

TEST_CASE("multiplicities are recovered from the gcd chain") {
    // (z-1)^2 (z+2)
    const Polynomial p = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
    const RootReport report = is_real_rooted(p);
    CHECK(report.real_rooted);
    REQUIRE(report.roots.size() == 2);
    CHECK(report.roots[0].multiplicity == 1);
    CHECK(report.roots[1].multiplicity == 2);

    // (z^2+1)(z-1): one real root out of degree three
    CHECK_FALSE(is_real_rooted(poly({1, 0, 1}) * poly({-1, 1})).real_rooted);
}

TEST_CASE("log-concavity and unimodality") {
    const std::vector<Int> cube_hstar = {1, 4, 1, 0};
    CHECK(is_log_concave(cube_hstar));
    CHECK(is_unimodal(cube_hstar));
    const std::vector<Int> spiky = {1, 0, 1};
    CHECK_FALSE(is_log_concave(spiky));
    const std::vector<Int> scan_row = {0, 45, 108, 9};
    CHECK(is_log_concave(scan_row));
    CHECK(is_unimodal(scan_row));
    CHECK_FALSE(is_unimodal(std::vector<Int>{1, 2, 1, 2}));
    CHECK(is_unimodal(std::vector<Int>{3, 3, 3}));
    CHECK(is_log_concave(std::vector<Int>{5}));
}

TEST_CASE("asymptotic limits carry the leading mixed coefficient") {
    CHECK(asymptotic_limit(copies(cube(3), 2)) == poly({0, 6, 24, 6}));
    CHECK(asymptotic_limit(copies(simplex(3), 2)) == poly({0, 1, 4, 1}));
    CHECK(asymptotic_limit(copies(cube(3), 1)) == poly({0, 1, 4, 1}));  // vol = 1
    CHECK(asymptotic_limit(copies(cube(2), 1)) == poly({0, 1, 1}));
    CHECK_THROWS_WITH_AS(
        asymptotic_limit(PolytopeCollection({cube(2), LatticePolytope(2, {{0, 0}, {1, 0}})})),
        "theorem requires full-dimensional polytopes", std::invalid_argument);
}

TEST_CASE("dilation scan of the simplex pair") {
    const auto reports = scan_dilates(copies(simplex(3), 2), 3);
    REQUIRE(reports.size() == 3);

    CHECK(reports[0].hstar.entries == std::vector<Int>{0, 3, 4, -1});
    CHECK_FALSE(reports[0].positive_tail);

    CHECK(reports[1].hstar.entries == std::vector<Int>{0, 16, 32, 0});
    CHECK_FALSE(reports[1].positive_tail);  // h*_3 vanishes at r = 2

    CHECK(reports[2].hstar.entries == std::vector<Int>{0, 45, 108, 9});
    CHECK(reports[2].positive_tail);
    CHECK(reports[2].real_rooted);
    CHECK(reports[2].log_concave);
    CHECK(reports[2].unimodal);

    // distance to the limit (0,1,4,1): max |h_i/r^3 - limit_i| = 2/r
    CHECK(reports[0].limit_distance == 2);
    CHECK(reports[1].limit_distance == 1);
    CHECK(reports[2].limit_distance == ratio(2, 3));
}

TEST_CASE("find_min_r returns the empirical witness") {
    CHECK(find_min_r(copies(simplex(3), 2), 10) == 3);
    // the cube pair has h*_3(r) = 6r^3 - 6r^2, zero at r = 1, positive after
    CHECK(find_min_r(copies(cube(3), 2), 10) == 2);
    CHECK_FALSE(find_min_r(copies(simplex(3), 2), 2).has_value());
}

TEST_CASE("scan distance shrinks and root positions approach the eulerian roots") {
    const std::vector<PolytopeCollection> collections = {
        copies(cube(3), 2), copies(simplex(3), 2), copies(simplex(2), 2),
        PolytopeCollection({cube(2), simplex(2)})};
    for (const PolytopeCollection& c : collections) {
        const int d = c.ambient_dimension();
        const Polynomial limit = asymptotic_limit(c);
        Rat limit_max = 0;
        for (int i = 0; i <= limit.degree(); ++i) {
            Rat v = limit.coeff(i);
            if (v < 0) v = -v;
            limit_max = std::max(limit_max, v);
        }
        const auto reports = scan_dilates(c, 16);
        for (size_t i = 4; i < reports.size(); ++i)
            CHECK(reports[i].limit_distance <= reports[i - 1].limit_distance);
        CHECK(reports[15].limit_distance < limit_max / 4);

        // at r = 256 every h*-root sits within 1/10 of an eulerian root
        const Polynomial me_at_256 =
            mixed_ehrhart(c).polynomial.scale_variable(Rat(256));
        std::vector<Rat> hstar_coeffs;
        for (const Rat& q : to_binomial_basis(me_at_256, d).entries) hstar_coeffs.push_back(q);
        const RootReport scan_roots = is_real_rooted(Polynomial(std::move(hstar_coeffs)));
        const RootReport limit_roots = is_real_rooted(eulerian(d).polynomial);
        REQUIRE(scan_roots.real_rooted);
        REQUIRE(scan_roots.roots.size() == limit_roots.roots.size());
        for (size_t i = 0; i < scan_roots.roots.size(); ++i) {
            const Rat gap_lo = limit_roots.roots[i].lo - scan_roots.roots[i].hi;
            const Rat gap_hi = scan_roots.roots[i].lo - limit_roots.roots[i].hi;
            CHECK(std::max(gap_lo, gap_hi) < ratio(1, 10));
        }
    }
}

TEST_CASE("eulerian polynomials are real-rooted with simple negative roots") {
    for (int d = 1; d <= 8; ++d) {
        const Polynomial a = eulerian(d).polynomial;
        const RootReport report = is_real_rooted(a);
        CHECK(report.real_rooted);
        REQUIRE(std::cmp_equal(report.roots.size(), d));
        for (const IsolatedRoot& root : report.roots) CHECK(root.multiplicity == 1);
        // all roots bar the one at zero are strictly negative
        for (size_t i = 0; i + 1 < report.roots.size(); ++i) CHECK(report.roots[i].hi < 0);
        CHECK(a.coeff(0) == 0);
        CHECK(sturm_real_root_count(a, ratio(-1, 1024), ratio(1, 1024)) == 1);
    }
}
