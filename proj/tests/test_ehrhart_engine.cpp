#include <doctest.h>

#include <random>

#include "mehr/combinatorics.hpp"
#include "mehr/ehrhart.hpp"
#include "mehr/minkowski_family.hpp"

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

LatticePolytope segment(int d, int axis, Coord len) {
    Point end(static_cast<size_t>(d), 0);
    end[static_cast<size_t>(axis)] = len;
    return LatticePolytope(d, {Point(static_cast<size_t>(d), 0), std::move(end)});
}

LatticePolytope random_polytope(std::mt19937_64& rng, int d) {
    const int n = 4 + static_cast<int>(rng() % 5);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        Point p(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) p[static_cast<size_t>(j)] = static_cast<Coord>(rng() % 4);
        pts.push_back(std::move(p));
    }
    return LatticePolytope(d, std::move(pts));
}

Polynomial poly(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("ehrhart polynomials of the basic bodies") {
    CHECK(ehrhart(cube(3)).polynomial == poly({1, 3, 3, 1}));
    CHECK(ehrhart(LatticePolytope::single_point({4, 4})).polynomial == poly({1}));
    // 2 * simplex_3: counts 1, 10, 35, 84 interpolate to C(2n+3, 3)
    const EhrhartPolynomial e = ehrhart(simplex(3, 2));
    CHECK(e.dimension == 3);
    CHECK(e.polynomial == Polynomial{ratio(1), ratio(11, 3), ratio(4), ratio(4, 3)});
    CHECK(e.polynomial(4) == 165);
}

TEST_CASE("ehrhart of a lower-dimensional polytope has the affine dimension") {
    const LatticePolytope diag(3, {{0, 0, 0}, {1, 1, 0}, {2, 0, 0}});
    const EhrhartPolynomial e = ehrhart(diag);
    CHECK(e.dimension == 2);
    CHECK(e.polynomial.degree() == 2);
}

TEST_CASE("ehrhart and volume on a skewed affine hull") {
    // conv{3e1, 3e2, 3e3}: E(n) = C(3n+2, 2), normalized area 9/2
    const LatticePolytope tri(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
    const EhrhartPolynomial e = ehrhart(tri);
    CHECK(e.polynomial == Polynomial{ratio(1), ratio(9, 2), ratio(9, 2)});
    CHECK(volume(tri) == ratio(9, 2));
    CHECK(hstar_from_polynomial(e).entries == std::vector<Int>{1, 7, 1});
}

TEST_CASE("multivariate enumerator of two axis segments") {
    const std::vector<LatticePolytope> parts = {segment(2, 0, 1), segment(2, 1, 1)};
    const MultivariatePolynomial e = multivariate_ehrhart(parts);
    CHECK(e.coefficient({0, 0}) == 1);
    CHECK(e.coefficient({1, 0}) == 1);
    CHECK(e.coefficient({0, 1}) == 1);
    CHECK(e.coefficient({1, 1}) == 1);
}

TEST_CASE("multivariate enumerator of the cube pair is (n1+n2+1)^3") {
    const LatticePolytope c = cube(3);
    const MultivariatePolynomial e = multivariate_ehrhart(std::vector<LatticePolytope>{c, c});
    CHECK(e.total_degree() == 3);
    CHECK(e.coefficient({0, 0}) == 1);
    CHECK(e.coefficient({1, 1}) == 6);   // 3! / (1! 1! 1!) over the cross terms
    CHECK(e.coefficient({1, 2}) == 3);
    CHECK(e.coefficient({3, 0}) == 1);
    CHECK(e.coefficient({2, 0}) == 3);
}

TEST_CASE("diagonal specialization equals the ehrhart polynomial of the sum") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 6; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 3);
        const int k = 1 + static_cast<int>(rng() % 3);
        std::vector<LatticePolytope> parts;
        for (int i = 0; i < k; ++i) parts.push_back(random_polytope(rng, d));
        MinkowskiFamily family(parts);
        CHECK(multivariate_ehrhart(family).diagonal() == ehrhart(family.full_sum()).polynomial);
    }
}

TEST_CASE("h*-vectors of the basic bodies") {
    CHECK(hstar_from_polynomial(ehrhart(cube(3))).entries ==
          std::vector<Int>{1, 4, 1, 0});
    for (int d = 1; d <= 4; ++d) {
        std::vector<Int> expected(static_cast<size_t>(d) + 1, 0);
        expected[0] = 1;
        CHECK(hstar_from_polynomial(ehrhart(simplex(d))).entries == expected);
    }
    CHECK(hstar_from_polynomial(ehrhart(simplex(3, 2))).entries ==
          std::vector<Int>{1, 6, 1, 0});
}

TEST_CASE("h* satisfies the count and interior identities") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 3);
        const LatticePolytope p = random_polytope(rng, d);
        const HStarVector h = hstar_from_polynomial(ehrhart(p));
        const CountResult count = count_points(p);
        CHECK(h.entries[0] == 1);
        if (p.dim() >= 1) CHECK(h.entries[1] == Int(count.total) - (p.dim() + 1));
        CHECK(h.entries[static_cast<size_t>(h.degree)] == Int(count.interior));
        Int sum = 0;
        for (const Int& e : h.entries) sum += e;
        CHECK(Rat(sum) == volume(p) * Rat(factorial(p.dim())));
    }
}

TEST_CASE("hstar rejects non-Ehrhart polynomials") {
    EhrhartPolynomial fake;
    fake.polynomial = Polynomial{ratio(1), ratio(1, 2)};
    fake.dimension = 1;
    CHECK_THROWS_WITH_AS(hstar_from_polynomial(fake), "input is not an Ehrhart polynomial",
                         std::invalid_argument);
}

TEST_CASE("volumes") {
    CHECK(volume(cube(3)) == 1);
    CHECK(volume(cube(3, 2)) == 8);
    CHECK(volume(simplex(3)) == ratio(1, 6));
    CHECK(volume(simplex(2)) == ratio(1, 2));
    // lower-dimensional: normalized lattice volume inside the affine hull
    CHECK(volume(LatticePolytope(2, {{0, 0}, {2, 2}})) == 2);
    CHECK(volume(LatticePolytope::origin(3)) == 1);
}

TEST_CASE("mixed volume table of two axis segments") {
    const MixedVolumeTable t =
        mixed_volume_table(std::vector<LatticePolytope>{segment(2, 0, 1), segment(2, 1, 1)});
    CHECK(t.entries.at({1, 1}) == ratio(1, 2));
    CHECK(t.entries.at({2, 0}) == 0);  // a segment has no area
    CHECK(t.entries.at({0, 2}) == 0);
}

TEST_CASE("mixed volume table diagonal entries are the volume") {
    const LatticePolytope c = cube(3);
    const MixedVolumeTable t = mixed_volume_table(std::vector<LatticePolytope>{c, c});
    for (const auto& [alpha, mv] : t.entries) CHECK(mv == 1);
    CHECK(t.entries.at({3, 0}) == 1);
    CHECK(t.entries.at({1, 2}) == 1);
}

TEST_CASE("mixed volume table is symmetric under simultaneous permutation") {
    std::mt19937_64 rng(29);
    const LatticePolytope a = random_polytope(rng, 2);
    const LatticePolytope b = random_polytope(rng, 2);
    const MixedVolumeTable ab = mixed_volume_table(std::vector<LatticePolytope>{a, b});
    const MixedVolumeTable ba = mixed_volume_table(std::vector<LatticePolytope>{b, a});
    for (const auto& [alpha, mv] : ab.entries) {
        std::vector<int> reversed(alpha.rbegin(), alpha.rend());
        CHECK(ba.entries.at(reversed) == mv);
    }
}

TEST_CASE("mixed volume table requires a full-dimensional sum") {
    const std::vector<LatticePolytope> parts = {segment(2, 0, 1), segment(2, 0, 2)};
    CHECK_THROWS_WITH_AS(mixed_volume_table(parts), "sum not full-dimensional",
                         std::invalid_argument);
}
