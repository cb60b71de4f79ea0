#include <doctest.h>

#include <random>

#include "mehr/combinatorics.hpp"
#include "mehr/mixed_invariants.hpp"

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

PolytopeCollection copies(const LatticePolytope& p, int k) {
    return PolytopeCollection(std::vector<LatticePolytope>(static_cast<size_t>(k), p));
}

Polynomial poly(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("discrete mixed volume of the published examples") {
    CHECK(dmv(copies(cube(3), 2)) == 12);
    CHECK(dmv(copies(cube(3), 1)) == 7);
    CHECK(dmv(PolytopeCollection({simplex(3), LatticePolytope::single_point({0, 1, 2})})) == 0);
    CHECK(dmv(copies(simplex(3), 2)) == 3);
}

TEST_CASE("dmv trace lists subsets by size then lexicographically") {
    std::vector<SubsetCount> trace;
    const PolytopeCollection c({segment(2, 0, 2), segment(2, 1, 1)});
    CHECK(dmv(c, &trace) == 2);
    REQUIRE(trace.size() == 4);
    CHECK(trace[0].subset.empty());
    CHECK(trace[0].points == 1);
    CHECK(trace[1].subset == std::vector<int>{1});
    CHECK(trace[1].points == 3);
    CHECK(trace[2].subset == std::vector<int>{2});
    CHECK(trace[2].points == 2);
    CHECK(trace[3].subset == std::vector<int>{1, 2});
    CHECK(trace[3].points == 6);
}

TEST_CASE("mixed Ehrhart polynomial of the cube pair") {
    const MixedEhrhartResult me = mixed_ehrhart(copies(cube(3), 2));
    CHECK(me.polynomial == poly({0, 0, 6, 6}));
    CHECK(me.dmv == 12);
    CHECK(me.coefficients == std::vector<Rat>{0, 0, 6, 6});
}

TEST_CASE("a zero-dimensional factor kills the mixed Ehrhart polynomial") {
    const MixedEhrhartResult me =
        mixed_ehrhart(PolytopeCollection({simplex(3), LatticePolytope::single_point({1, 1, 1})}));
    CHECK(me.polynomial.is_zero());
    CHECK(me.dmv == 0);
    CHECK(me.coefficients == std::vector<Rat>(4, Rat(0)));
}

TEST_CASE("cube collections match the closed-form coefficients") {
    for (int d = 1; d <= 4; ++d)
        for (int k = 1; k <= 4; ++k)
            CHECK(mixed_ehrhart(copies(cube(d), k)).coefficients == cube_reference(d, k));
}

TEST_CASE("cube reference closed form") {
    CHECK(cube_reference(3, 2) == std::vector<Rat>{0, 0, 6, 6});
    CHECK(cube_reference(2, 2) == std::vector<Rat>{0, 0, 2});
    CHECK(cube_reference(2, 3) == std::vector<Rat>{0, 0, 0});  // k > d vanishes
    CHECK(cube_reference(4, 2) == std::vector<Rat>{0, 0, 12, 24, 14});
}

TEST_CASE("coefficients from the multivariate route agree") {
    CHECK(me_from_multivariate(copies(cube(3), 2)) == std::vector<Rat>{0, 0, 6, 6});
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 8; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 3);
        const int k = 1 + static_cast<int>(rng() % 3);
        std::vector<LatticePolytope> parts;
        for (int i = 0; i < k; ++i) {
            const int n = 4 + static_cast<int>(rng() % 5);
            std::vector<Point> pts;
            for (int t = 0; t < n; ++t) {
                Point p(static_cast<size_t>(d));
                for (int j = 0; j < d; ++j) p[static_cast<size_t>(j)] = static_cast<Coord>(rng() % 4);
                pts.push_back(std::move(p));
            }
            parts.emplace_back(d, std::move(pts));
        }
        const PolytopeCollection c(std::move(parts));
        CHECK(mixed_ehrhart(c).coefficients == me_from_multivariate(c));
    }
}

TEST_CASE("k = 1 reduces to the Ehrhart polynomial minus one") {
    const PolytopeCollection c({simplex(3, 2)});
    const MixedEhrhartResult me = mixed_ehrhart(c);
    const Polynomial e = ehrhart(c.polytope(0)).polynomial;
    CHECK(me.polynomial == e - Polynomial::constant(1));
    CHECK(me_from_multivariate(c) == me.coefficients);
}

TEST_CASE("top coefficient via the mixed-volume table") {
    CHECK(me_top(copies(cube(3), 2)) == 6);
    CHECK(me_top(PolytopeCollection({segment(2, 0, 1), segment(2, 1, 1)})) == 1);
    CHECK(me_top(copies(cube(2), 1)) == 1);  // k = 1: just the volume
    CHECK_THROWS_WITH_AS(me_top(PolytopeCollection({segment(2, 0, 1), segment(2, 0, 1)})),
                         "sum not full-dimensional", std::invalid_argument);
}

TEST_CASE("second coefficient via projected facet collections") {
    CHECK(me_second(copies(cube(3), 2)) == 6);
    CHECK(me_second(copies(cube(3), 1)) == 3);  // e_2 of the unit cube
    CHECK(me_second(copies(simplex(3), 2)) == mixed_ehrhart(copies(simplex(3), 2)).coefficients[2]);
    CHECK_THROWS_WITH_AS(me_second(PolytopeCollection({cube(2), segment(2, 0, 1)})),
                         "corollary requires full-dimensional polytopes", std::invalid_argument);
}

TEST_CASE("bernstein identity for k = d") {
    const PolytopeCollection segments({segment(2, 0, 1), segment(2, 1, 1)});
    CHECK(bernstein_mixed_volume(segments) == ratio(1, 2));
    CHECK(mixed_ehrhart(segments).polynomial == poly({0, 0, 1}));

    const PolytopeCollection stretched({segment(2, 0, 2), segment(2, 1, 1)});
    CHECK(bernstein_mixed_volume(stretched) == 1);
    CHECK(mixed_ehrhart(stretched).polynomial == poly({0, 0, 2}));
    CHECK(dmv(stretched) == 2);

    const PolytopeCollection squares = copies(cube(2), 2);
    CHECK(bernstein_mixed_volume(squares) == 1);  // MV(P, P) = vol(P)

    CHECK_THROWS_AS(bernstein_mixed_volume(copies(cube(3), 2)), std::invalid_argument);
}

TEST_CASE("mixed h*-vector of the simplex pair and its dilates") {
    CHECK(mixed_hstar(copies(simplex(3), 2)).entries == std::vector<Int>{0, 3, 4, -1});
    for (Coord m = 1; m <= 6; ++m) {
        const std::vector<Int> expected = {Int(0), Int(m * m * m + 2 * m * m), Int(4 * m * m * m),
                                           Int(m * m * m - 2 * m * m)};
        CHECK(mixed_hstar(copies(simplex(3, m), 2)).entries == expected);
    }
}

TEST_CASE("mixed h* of a pair starts with (0, dmv)") {
    const PolytopeCollection c({cube(3), simplex(3, 2)});
    const MixedHStarVector h = mixed_hstar(c);
    CHECK(h.entries[0] == 0);
    CHECK(h.entries[1] == dmv(c));
}

TEST_CASE("single-polytope formulas agree with inclusion-exclusion") {
    CHECK(single_polytope_me(cube(3), 2) == poly({0, 0, 6, 6}));
    CHECK(single_polytope_dmv(cube(3), 2) == 12);
    CHECK(single_polytope_dmv(simplex(3), 2) == 3);

    for (const LatticePolytope& p : {cube(3), simplex(3), simplex(3, 2)}) {
        for (int k = 1; k <= 3; ++k) {
            const MixedEhrhartResult me = mixed_ehrhart(copies(p, k));
            CHECK(single_polytope_me(p, k) == me.polynomial);
            CHECK(single_polytope_dmv(p, k) == me.dmv);
        }
    }

    // k = 1 is the Ehrhart polynomial minus one
    CHECK(single_polytope_me(cube(3), 1) == poly({0, 3, 3, 1}));
    // k = d sums the whole h*-vector
    Int total = 0;
    for (const Int& e : hstar_from_polynomial(ehrhart(cube(3))).entries) total += e;
    CHECK(single_polytope_dmv(cube(3), 3) == total);
}

TEST_CASE("complementary-subspace oracle") {
    CHECK(complementary_dmv_oracle(PolytopeCollection({segment(2, 0, 1), segment(2, 1, 1)})) == 1);
    const PolytopeCollection stretched({segment(2, 0, 2), segment(2, 1, 1)});
    CHECK(complementary_dmv_oracle(stretched) == 2);
    CHECK(complementary_dmv_oracle(stretched) == dmv(stretched));
    // a point polytope contributes no fresh lattice points
    const PolytopeCollection with_point(
        {segment(2, 0, 2), LatticePolytope::origin(2)});
    CHECK(complementary_dmv_oracle(with_point) == 0);

    // hypothesis failures
    CHECK_THROWS_WITH_AS(complementary_dmv_oracle(copies(cube(2), 2)),
                         "complementary-dimension hypothesis fails", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        complementary_dmv_oracle(PolytopeCollection(
            {segment(2, 0, 1), LatticePolytope(2, {{0, 1}, {0, 2}})})),
        "complementary-dimension hypothesis fails", std::invalid_argument);
}

TEST_CASE("mixed Ehrhart is symmetric and dilation-consistent") {
    const PolytopeCollection c({cube(2), simplex(2, 2)});
    const PolytopeCollection swapped({simplex(2, 2), cube(2)});
    CHECK(mixed_ehrhart(c).polynomial == mixed_ehrhart(swapped).polynomial);
    const MixedEhrhartResult me = mixed_ehrhart(c);
    for (Coord r = 0; r <= 3; ++r) {
        const PolytopeCollection dilated({dilate(cube(2), r), dilate(simplex(2, 2), r)});
        CHECK(mixed_ehrhart(dilated).polynomial ==
              me.polynomial.scale_variable(Rat(static_cast<long>(r))));
    }
}

TEST_CASE("parallel evaluation is deterministic") {
    const PolytopeCollection c({cube(3), simplex(3, 2)});
    const MixedEhrhartResult sequential = mixed_ehrhart(c, Parallelism{1});
    const MixedEhrhartResult threaded = mixed_ehrhart(c, Parallelism{4});
    CHECK(sequential.polynomial == threaded.polynomial);
    CHECK(sequential.dmv == threaded.dmv);
    CHECK(me_from_multivariate(c, Parallelism{1}) == me_from_multivariate(c, Parallelism{4}));
}
