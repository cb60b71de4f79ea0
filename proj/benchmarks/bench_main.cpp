#include <benchmark/benchmark.h>

#include <random>

#include "mehr/ehrhart.hpp"
#include "mehr/mixed_invariants.hpp"
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

std::vector<Point> random_points(std::mt19937_64& rng, int d, int n, Coord box) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        Point p(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j)
            p[static_cast<size_t>(j)] = static_cast<Coord>(rng() % static_cast<std::uint64_t>(box + 1));
        pts.push_back(std::move(p));
    }
    return pts;
}

void BM_hull_construction(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::mt19937_64 rng(12345);
    const auto pts = random_points(rng, d, 64, 9);
    for (auto _ : state) {
        LatticePolytope p(d, pts);
        benchmark::DoNotOptimize(p.vertices().size());
    }
}
BENCHMARK(BM_hull_construction)->Arg(2)->Arg(3)->Arg(4);

void BM_count_dilate(benchmark::State& state) {
    const Coord r = state.range(0);
    const LatticePolytope p = dilate(minkowski_sum(cube(3), simplex(3)), r);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_points(p).total);
    }
}
BENCHMARK(BM_count_dilate)->Arg(4)->Arg(16)->Arg(32);

void BM_dmv_cube_pair(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        PolytopeCollection c({cube(d), cube(d)});
        benchmark::DoNotOptimize(dmv(c));
    }
}
BENCHMARK(BM_dmv_cube_pair)->Arg(2)->Arg(3)->Arg(4);

void BM_mixed_ehrhart_random(benchmark::State& state) {
    std::mt19937_64 rng(99);
    std::vector<LatticePolytope> parts;
    for (int i = 0; i < 3; ++i) parts.emplace_back(3, random_points(rng, 3, 8, 3));
    PolytopeCollection c(std::move(parts));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mixed_ehrhart(c).dmv);
    }
}
BENCHMARK(BM_mixed_ehrhart_random);

void BM_scan_dilates(benchmark::State& state) {
    const Coord rmax = state.range(0);
    PolytopeCollection c({simplex(3), simplex(3)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_dilates(c, rmax).size());
    }
}
BENCHMARK(BM_scan_dilates)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
