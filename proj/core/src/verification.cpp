#include "mehr/verification.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "mehr/binomial_basis.hpp"
#include "mehr/combinatorics.hpp"
#include "mehr/ehrhart.hpp"
#include "mehr/interpolation.hpp"
#include "mehr/intlinalg.hpp"
#include "mehr/io.hpp"
#include "mehr/mixed_invariants.hpp"
#include "mehr/root_analysis.hpp"

namespace mehr {

bool VerificationLedger::all_passed() const {
    for (const LedgerEntry& e : entries)
        if (!e.pass && !e.informational) return false;
    return true;
}

std::string render_ledger(const VerificationLedger& ledger) {
    nlohmann::json checks = nlohmann::json::array();
    for (const LedgerEntry& e : ledger.entries)
        checks.push_back(nlohmann::json{{"id", e.id},
                                        {"reference", e.reference},
                                        {"expected", e.expected},
                                        {"computed", e.computed},
                                        {"pass", e.pass},
                                        {"informational", e.informational}});
    return nlohmann::json{{"passed", ledger.all_passed()}, {"checks", checks}}.dump(2) + "\n";
}

namespace {

std::string rats_str(std::span<const Rat> v) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << to_string(v[i]);
    out << ")";
    return out.str();
}

std::string ints_str(std::span<const Int> v) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].get_str();
    out << ")";
    return out.str();
}

std::string points_str(const std::vector<Point>& pts) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < pts.size(); ++i) {
        out << (i ? "," : "") << "[";
        for (size_t j = 0; j < pts[i].size(); ++j) out << (j ? "," : "") << pts[i][j];
        out << "]";
    }
    out << "]";
    return out.str();
}

std::string collection_str(const PolytopeCollection& c) {
    std::ostringstream out;
    out << "{";
    for (int i = 0; i < c.size(); ++i)
        out << (i ? ", " : "") << "P" << (i + 1) << "=" << points_str(c.polytope(i).vertices());
    out << "}";
    return out.str();
}

LatticePolytope unit_cube(int d, Coord scale = 1) {
    std::vector<Point> corners;
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        Point p(static_cast<size_t>(d), 0);
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) p[static_cast<size_t>(i)] = scale;
        corners.push_back(std::move(p));
    }
    return LatticePolytope(d, std::move(corners));
}

LatticePolytope std_simplex(int d, Coord scale = 1) {
    std::vector<Point> gens = {Point(static_cast<size_t>(d), 0)};
    for (int i = 0; i < d; ++i) {
        Point p(static_cast<size_t>(d), 0);
        p[static_cast<size_t>(i)] = scale;
        gens.push_back(std::move(p));
    }
    return LatticePolytope(d, std::move(gens));
}

LatticePolytope axis_segment(int d, int axis, Coord len) {
    Point end(static_cast<size_t>(d), 0);
    end[static_cast<size_t>(axis)] = len;
    return LatticePolytope(d, {Point(static_cast<size_t>(d), 0), std::move(end)});
}

class Recorder {
public:
    explicit Recorder(VerificationLedger& ledger) : ledger_(ledger) {}

    void check(std::string id, std::string reference, std::string expected, std::string computed) {
        const bool pass = expected == computed;
        ledger_.entries.push_back(
            {std::move(id), std::move(reference), std::move(expected), std::move(computed), pass});
    }

    template <typename Fn>
    void guarded(const std::string& id, const std::string& reference, const std::string& expected,
                 Fn&& fn) {
        try {
            check(id, reference, expected, fn());
        } catch (const std::exception& e) {
            ledger_.entries.push_back({id, reference, expected, std::string("exception: ") + e.what(),
                                       false});
        }
    }

private:
    VerificationLedger& ledger_;
};

// ---------------------------------------------------------------------------
// randomized-property machinery

class Tally {
public:
    void note(const std::string& id, const std::string& reference, bool ok,
              const std::string& context) {
        Row& row = rows_[id];
        row.reference = reference;
        if (ok) {
            ++row.pass;
        } else {
            ++row.fail;
            if (row.counterexamples.size() < 3) row.counterexamples.push_back(context);
        }
    }

    void note_observation(const std::string& id, const std::string& reference, bool interesting,
                          const std::string& context) {
        Row& row = rows_[id];
        row.reference = reference;
        row.informational = true;
        if (interesting) {
            ++row.fail;
            if (row.counterexamples.size() < 3) row.counterexamples.push_back(context);
        } else {
            ++row.pass;
        }
    }

    void flush(VerificationLedger& ledger) const {
        for (const auto& [id, row] : rows_) {
            LedgerEntry entry;
            entry.id = id;
            entry.reference = row.reference;
            entry.informational = row.informational;
            const int total = row.pass + row.fail;
            entry.expected = row.informational ? "0 observations"
                                               : std::to_string(total) + "/" + std::to_string(total);
            std::ostringstream computed;
            computed << row.pass << "/" << total;
            if (row.fail > 0) {
                computed << (row.informational ? "; observed: " : "; counterexamples: ");
                for (size_t i = 0; i < row.counterexamples.size(); ++i)
                    computed << (i ? " | " : "") << row.counterexamples[i];
            }
            entry.computed = computed.str();
            entry.pass = row.fail == 0;
            ledger.entries.push_back(std::move(entry));
        }
    }

private:
    struct Row {
        std::string reference;
        int pass = 0;
        int fail = 0;
        bool informational = false;
        std::vector<std::string> counterexamples;
    };
    std::map<std::string, Row> rows_;
};

LatticePolytope random_polytope(std::mt19937_64& rng, int d, bool force_full_dimensional) {
    for (int attempt = 0;; ++attempt) {
        const int n = 4 + static_cast<int>(rng() % 5);
        std::vector<Point> pts;
        pts.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            Point p(static_cast<size_t>(d));
            for (int j = 0; j < d; ++j) p[static_cast<size_t>(j)] = static_cast<Coord>(rng() % 4);
            pts.push_back(std::move(p));
        }
        LatticePolytope poly(d, std::move(pts));
        if (!force_full_dimensional || poly.dim() == d || attempt >= 64) return poly;
    }
}

// Membership oracle: z lies in conv(verts) iff some affinely independent
// subset of at most d+1 vertices carries z with non-negative barycentrics.
bool simplex_cover_member(const std::vector<Point>& verts, const Point& z, int d) {
    const int max_size = std::min<int>(d + 1, static_cast<int>(verts.size()));
    std::vector<int> subset;
    auto try_subset = [&]() -> bool {
        const size_t s = subset.size();
        IntMatrix a(static_cast<size_t>(d) + 1, std::vector<Int>(s));
        std::vector<Int> b(static_cast<size_t>(d) + 1);
        for (int row = 0; row < d; ++row) {
            for (size_t col = 0; col < s; ++col)
                a[static_cast<size_t>(row)][col] =
                    Int(static_cast<long>(verts[static_cast<size_t>(subset[col])][static_cast<size_t>(row)]));
            b[static_cast<size_t>(row)] = Int(static_cast<long>(z[static_cast<size_t>(row)]));
        }
        for (size_t col = 0; col < s; ++col) a[static_cast<size_t>(d)][col] = 1;
        b[static_cast<size_t>(d)] = 1;
        std::optional<std::vector<Rat>> lambda;
        try {
            lambda = solve_rational(a, b);
        } catch (const std::logic_error&) {
            return false;  // affinely dependent subset
        }
        if (!lambda) return false;
        for (const Rat& l : *lambda)
            if (l < 0) return false;
        return true;
    };
    std::function<bool(int, int)> recurse = [&](int start, int remaining) -> bool {
        if (remaining == 0) return try_subset();
        for (int i = start; i <= static_cast<int>(verts.size()) - remaining; ++i) {
            subset.push_back(i);
            if (recurse(i + 1, remaining - 1)) {
                subset.pop_back();
                return true;
            }
            subset.pop_back();
        }
        return false;
    };
    for (int size = 1; size <= max_size; ++size)
        if (recurse(0, size)) return true;
    return false;
}

void run_random_cases(Tally& tally, std::mt19937_64& rng, int cases, const Parallelism& par) {
    for (int case_idx = 0; case_idx < cases; ++case_idx) {
        const int d = 1 + static_cast<int>(rng() % 3);
        int k = 1 + static_cast<int>(rng() % 3);
        const int flavor = static_cast<int>(rng() % 10);
        const bool bernstein_case = flavor == 2;
        if (bernstein_case) k = d;
        const bool force_full = bernstein_case || case_idx % 2 == 0;

        std::vector<LatticePolytope> parts;
        parts.reserve(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) parts.push_back(random_polytope(rng, d, force_full));
        const bool inject_point = flavor < 2 && k >= 2;
        if (inject_point) {
            Point p(static_cast<size_t>(d));
            for (int j = 0; j < d; ++j) p[static_cast<size_t>(j)] = static_cast<Coord>(rng() % 4);
            parts[rng() % static_cast<size_t>(k)] = LatticePolytope::single_point(std::move(p));
        }

        PolytopeCollection c(std::move(parts));
        const std::string ctx = collection_str(c);
        const int sum_dim = c.sum_dimension();

        try {
            const MixedEhrhartResult me = mixed_ehrhart(c, par);
            const std::vector<Rat> via_multivariate = me_from_multivariate(c, par);

            tally.note("me-coefficient-routes", "coefficient-theorem",
                       me.coefficients == via_multivariate, ctx);
            bool vanishing = true;
            for (int i = 0; i < std::min(k, sum_dim + 1); ++i)
                if (me.coefficients[static_cast<size_t>(i)] != 0) vanishing = false;
            tally.note("me-vanishing-below-k", "coefficient-theorem", vanishing, ctx);

            bool nonneg = me.dmv >= 0 && Rat(me.dmv) == me.polynomial(1);
            for (int n = 1; n <= 5 && nonneg; ++n)
                if (me.polynomial(n) < 0) nonneg = false;
            tally.note("dmv-nonnegative", "nonnegativity-theorem", nonneg, ctx);
            tally.note("dmv-routes-agree", "discrete-mixed-volume-definition",
                       dmv(c, par) == me.dmv, ctx);

            if (sum_dim == d)
                tally.note("me-top-equals-leading", "top-coefficient-corollary",
                           me_top(c, par) == me.coefficients[static_cast<size_t>(d)], ctx);
            if (c.all_full_dimensional() && d >= 1)
                tally.note("me-second-equals-coefficient", "second-coefficient-corollary",
                           me_second(c, par) == me.coefficients[static_cast<size_t>(d) - 1], ctx);

            // mixed h*: basis round trip, zero constant term, and (inside the
            // call) the alternating-formula cross-check on full-dim cases
            const MixedHStarVector h = mixed_hstar(c, par);
            BinomialBasisVector basis;
            basis.ambient_degree = h.degree;
            for (const Int& e : h.entries) basis.entries.emplace_back(Rat(e));
            tally.note("mixed-hstar-roundtrip", "mixed-hstar-definition",
                       from_binomial_basis(basis) == me.polynomial && h.entries[0] == 0, ctx);
            if (k == 2 && c.all_full_dimensional())
                tally.note("hstar-h1-equals-dmv", "mixed-hstar-lemma", h.entries[1] == me.dmv, ctx);

            // the question is posed for full-dimensional collections; the
            // constant term is always zero, so start at index 1
            if (c.all_full_dimensional()) {
                bool bound_violated = false;
                for (int i = 1; i <= h.degree; ++i) {
                    Int floor_value = binomial(h.degree, i);
                    if ((k + i) % 2 != 0) floor_value = -floor_value;
                    if (h.entries[static_cast<size_t>(i)] < floor_value) bound_violated = true;
                }
                tally.note_observation("hstar-conjectured-bound", "open-question", bound_violated,
                                       ctx + " hstar=" + ints_str(h.entries));
            }

            if (bernstein_case && sum_dim == d) {
                const Rat mv = bernstein_mixed_volume(c, par);
                tally.note("bernstein-pure-monomial", "bernstein-identity",
                           mv * Rat(factorial(d)) == me.coefficients[static_cast<size_t>(d)], ctx);
            }

            if (inject_point)
                tally.note("point-factor-kills", "zero-dimensional-factor-remark",
                           me.polynomial.is_zero() && me.dmv == 0, ctx);
            if (k == 1) {
                const CountResult count = count_points(c.polytope(0));
                tally.note("k1-reduction", "discrete-mixed-volume-definition",
                           me.dmv == Int(count.total) - 1, ctx);
            }

            // symmetry under permutation and translation
            {
                std::vector<LatticePolytope> reversed;
                for (int i = k - 1; i >= 0; --i) reversed.push_back(c.polytope(i));
                PolytopeCollection rc(std::move(reversed));
                std::vector<LatticePolytope> translated;
                for (int i = 0; i < k; ++i) {
                    Point t(static_cast<size_t>(d));
                    for (int j = 0; j < d; ++j)
                        t[static_cast<size_t>(j)] = static_cast<Coord>(rng() % 5) - 2;
                    translated.push_back(translate(c.polytope(i), t));
                }
                PolytopeCollection tc(std::move(translated));
                tally.note("symmetry-and-translation", "translation-invariance",
                           mixed_ehrhart(rc, par).polynomial == me.polynomial &&
                               mixed_ehrhart(tc, par).polynomial == me.polynomial,
                           ctx);
            }

            // dilation consistency ME_{rP}(n) = ME_P(rn)
            {
                bool ok = true;
                for (Coord r = 0; r <= 3 && ok; ++r) {
                    std::vector<LatticePolytope> dilated;
                    for (int i = 0; i < k; ++i) dilated.push_back(dilate(c.polytope(i), r));
                    PolytopeCollection rc(std::move(dilated));
                    ok = mixed_ehrhart(rc, par).polynomial ==
                         me.polynomial.scale_variable(Rat(static_cast<long>(r)));
                }
                tally.note("dilation-consistency", "mixed-ehrhart-definition", ok, ctx);
            }

            // subset-sum h* invariants (constant term, count and interior identities)
            {
                bool ok = true;
                for (std::uint32_t mask = 1; mask < (1u << k) && ok; ++mask) {
                    const LatticePolytope& sum = c.family().subset_sum(mask);
                    const HStarVector hs = hstar_from_polynomial(ehrhart(sum));
                    const CountResult count = count_points(sum);
                    ok = hs.entries[0] == 1 &&
                         hs.entries[static_cast<size_t>(hs.degree)] == Int(count.interior);
                    if (sum.dim() >= 1)
                        ok = ok && hs.entries[1] == Int(count.total) - (sum.dim() + 1);
                }
                tally.note("subsum-hstar-identities", "hstar-coefficient-identities", ok, ctx);
            }

            // counting engines agree
            {
                const LatticePolytope& sum = c.family().full_sum();
                tally.note("count-engines-agree", "enumeration-engines",
                           count_points(sum, CountEngine::ColumnInterval) ==
                                   count_points(sum, CountEngine::PointScan) &&
                               count_points(c.polytope(0), CountEngine::ColumnInterval) ==
                                   count_points(c.polytope(0), CountEngine::PointScan),
                           ctx);
            }

            // membership against the simplex-cover oracle on the parts
            {
                bool ok = true;
                for (int i = 0; i < k && ok; ++i) {
                    const LatticePolytope& p = c.polytope(i);
                    const auto [lo, hi] = p.bounding_box();
                    for (int probe = 0; probe < 8 && ok; ++probe) {
                        Point z(static_cast<size_t>(d));
                        for (int j = 0; j < d; ++j)
                            z[static_cast<size_t>(j)] =
                                lo[static_cast<size_t>(j)] - 1 +
                                static_cast<Coord>(rng() % static_cast<std::uint64_t>(
                                                       hi[static_cast<size_t>(j)] -
                                                       lo[static_cast<size_t>(j)] + 3));
                        const bool member = p.contains(z) != Containment::Outside;
                        ok = member == simplex_cover_member(p.vertices(), z, d);
                    }
                }
                tally.note("contains-vs-simplex-cover", "membership-oracle", ok, ctx);
            }

            // lattice-point count is preserved by the face projection
            if (sum_dim == d && d >= 1) {
                const LatticePolytope& sum = c.family().full_sum();
                const std::vector<Point> normals = facet_normals(sum);
                bool ok = true;
                for (size_t t = 0; t < std::min<size_t>(2, normals.size()) && ok; ++t) {
                    const Point& a = normals[t];
                    const Coord h_val = sum.support(a);
                    std::int64_t tight = 0;
                    for (const Point& z : enumerate_points(sum))
                        if (dot_wide(a, z) == Wide(h_val)) ++tight;
                    ok = count_points(face_in_direction(sum, a).face).total == tight;
                }
                tally.note("face-projection-counts", "facet-projection", ok, ctx);
            }

            // mixed-volume table of (P, P) is constant at vol(P)
            if (case_idx % 5 == 0 && c.polytope(0).dim() == d) {
                const LatticePolytope& p = c.polytope(0);
                const Rat vol = volume(p);
                const MixedVolumeTable table = mixed_volume_table(
                    std::vector<LatticePolytope>{p, p}, par);
                bool ok = true;
                for (const auto& [alpha, mv] : table.entries) ok = ok && mv == vol;
                tally.note("mixed-volume-diagonal", "mixed-volume-multilinearity", ok, ctx);
            }
        } catch (const std::exception& e) {
            tally.note("case-execution", "cross-module-identities", false,
                       ctx + " raised: " + e.what());
        }
    }
}

void run_complementary_cases(Tally& tally, std::mt19937_64& rng) {
    for (int case_idx = 0; case_idx < 20; ++case_idx) {
        const int d = 2 + static_cast<int>(rng() % 2);
        const int k = 2 + static_cast<int>(d == 3 ? rng() % 2 : 0);
        // split the axes into k consecutive nonempty blocks
        std::vector<int> sizes(static_cast<size_t>(k), 1);
        for (int extra = d - k; extra > 0; --extra) ++sizes[rng() % static_cast<size_t>(k)];
        std::vector<LatticePolytope> parts;
        int axis = 0;
        for (int i = 0; i < k; ++i) {
            const int block = sizes[static_cast<size_t>(i)];
            const int n = 3 + static_cast<int>(rng() % 4);
            std::vector<Point> pts = {Point(static_cast<size_t>(d), 0)};
            for (int t = 0; t < n; ++t) {
                Point p(static_cast<size_t>(d), 0);
                for (int j = 0; j < block; ++j)
                    p[static_cast<size_t>(axis + j)] = static_cast<Coord>(rng() % 4);
                pts.push_back(std::move(p));
            }
            parts.emplace_back(d, std::move(pts));
            axis += block;
        }
        PolytopeCollection c(std::move(parts));
        const std::string ctx = collection_str(c);
        try {
            tally.note("complementary-oracle", "product-proposition",
                       complementary_dmv_oracle(c) == dmv(c), ctx);
        } catch (const std::exception& e) {
            tally.note("complementary-oracle", "product-proposition", false,
                       ctx + " raised: " + e.what());
        }
    }
}

void run_separated_pair_cases(Tally& tally, std::mt19937_64& rng) {
    for (int case_idx = 0; case_idx < 10; ++case_idx) {
        const int d = 1 + static_cast<int>(rng() % 3);
        auto half_polytope = [&](Coord sign) {
            const int n = 3 + static_cast<int>(rng() % 5);
            std::vector<Point> pts = {Point(static_cast<size_t>(d), 0)};
            for (int t = 0; t < n; ++t) {
                Point p(static_cast<size_t>(d));
                p[0] = sign * static_cast<Coord>(rng() % 4);
                for (int j = 1; j < d; ++j) p[static_cast<size_t>(j)] = static_cast<Coord>(rng() % 4);
                pts.push_back(std::move(p));
            }
            return LatticePolytope(d, std::move(pts));
        };
        const LatticePolytope p = half_polytope(-1);
        const LatticePolytope q = half_polytope(1);
        const LatticePolytope sum = minkowski_sum(p, q);
        bool ok = true;
        for (Coord n = 1; n <= 3 && ok; ++n)
            ok = count_points(dilate(sum, n)).total >=
                 count_points(dilate(p, n)).total + count_points(dilate(q, n)).total - 1;
        tally.note("separated-pair-superadditivity", "nonnegativity-for-pairs", ok,
                   "P=" + points_str(p.vertices()) + " Q=" + points_str(q.vertices()));
    }
}

}  // namespace

// ---------------------------------------------------------------------------

VerificationLedger run_paper_suite(const Parallelism& par) {
    VerificationLedger ledger;
    Recorder rec(ledger);

    const LatticePolytope cube3 = unit_cube(3);
    const LatticePolytope simplex3 = std_simplex(3);

    rec.guarded("interpolate-cube-counts", "unit-cube-example", "n^3 + 3*n^2 + 3*n + 1", [&] {
        std::vector<std::pair<Int, Rat>> samples = {
            {Int(0), Rat(1)}, {Int(1), Rat(8)}, {Int(2), Rat(27)}, {Int(3), Rat(64)}};
        return interpolate_univariate(samples).str();
    });
    rec.guarded("ehrhart-cube3", "unit-cube-example", "n^3 + 3*n^2 + 3*n + 1",
                [&] { return ehrhart(cube3).polynomial.str(); });
    rec.guarded("ehrhart-multi-cube3", "multivariate-enumerator-theorem", "n^3 + 3*n^2 + 3*n + 1",
                [&] {
                    return multivariate_ehrhart(std::vector<LatticePolytope>{cube3}, par)
                        .diagonal()
                        .str();
                });
    rec.guarded("hstar-cube3", "hstar-coefficient-identities", "(1,4,1,0)",
                [&] { return ints_str(hstar_from_polynomial(ehrhart(cube3)).entries); });
    rec.guarded("dmv-cube3-pair", "single-polytope-proposition", "12", [&] {
        return dmv(PolytopeCollection({cube3, cube3}), par).get_str();
    });
    rec.guarded("mixed-ehrhart-cube3-pair", "unit-cube-example", "6*n^3 + 6*n^2", [&] {
        return mixed_ehrhart(PolytopeCollection({cube3, cube3}), par).polynomial.str();
    });
    rec.guarded("me-from-multivariate-cube3-pair", "coefficient-theorem", "(0,0,6,6)", [&] {
        return rats_str(me_from_multivariate(PolytopeCollection({cube3, cube3}), par));
    });

    rec.guarded("cube-reference-grid", "unit-cube-example", "match for all d<=4, k<=4", [&] {
        for (int d = 1; d <= 4; ++d) {
            const LatticePolytope cube = unit_cube(d);
            for (int k = 1; k <= 4; ++k) {
                PolytopeCollection c(std::vector<LatticePolytope>(static_cast<size_t>(k), cube));
                if (mixed_ehrhart(c, par).coefficients != cube_reference(d, k))
                    return "mismatch at d=" + std::to_string(d) + " k=" + std::to_string(k);
            }
        }
        return std::string("match for all d<=4, k<=4");
    });

    rec.guarded("point-factor-kills", "zero-dimensional-factor-remark", "0", [&] {
        PolytopeCollection c({simplex3, LatticePolytope::single_point({1, 2, 0})});
        const MixedEhrhartResult me = mixed_ehrhart(c, par);
        return me.polynomial.is_zero() ? me.dmv.get_str() : me.polynomial.str();
    });

    rec.guarded("mixed-hstar-simplex3-pair", "simplex-pair-example", "(0,3,4,-1)", [&] {
        return ints_str(mixed_hstar(PolytopeCollection({simplex3, simplex3}), par).entries);
    });
    rec.guarded("mixed-hstar-dilated-simplex-pairs", "dilated-simplex-pair-formula",
                "(0, m^3+2m^2, 4m^3, m^3-2m^2) for m=1..6", [&] {
                    for (Coord m = 1; m <= 6; ++m) {
                        const LatticePolytope p = std_simplex(3, m);
                        const MixedHStarVector h = mixed_hstar(PolytopeCollection({p, p}), par);
                        const std::vector<Int> expected = {Int(0), Int(m * m * m + 2 * m * m),
                                                           Int(4 * m * m * m),
                                                           Int(m * m * m - 2 * m * m)};
                        if (h.entries != expected)
                            return "mismatch at m=" + std::to_string(m) + ": " + ints_str(h.entries);
                    }
                    return std::string("(0, m^3+2m^2, 4m^3, m^3-2m^2) for m=1..6");
                });

    rec.guarded("hstar-h1-equals-dmv", "mixed-hstar-lemma", "h1 = DMV on both pairs", [&] {
        PolytopeCollection a({cube3, simplex3});
        PolytopeCollection b({simplex3, simplex3});
        const bool ok = mixed_hstar(a, par).entries[1] == dmv(a, par) &&
                        mixed_hstar(b, par).entries[1] == dmv(b, par);
        return ok ? std::string("h1 = DMV on both pairs") : std::string("mismatch");
    });

    rec.guarded("single-polytope-dmv-cube3", "single-polytope-proposition", "12",
                [&] { return single_polytope_dmv(cube3, 2).get_str(); });
    rec.guarded("single-polytope-routes", "single-polytope-proposition",
                "both formulas match inclusion-exclusion", [&] {
                    const LatticePolytope two_simplex3 = std_simplex(3, 2);
                    for (const LatticePolytope* p : {&cube3, &simplex3, &two_simplex3}) {
                        for (int k = 1; k <= 3; ++k) {
                            PolytopeCollection c(
                                std::vector<LatticePolytope>(static_cast<size_t>(k), *p));
                            const MixedEhrhartResult me = mixed_ehrhart(c, par);
                            if (single_polytope_me(*p, k) != me.polynomial)
                                return std::string("ME formula mismatch at k=") + std::to_string(k);
                            if (single_polytope_dmv(*p, k) != me.dmv)
                                return std::string("DMV formula mismatch at k=") + std::to_string(k);
                        }
                    }
                    return std::string("both formulas match inclusion-exclusion");
                });

    rec.guarded("eulerian-d3", "eulerian-polynomial-definition", "z^3 + 4*z^2 + z",
                [&] { return eulerian(3).polynomial.str("z"); });
    rec.guarded("asymptotic-limit-cube3-pair", "real-roots-theorem", "6*z^3 + 24*z^2 + 6*z", [&] {
        return asymptotic_limit(PolytopeCollection({cube3, cube3}), par).str("z");
    });
    rec.guarded("asymptotic-limit-simplex3-pair", "real-roots-theorem", "z^3 + 4*z^2 + z", [&] {
        return asymptotic_limit(PolytopeCollection({simplex3, simplex3}), par).str("z");
    });

    rec.guarded("me-top-cube3-pair", "top-coefficient-corollary", "6",
                [&] { return to_string(me_top(PolytopeCollection({cube3, cube3}), par)); });
    rec.guarded("me-second-cube3-pair", "second-coefficient-corollary", "6",
                [&] { return to_string(me_second(PolytopeCollection({cube3, cube3}), par)); });

    rec.guarded("bernstein-axis-segments", "bernstein-identity", "MV=1/2, ME=n^2", [&] {
        PolytopeCollection c({axis_segment(2, 0, 1), axis_segment(2, 1, 1)});
        return "MV=" + to_string(bernstein_mixed_volume(c, par)) + ", ME=" +
               mixed_ehrhart(c, par).polynomial.str();
    });
    rec.guarded("complementary-example", "product-proposition", "oracle=2, dmv=2", [&] {
        PolytopeCollection c({axis_segment(2, 0, 2), axis_segment(2, 1, 1)});
        return "oracle=" + complementary_dmv_oracle(c).get_str() + ", dmv=" + dmv(c, par).get_str();
    });

    rec.guarded("scan-simplex3-pair", "dilation-corollary",
                "r1=(0,3,4,-1) tail=false; r3 all diagnostics true", [&] {
                    PolytopeCollection c({simplex3, simplex3});
                    const auto reports = scan_dilates(c, 3, par);
                    const DilationReport& r1 = reports[0];
                    const DilationReport& r3 = reports[2];
                    if (ints_str(r1.hstar.entries) != "(0,3,4,-1)" || r1.positive_tail)
                        return std::string("unexpected r=1 report: ") + ints_str(r1.hstar.entries);
                    if (!(r3.positive_tail && r3.real_rooted && r3.log_concave && r3.unimodal))
                        return std::string("r=3 diagnostics incomplete");
                    return std::string("r1=(0,3,4,-1) tail=false; r3 all diagnostics true");
                });
    rec.guarded("find-r-simplex3-pair", "dilation-corollary", "3", [&] {
        const auto r = find_min_r(PolytopeCollection({simplex3, simplex3}), 10, par);
        return r ? std::to_string(*r) : std::string("not found");
    });

    return ledger;
}

VerificationLedger run_property_suite(std::uint64_t seed, int cases, const Parallelism& par) {
    if (cases < 1) throw std::invalid_argument("property suite needs at least one case");
    VerificationLedger ledger;
    Tally tally;
    std::mt19937_64 rng(seed);
    run_random_cases(tally, rng, cases, par);
    std::mt19937_64 rng_complementary(seed ^ 0x9e3779b97f4a7c15ULL);
    run_complementary_cases(tally, rng_complementary);
    std::mt19937_64 rng_separated(seed ^ 0xc2b2ae3d27d4eb4fULL);
    run_separated_pair_cases(tally, rng_separated);
    tally.flush(ledger);
    return ledger;
}

}  // namespace mehr
