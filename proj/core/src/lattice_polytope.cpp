#include "mehr/lattice_polytope.hpp"

#include <algorithm>
#include <stdexcept>

#include "mehr/intlinalg.hpp"

namespace mehr {

namespace {

void sort_unique(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

void check_points(int ambient, const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("polytope needs at least one generator");
    for (const Point& p : pts)
        if (std::cmp_not_equal(p.size(), ambient))
            throw std::invalid_argument("generator has wrong ambient dimension");
}

Point canonical_sign(Point v) {
    for (Coord c : v) {
        if (c > 0) return v;
        if (c < 0) return negate(v);
    }
    return v;
}

// Laplace determinant over 128-bit integers; n stays tiny (<= 5).
Wide det_laplace(const std::vector<std::vector<Wide>>& m, int row, unsigned used_cols, int n) {
    if (row == n) return 1;
    Wide acc = 0;
    int sign = 1;
    for (int c = 0, seen = 0; c < static_cast<int>(m[0].size()); ++c) {
        if (used_cols & (1u << c)) continue;
        if (seen++ >= n) break;
        if (m[static_cast<size_t>(row)][static_cast<size_t>(c)] != 0) {
            Wide sub = det_laplace(m, row + 1, used_cols | (1u << c), n);
            acc += sign * m[static_cast<size_t>(row)][static_cast<size_t>(c)] * sub;
        }
        sign = -sign;
    }
    return acc;
}

// Normal of the hyperplane through the m chosen points in Z^m (cofactor
// vector of the difference matrix); zero vector if they are affinely
// dependent.
Point hyperplane_normal(const std::vector<Point>& pts, const std::vector<int>& idx, int m) {
    const Point& base = pts[static_cast<size_t>(idx[0])];
    Coord max_entry = 1;
    std::vector<std::vector<Wide>> diff(static_cast<size_t>(m) - 1,
                                        std::vector<Wide>(static_cast<size_t>(m)));
    for (int r = 1; r < m; ++r) {
        const Point& p = pts[static_cast<size_t>(idx[static_cast<size_t>(r)])];
        for (int c = 0; c < m; ++c) {
            Coord v = p[static_cast<size_t>(c)] - base[static_cast<size_t>(c)];
            diff[static_cast<size_t>(r) - 1][static_cast<size_t>(c)] = v;
            max_entry = std::max(max_entry, std::abs(v));
        }
    }
    if (max_entry > (Coord(1) << 30)) throw std::overflow_error("lattice coordinates too large");
    Point normal(static_cast<size_t>(m));
    int sign = 1;
    for (int skip = 0; skip < m; ++skip) {
        Wide minor = det_laplace(diff, 0, 1u << skip, m - 1);
        normal[static_cast<size_t>(skip)] = narrow_checked(sign * minor);
        sign = -sign;
    }
    return normal;
}

// Drops every point lying strictly inside a lattice segment between two
// input points. Extreme points always survive, so the hull is unchanged.
std::vector<Point> segment_filter(std::vector<Point> pts) {
    if (pts.size() <= 2) return pts;
    std::vector<bool> removed(pts.size(), false);
    auto index_of = [&](const Point& q) -> std::ptrdiff_t {
        auto it = std::lower_bound(pts.begin(), pts.end(), q);
        if (it == pts.end() || *it != q) return -1;
        return it - pts.begin();
    };
    Point probe(pts[0].size());
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            Point dir = sub(pts[j], pts[i]);
            Coord g = content(dir);
            if (g <= 1) continue;
            for (Coord& c : dir) c /= g;
            probe = pts[i];
            for (Coord s = 1; s < g; ++s) {
                for (size_t t = 0; t < probe.size(); ++t) probe[t] += dir[t];
                std::ptrdiff_t at = index_of(probe);
                if (at >= 0) removed[static_cast<size_t>(at)] = true;
            }
        }
    }
    std::vector<Point> kept;
    kept.reserve(pts.size());
    for (size_t i = 0; i < pts.size(); ++i)
        if (!removed[i]) kept.push_back(std::move(pts[i]));
    return kept;
}

// Facets of conv(pts) for a point set affinely spanning Z^m: every
// hyperplane through m affinely independent candidate points is tested for
// being supporting. Candidate subsets already tight on a found facet are
// skipped via per-point bitmasks.
std::vector<FacetInequality> enumerate_facets_fulldim(const std::vector<Point>& pts, int m) {
    std::vector<FacetInequality> facets;
    if (m == 0) return facets;
    if (m == 1) {
        Coord lo = pts[0][0], hi = pts[0][0];
        for (const Point& p : pts) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        facets.push_back({Point{-1}, -lo});
        facets.push_back({Point{1}, hi});
        return facets;
    }

    const std::vector<Point> cands = segment_filter(pts);
    const int n = static_cast<int>(cands.size());
    if (n < m + 1) throw std::logic_error("hull candidates do not span the space");

    std::vector<std::vector<std::uint64_t>> tight(static_cast<size_t>(n));
    size_t words = 0;

    std::vector<int> idx(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        bool skip = false;
        if (words > 0) {
            for (size_t w = 0; w < words && !skip; ++w) {
                std::uint64_t common = ~std::uint64_t(0);
                for (int i = 0; i < m; ++i)
                    common &= tight[static_cast<size_t>(idx[static_cast<size_t>(i)])][w];
                if (common) skip = true;
            }
        }
        if (!skip) {
            Point w = hyperplane_normal(cands, idx, m);
            if (!is_zero(w)) {
                w = primitive(std::move(w));
                Wide c = dot_wide(w, cands[static_cast<size_t>(idx[0])]);
                bool above = false, below = false;
                for (int t = 0; t < n; ++t) {
                    Wide s = dot_wide(w, cands[static_cast<size_t>(t)]) - c;
                    if (s > 0) above = true;
                    else if (s < 0) below = true;
                    if (above && below) break;
                }
                if (above != below) {  // supporting and not all-tight
                    if (above) {
                        w = negate(w);
                        c = -c;
                    }
                    const size_t bit = facets.size();
                    facets.push_back({w, narrow_checked(c)});
                    const size_t word = bit / 64;
                    if (word >= words) {
                        ++words;
                        for (auto& mask : tight) mask.resize(words, 0);
                    }
                    for (int t = 0; t < n; ++t)
                        if (dot_wide(facets.back().normal, cands[static_cast<size_t>(t)]) == Wide(facets.back().offset))
                            tight[static_cast<size_t>(t)][word] |= std::uint64_t(1) << (bit % 64);
                }
            }
        }
        // next combination
        int i = m - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - m + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < m; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }

    std::sort(facets.begin(), facets.end(), [](const FacetInequality& a, const FacetInequality& b) {
        return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
    });
    return facets;
}

// Bareiss fraction-free elimination; entries stay minors, exact throughout.
int rank_small(std::vector<std::vector<Wide>> m, int cols, int stop_at) {
    const int rows = static_cast<int>(m.size());
    Wide prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(rank)]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    (m[static_cast<size_t>(r)][static_cast<size_t>(c)] *
                         m[static_cast<size_t>(rank)][static_cast<size_t>(col)] -
                     m[static_cast<size_t>(r)][static_cast<size_t>(col)] *
                         m[static_cast<size_t>(rank)][static_cast<size_t>(c)]) /
                    prev;
            m[static_cast<size_t>(r)][static_cast<size_t>(col)] = 0;
        }
        prev = m[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        ++rank;
        if (rank >= stop_at) return rank;
    }
    return rank;
}

}  // namespace

LatticePolytope::LatticePolytope(int ambient_dimension, std::vector<Point> generators)
    : ambient_(ambient_dimension) {
    if (ambient_dimension < 0) throw std::invalid_argument("negative ambient dimension");
    check_points(ambient_dimension, generators);
    sort_unique(generators);
    generators_ = std::move(generators);
    build(generators_);
}

LatticePolytope::LatticePolytope(int ambient, std::vector<Point> generators,
                                 std::vector<Point> hull_candidates)
    : ambient_(ambient) {
    check_points(ambient, generators);
    sort_unique(generators);
    sort_unique(hull_candidates);
    generators_ = std::move(generators);
    build(std::move(hull_candidates));
}

LatticePolytope LatticePolytope::single_point(Point p) {
    const int ambient = static_cast<int>(p.size());
    return LatticePolytope(ambient, {std::move(p)});
}

LatticePolytope LatticePolytope::origin(int ambient_dimension) {
    return single_point(Point(static_cast<size_t>(ambient_dimension), 0));
}

LatticePolytope LatticePolytope::from_known_hrep(int ambient, std::vector<Point> generators,
                                                 HalfspaceDescription hrep, int dim) {
    LatticePolytope p;
    p.ambient_ = ambient;
    check_points(ambient, generators);
    sort_unique(generators);
    p.generators_ = std::move(generators);
    p.hrep_ = std::move(hrep);
    p.dim_ = dim;
    p.compute_vertices();
    return p;
}

void LatticePolytope::build(std::vector<Point> hull_candidates) {
    const Point& base = hull_candidates[0];
    std::vector<Point> dirs;
    dirs.reserve(hull_candidates.size() - 1);
    for (size_t i = 1; i < hull_candidates.size(); ++i) dirs.push_back(sub(hull_candidates[i], base));

    IntMatrix eq_rows = integer_kernel_basis(to_int_matrix(dirs), ambient_);
    dim_ = ambient_ - static_cast<int>(eq_rows.size());
    hrep_.equations.clear();
    for (Point& normal : to_point_rows(eq_rows)) {
        normal = canonical_sign(std::move(normal));
        const Coord value = dot(normal, base);
        hrep_.equations.push_back({std::move(normal), value});
    }
    std::sort(hrep_.equations.begin(), hrep_.equations.end(),
              [](const AffineEquation& a, const AffineEquation& b) { return a.normal < b.normal; });

    if (dim_ == 0) {
        hrep_.facets.clear();
    } else if (dim_ == ambient_) {
        hrep_.facets = enumerate_facets_fulldim(hull_candidates, ambient_);
    } else {
        // lattice basis of the affine hull directions; facet search happens in
        // the full-dimensional image and normals are lifted back
        IntMatrix eq_matrix(hrep_.equations.size());
        for (size_t i = 0; i < hrep_.equations.size(); ++i)
            eq_matrix[i] = to_int_matrix({hrep_.equations[i].normal})[0];
        IntMatrix basis = integer_kernel_basis(eq_matrix, ambient_);
        if (std::cmp_not_equal(basis.size(), dim_)) throw std::logic_error("affine hull basis rank mismatch");
        IntMatrix columns(static_cast<size_t>(ambient_), std::vector<Int>(basis.size()));
        for (size_t r = 0; r < basis.size(); ++r)
            for (size_t c = 0; c < static_cast<size_t>(ambient_); ++c) columns[c][r] = basis[r][c];

        std::vector<Point> projected;
        projected.reserve(hull_candidates.size());
        for (const Point& p : hull_candidates) {
            Point delta = sub(p, base);
            std::vector<Int> rhs;
            rhs.reserve(delta.size());
            for (Coord c : delta) rhs.emplace_back(static_cast<long>(c));
            auto u = solve_rational(columns, rhs);
            if (!u) throw std::logic_error("generator off its own affine hull");
            Point coords(u->size());
            for (size_t t = 0; t < u->size(); ++t) {
                if (!is_integral((*u)[t])) throw std::logic_error("affine hull basis is not a lattice basis");
                coords[t] = static_cast<Coord>(to_integer((*u)[t]).get_si());
            }
            projected.push_back(std::move(coords));
        }
        std::vector<Point> proj_sorted = projected;
        sort_unique(proj_sorted);

        hrep_.facets.clear();
        for (const FacetInequality& f : enumerate_facets_fulldim(proj_sorted, dim_)) {
            std::vector<Int> w;
            w.reserve(f.normal.size());
            for (Coord c : f.normal) w.emplace_back(static_cast<long>(c));
            auto lifted = solve_integer(basis, w);
            if (!lifted) throw std::logic_error("facet normal does not lift to the ambient lattice");
            Point a = to_point_rows({*lifted})[0];
            const Coord b = narrow_checked(Wide(dot(a, base)) + Wide(f.offset));
            hrep_.facets.push_back({std::move(a), b});
        }
        std::sort(hrep_.facets.begin(), hrep_.facets.end(),
                  [](const FacetInequality& a, const FacetInequality& b) {
                      return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
                  });
    }
    compute_vertices();
}

void LatticePolytope::compute_vertices() {
    vertices_.clear();
    const size_t constraints = hrep_.equations.size() + hrep_.facets.size();
    std::vector<std::vector<Wide>> rows;
    rows.reserve(constraints);
    for (const Point& g : generators_) {
        rows.clear();
        for (const AffineEquation& eq : hrep_.equations) {
            rows.emplace_back(eq.normal.begin(), eq.normal.end());
        }
        for (const FacetInequality& f : hrep_.facets)
            if (dot_wide(f.normal, g) == Wide(f.offset))
                rows.emplace_back(f.normal.begin(), f.normal.end());
        if (std::cmp_less(rows.size(), ambient_)) continue;
        if (ambient_ == 0 || rank_small(rows, ambient_, ambient_) == ambient_) vertices_.push_back(g);
    }
    if (vertices_.empty()) throw std::logic_error("polytope without vertices");
}

Containment LatticePolytope::contains(const Point& z) const {
    if (std::cmp_not_equal(z.size(), ambient_))
        throw std::invalid_argument("point has wrong ambient dimension");
    for (const AffineEquation& eq : hrep_.equations)
        if (dot_wide(eq.normal, z) != Wide(eq.value)) return Containment::Outside;
    bool tight = false;
    for (const FacetInequality& f : hrep_.facets) {
        const Wide slack = Wide(f.offset) - dot_wide(f.normal, z);
        if (slack < 0) return Containment::Outside;
        if (slack == 0) tight = true;
    }
    return tight ? Containment::Boundary : Containment::Interior;
}

Coord LatticePolytope::support(const Point& direction) const {
    if (std::cmp_not_equal(direction.size(), ambient_))
        throw std::invalid_argument("direction has wrong ambient dimension");
    Wide best = dot_wide(direction, vertices_[0]);
    for (size_t i = 1; i < vertices_.size(); ++i)
        best = std::max(best, dot_wide(direction, vertices_[i]));
    return narrow_checked(best);
}

std::pair<Point, Point> LatticePolytope::bounding_box() const {
    Point lo = generators_[0], hi = generators_[0];
    for (const Point& g : generators_)
        for (size_t i = 0; i < g.size(); ++i) {
            lo[i] = std::min(lo[i], g[i]);
            hi[i] = std::max(hi[i], g[i]);
        }
    return {lo, hi};
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.ambient_dimension() != q.ambient_dimension())
        throw std::invalid_argument("ambient dimension mismatch");
    std::vector<Point> gens;
    gens.reserve(p.generators().size() * q.generators().size());
    for (const Point& a : p.generators())
        for (const Point& b : q.generators()) gens.push_back(add(a, b));
    std::vector<Point> cands;
    cands.reserve(p.vertices().size() * q.vertices().size());
    for (const Point& a : p.vertices())
        for (const Point& b : q.vertices()) cands.push_back(add(a, b));
    return LatticePolytope(p.ambient_dimension(), std::move(gens), std::move(cands));
}

LatticePolytope dilate(const LatticePolytope& p, Coord r) {
    if (r < 0) throw std::invalid_argument("negative dilation factor");
    if (r == 0) return LatticePolytope::origin(p.ambient_dimension());
    if (r == 1) return p;
    std::vector<Point> gens;
    gens.reserve(p.generators().size());
    for (const Point& g : p.generators()) gens.push_back(scale(g, r));
    HalfspaceDescription hrep;
    for (const AffineEquation& eq : p.halfspace_description().equations)
        hrep.equations.push_back({eq.normal, narrow_checked(Wide(eq.value) * Wide(r))});
    for (const FacetInequality& f : p.halfspace_description().facets)
        hrep.facets.push_back({f.normal, narrow_checked(Wide(f.offset) * Wide(r))});
    return LatticePolytope::from_known_hrep(p.ambient_dimension(), std::move(gens), std::move(hrep),
                                            p.dim());
}

LatticePolytope translate(const LatticePolytope& p, const Point& t) {
    if (std::cmp_not_equal(t.size(), p.ambient_dimension()))
        throw std::invalid_argument("translation has wrong ambient dimension");
    std::vector<Point> gens;
    gens.reserve(p.generators().size());
    for (const Point& g : p.generators()) gens.push_back(add(g, t));
    HalfspaceDescription hrep;
    for (const AffineEquation& eq : p.halfspace_description().equations)
        hrep.equations.push_back({eq.normal, narrow_checked(Wide(eq.value) + dot_wide(eq.normal, t))});
    for (const FacetInequality& f : p.halfspace_description().facets)
        hrep.facets.push_back({f.normal, narrow_checked(Wide(f.offset) + dot_wide(f.normal, t))});
    return LatticePolytope::from_known_hrep(p.ambient_dimension(), std::move(gens), std::move(hrep),
                                            p.dim());
}

std::vector<Point> facet_normals(const LatticePolytope& p) {
    if (p.dim() != p.ambient_dimension())
        throw std::invalid_argument("facet normals require full dimension");
    std::vector<Point> normals;
    normals.reserve(p.halfspace_description().facets.size());
    for (const FacetInequality& f : p.halfspace_description().facets) normals.push_back(f.normal);
    return normals;
}

ProjectedFace face_in_direction(const LatticePolytope& p, const Point& a) {
    if (std::cmp_not_equal(a.size(), p.ambient_dimension()))
        throw std::invalid_argument("direction has wrong ambient dimension");
    if (is_zero(a) || !is_primitive(a))
        throw std::invalid_argument("direction must be a nonzero primitive vector");
    const int d = p.ambient_dimension();
    const Coord h = p.support(a);
    std::vector<Point> tight;
    for (const Point& v : p.vertices())
        if (dot_wide(a, v) == Wide(h)) tight.push_back(v);

    IntMatrix kernel = integer_kernel_basis(to_int_matrix({a}), d);  // basis of a^perp cap Z^d
    if (std::cmp_not_equal(kernel.size(), d - 1)) throw std::logic_error("hyperplane lattice rank mismatch");
    IntMatrix columns(static_cast<size_t>(d), std::vector<Int>(kernel.size()));
    for (size_t r = 0; r < kernel.size(); ++r)
        for (size_t c = 0; c < static_cast<size_t>(d); ++c) columns[c][r] = kernel[r][c];

    const Point& base = tight[0];
    std::vector<Point> coords;
    coords.reserve(tight.size());
    for (const Point& v : tight) {
        Point delta = sub(v, base);
        std::vector<Int> rhs;
        rhs.reserve(delta.size());
        for (Coord c : delta) rhs.emplace_back(static_cast<long>(c));
        auto u = solve_rational(columns, rhs);
        if (!u) throw std::logic_error("face vertex off the hyperplane");
        Point q(u->size());
        for (size_t t = 0; t < u->size(); ++t) {
            if (!is_integral((*u)[t])) throw std::logic_error("hyperplane basis is not a lattice basis");
            q[t] = static_cast<Coord>(to_integer((*u)[t]).get_si());
        }
        coords.push_back(std::move(q));
    }
    return {LatticePolytope(d - 1, std::move(coords)), a};
}

LatticePolytope affine_hull_coordinates(const LatticePolytope& p) {
    if (p.dim() == p.ambient_dimension()) return p;
    const auto& equations = p.halfspace_description().equations;
    IntMatrix eq_matrix(equations.size());
    for (size_t i = 0; i < equations.size(); ++i) eq_matrix[i] = to_int_matrix({equations[i].normal})[0];
    IntMatrix basis = integer_kernel_basis(eq_matrix, p.ambient_dimension());
    IntMatrix columns(static_cast<size_t>(p.ambient_dimension()), std::vector<Int>(basis.size()));
    for (size_t r = 0; r < basis.size(); ++r)
        for (size_t c = 0; c < static_cast<size_t>(p.ambient_dimension()); ++c) columns[c][r] = basis[r][c];

    const Point& base = p.generators()[0];
    std::vector<Point> coords;
    coords.reserve(p.generators().size());
    for (const Point& g : p.generators()) {
        Point delta = sub(g, base);
        std::vector<Int> rhs;
        rhs.reserve(delta.size());
        for (Coord c : delta) rhs.emplace_back(static_cast<long>(c));
        auto u = solve_rational(columns, rhs);
        if (!u) throw std::logic_error("generator off its own affine hull");
        Point q(u->size());
        for (size_t t = 0; t < u->size(); ++t) {
            if (!is_integral((*u)[t])) throw std::logic_error("affine hull basis is not a lattice basis");
            q[t] = static_cast<Coord>(to_integer((*u)[t]).get_si());
        }
        coords.push_back(std::move(q));
    }
    return LatticePolytope(p.dim(), std::move(coords));
}

}  // namespace mehr
