#include "mehr/enumeration.hpp"

#include <stdexcept>

namespace mehr {

namespace {

Wide floor_div_wide(Wide num, Wide den) {
    Wide q = num / den;
    if (num % den != 0 && ((num < 0) != (den < 0))) --q;
    return q;
}

Wide ceil_div_wide(Wide num, Wide den) { return -floor_div_wide(-num, den); }

struct ColumnRange {
    Wide lo, hi;        // weak interval (membership)
    Wide slo, shi;      // strict interval (relative interior)
    bool feasible = true;
    bool interior_feasible = true;
};

// Feasible range of the last coordinate over the column fixed by prefix.
ColumnRange column_range(const LatticePolytope& p, const Point& prefix, Coord box_lo, Coord box_hi) {
    ColumnRange r{box_lo, box_hi, box_lo, box_hi};
    const size_t last = prefix.size();
    for (const AffineEquation& eq : p.halfspace_description().equations) {
        const Wide partial = dot_wide(std::span(eq.normal).first(last), prefix);
        const Coord ud = eq.normal[last];
        if (ud == 0) {
            if (partial != Wide(eq.value)) {
                r.feasible = false;
                return r;
            }
            continue;
        }
        const Wide num = Wide(eq.value) - partial;
        if (num % ud != 0) {
            r.feasible = false;
            return r;
        }
        const Wide z = num / ud;
        r.lo = std::max(r.lo, z);
        r.hi = std::min(r.hi, z);
        r.slo = std::max(r.slo, z);
        r.shi = std::min(r.shi, z);
    }
    for (const FacetInequality& f : p.halfspace_description().facets) {
        const Wide partial = dot_wide(std::span(f.normal).first(last), prefix);
        const Coord ad = f.normal[last];
        const Wide rest = Wide(f.offset) - partial;
        if (ad == 0) {
            if (rest < 0) {
                r.feasible = false;
                return r;
            }
            if (rest == 0) r.interior_feasible = false;  // whole column on this facet
        } else if (ad > 0) {
            const Wide bound = floor_div_wide(rest, ad);
            r.hi = std::min(r.hi, bound);
            r.shi = std::min(r.shi, rest % ad == 0 ? bound - 1 : bound);
        } else {
            const Wide bound = ceil_div_wide(rest, ad);
            r.lo = std::max(r.lo, bound);
            r.slo = std::max(r.slo, rest % ad == 0 ? bound + 1 : bound);
        }
    }
    return r;
}

template <typename ColumnFn>
void for_each_column(const Point& lo, const Point& hi, ColumnFn&& fn) {
    const size_t prefix_len = lo.size() - 1;
    Point cur(lo.begin(), lo.begin() + static_cast<std::ptrdiff_t>(prefix_len));
    while (true) {
        fn(cur);
        size_t axis = prefix_len;
        while (axis > 0) {
            --axis;
            if (cur[axis] < hi[axis]) {
                ++cur[axis];
                for (size_t t = axis + 1; t < prefix_len; ++t) cur[t] = lo[t];
                break;
            }
            if (axis == 0) return;
        }
        if (prefix_len == 0) return;
    }
}

CountResult count_by_point_scan(const LatticePolytope& p) {
    const auto [lo, hi] = p.bounding_box();
    CountResult out;
    Point z = lo;
    while (true) {
        const Containment c = p.contains(z);
        if (c != Containment::Outside) ++out.total;
        if (c == Containment::Interior) ++out.interior;
        size_t axis = z.size();
        bool done = true;
        while (axis > 0) {
            --axis;
            if (z[axis] < hi[axis]) {
                ++z[axis];
                for (size_t t = axis + 1; t < z.size(); ++t) z[t] = lo[t];
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return out;
}

}  // namespace

CountResult count_points(const LatticePolytope& p, CountEngine engine) {
    if (p.ambient_dimension() == 0) return {1, 1};
    if (engine == CountEngine::PointScan) return count_by_point_scan(p);

    const auto [lo, hi] = p.bounding_box();
    CountResult out;
    for_each_column(lo, hi, [&](const Point& prefix) {
        const ColumnRange r = column_range(p, prefix, lo.back(), hi.back());
        if (!r.feasible) return;
        if (r.hi >= r.lo) out.total += static_cast<std::int64_t>(r.hi - r.lo + 1);
        if (r.interior_feasible && r.shi >= r.slo)
            out.interior += static_cast<std::int64_t>(r.shi - r.slo + 1);
    });
    return out;
}

std::vector<Point> enumerate_points(const LatticePolytope& p) {
    if (p.ambient_dimension() == 0) return {Point{}};
    const auto [lo, hi] = p.bounding_box();
    std::vector<Point> points;
    for_each_column(lo, hi, [&](const Point& prefix) {
        const ColumnRange r = column_range(p, prefix, lo.back(), hi.back());
        if (!r.feasible || r.hi < r.lo) return;
        Point z = prefix;
        z.push_back(0);
        for (Wide v = r.lo; v <= r.hi; ++v) {
            z.back() = static_cast<Coord>(v);
            points.push_back(z);
        }
    });
    return points;
}

}  // namespace mehr
