#include "mehr/minkowski_family.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mehr {

MinkowskiFamily::MinkowskiFamily(std::vector<LatticePolytope> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("collection needs at least one polytope");
    if (parts_.size() > 20) throw std::invalid_argument("collection too large");
    ambient_ = parts_[0].ambient_dimension();
    for (const auto& p : parts_)
        if (p.ambient_dimension() != ambient_) throw std::invalid_argument("ambient dimension mismatch");

    const std::uint32_t count = 1u << parts_.size();
    sums_.reserve(count);
    sums_.push_back(LatticePolytope::origin(ambient_));
    for (std::uint32_t mask = 1; mask < count; ++mask) {
        const int low = std::countr_zero(mask);
        const std::uint32_t rest = mask & (mask - 1);
        if (rest == 0) {
            sums_.push_back(parts_[static_cast<size_t>(low)]);
            continue;
        }
        bool all_equal = true;
        int first = -1;
        for (int i = 0; i < part_count(); ++i) {
            if (!(mask & (1u << i))) continue;
            if (first < 0) first = i;
            else if (!(parts_[static_cast<size_t>(i)] == parts_[static_cast<size_t>(first)])) {
                all_equal = false;
                break;
            }
        }
        if (all_equal) {
            // P + ... + P = |J| * P, with a much smaller generating set
            sums_.push_back(dilate(parts_[static_cast<size_t>(first)],
                                   static_cast<Coord>(std::popcount(mask))));
        } else {
            sums_.push_back(minkowski_sum(sums_[rest], parts_[static_cast<size_t>(low)]));
        }
    }
}

const LatticePolytope& MinkowskiFamily::subset_sum(std::uint32_t mask) const {
    if (mask >= sums_.size()) throw std::invalid_argument("subset mask out of range");
    return sums_[mask];
}

LatticePolytope MinkowskiFamily::weighted_sum(std::span<const Coord> weights) const {
    if (std::cmp_not_equal(weights.size(), parts_.size()))
        throw std::invalid_argument("weight count mismatch");
    std::uint32_t mask = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 0) throw std::invalid_argument("negative weight");
        if (weights[i] > 0) mask |= 1u << i;
    }
    if (mask == 0) return sums_[0];
    if (std::popcount(mask) == 1)
        return dilate(parts_[static_cast<size_t>(std::countr_zero(mask))],
                      weights[static_cast<size_t>(std::countr_zero(mask))]);

    const LatticePolytope& tmpl = sums_[mask];
    HalfspaceDescription hrep;
    for (const AffineEquation& eq : tmpl.halfspace_description().equations) {
        Wide value = 0;
        for (int i = 0; i < part_count(); ++i)
            if (mask & (1u << i))
                value += Wide(weights[static_cast<size_t>(i)]) *
                         dot_wide(eq.normal, parts_[static_cast<size_t>(i)].vertices()[0]);
        hrep.equations.push_back({eq.normal, narrow_checked(value)});
    }
    for (const FacetInequality& f : tmpl.halfspace_description().facets) {
        Wide offset = 0;
        for (int i = 0; i < part_count(); ++i)
            if (mask & (1u << i))
                offset += Wide(weights[static_cast<size_t>(i)]) *
                          Wide(parts_[static_cast<size_t>(i)].support(f.normal));
        hrep.facets.push_back({f.normal, narrow_checked(offset)});
    }

    // generator set: sums of scaled part vertices over the support
    std::vector<Point> gens = {Point(static_cast<size_t>(ambient_), 0)};
    for (int i = 0; i < part_count(); ++i) {
        if (!(mask & (1u << i))) continue;
        std::vector<Point> next;
        next.reserve(gens.size() * parts_[static_cast<size_t>(i)].vertices().size());
        for (const Point& g : gens)
            for (const Point& v : parts_[static_cast<size_t>(i)].vertices())
                next.push_back(add(g, scale(v, weights[static_cast<size_t>(i)])));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        gens = std::move(next);
    }
    return LatticePolytope::from_known_hrep(ambient_, std::move(gens), std::move(hrep), tmpl.dim());
}

}  // namespace mehr
