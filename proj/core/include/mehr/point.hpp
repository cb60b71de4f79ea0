#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace mehr {

/// Lattice points use machine integers; every product is accumulated in
/// 128-bit arithmetic and range-checked before narrowing, so results are
/// exact or the operation throws.
using Coord = std::int64_t;
using Point = std::vector<Coord>;
using Wide = __int128;

inline Coord narrow_checked(Wide v) {
    if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN))
        throw std::overflow_error("lattice coordinate overflow");
    return static_cast<Coord>(v);
}

inline Wide dot_wide(std::span<const Coord> a, std::span<const Coord> b) {
    Wide acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += Wide(a[i]) * Wide(b[i]);
    return acc;
}

inline Coord dot(std::span<const Coord> a, std::span<const Coord> b) {
    return narrow_checked(dot_wide(a, b));
}

inline Point add(const Point& a, const Point& b) {
    Point out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = narrow_checked(Wide(a[i]) + Wide(b[i]));
    return out;
}

inline Point sub(const Point& a, const Point& b) {
    Point out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = narrow_checked(Wide(a[i]) - Wide(b[i]));
    return out;
}

inline Point scale(const Point& a, Coord c) {
    Point out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = narrow_checked(Wide(a[i]) * Wide(c));
    return out;
}

inline Point negate(const Point& a) {
    Point out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

inline bool is_zero(const Point& a) {
    for (Coord c : a)
        if (c != 0) return false;
    return true;
}

inline Coord content(const Point& a) {
    Coord g = 0;
    for (Coord c : a) g = std::gcd(g, c);
    return g;
}

/// Divides out the gcd of the entries; the zero vector is left unchanged.
inline Point primitive(Point a) {
    Coord g = content(a);
    if (g > 1)
        for (Coord& c : a) c /= g;
    return a;
}

inline bool is_primitive(const Point& a) { return content(a) == 1; }

}  // namespace mehr
