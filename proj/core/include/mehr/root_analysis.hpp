#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mehr/mixed_invariants.hpp"
#include "mehr/polynomial.hpp"
#include "mehr/rational.hpp"

namespace mehr {

/// A_d(z) = sum_k A(d,k) z^k, the numerator of sum_n n^d z^n over
/// (1-z)^(d+1). Coefficients are the Eulerian numbers.
struct EulerianPolynomial {
    int d = 0;
    Polynomial polynomial;
};

/// One isolated real root: contained in the half-open interval (lo, hi].
struct IsolatedRoot {
    Rat lo, hi;
    int multiplicity = 1;
};

struct RootReport {
    bool real_rooted = false;
    std::vector<IsolatedRoot> roots;  // ascending
};

/// Diagnostics of the mixed h*-vector of the dilated collection r*P.
struct DilationReport {
    Coord r = 0;
    MixedHStarVector hstar;
    bool real_rooted = false;
    bool positive_tail = false;  // h*_i > 0 for 1 <= i <= d
    bool log_concave = false;
    bool unimodal = false;
    Rat limit_distance;  // max_i |h*_i / r^d - limit_i|
};

EulerianPolynomial eulerian(int d);

/// Number of distinct real roots of p in (lo, hi], by Sturm sign variations
/// on the square-free part. Exact rational arithmetic throughout.
int sturm_real_root_count(const Polynomial& p, const Rat& lo, const Rat& hi);

/// Isolates all real roots (intervals refined below the given width) and
/// reports whether the real-root count with multiplicity reaches the degree.
RootReport is_real_rooted(const Polynomial& p, const Rat& interval_width = Rat(1, 1024));

bool is_log_concave(std::span<const Int> seq);
bool is_unimodal(std::span<const Int> seq);

/// Limit of h*_{rP}(z)/r^d: the alternating volume sum times A_d(z). The
/// scalar factor is checked against me_top. Requires every P_i
/// full-dimensional.
Polynomial asymptotic_limit(const PolytopeCollection& c, const Parallelism& par = {});

/// h*(r*P) for r = 1..r_max via substitution into ME (no re-enumeration),
/// with root/positivity/concavity diagnostics per dilate.
std::vector<DilationReport> scan_dilates(const PolytopeCollection& c, Coord r_max,
                                         const Parallelism& par = {});

/// Smallest r such that all four diagnostics hold for every r' in
/// [r, r_max]; an empirical witness, nullopt when no such r exists.
std::optional<Coord> find_min_r(const PolytopeCollection& c, Coord r_max,
                                const Parallelism& par = {});

}  // namespace mehr
