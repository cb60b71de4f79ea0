#include "mehr/root_analysis.hpp"

#include <stdexcept>

#include "mehr/binomial_basis.hpp"

namespace mehr {

EulerianPolynomial eulerian(int d) {
    if (d < 1) throw std::invalid_argument("Eulerian polynomial requires d >= 1");
    // A(d,k) = k A(d-1,k) + (d-k+1) A(d-1,k-1)
    std::vector<Int> row = {Int(0), Int(1)};  // A_1(z) = z
    for (int n = 2; n <= d; ++n) {
        std::vector<Int> next(static_cast<size_t>(n) + 1, 0);
        for (int k = 1; k <= n; ++k) {
            Int value = 0;
            if (std::cmp_less(k, row.size())) value += k * row[static_cast<size_t>(k)];
            if (k >= 1 && std::cmp_less(k - 1, row.size()))
                value += (n - k + 1) * row[static_cast<size_t>(k) - 1];
            next[static_cast<size_t>(k)] = value;
        }
        row = std::move(next);
    }
    std::vector<Rat> coeffs(row.size());
    for (size_t i = 0; i < row.size(); ++i) coeffs[i] = Rat(row[i]);
    return {d, Polynomial(std::move(coeffs))};
}

namespace {

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    Polynomial rem = num;
    Polynomial quot;
    const int dd = den.degree();
    while (!rem.is_zero() && rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        const Rat factor = rem.leading_coefficient() / den.leading_coefficient();
        const Polynomial term = Polynomial::monomial(shift, factor);
        quot += term;
        rem -= term * den;
    }
    return {quot, rem};
}

Polynomial square_free_part(const Polynomial& p) {
    const Polynomial g = polynomial_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    auto [q, r] = divmod(p, g);
    if (!r.is_zero()) throw std::logic_error("square-free reduction left a remainder");
    return q;
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain = {p, p.derivative()};
    while (!chain.back().is_zero()) {
        Polynomial next = -polynomial_remainder(chain[chain.size() - 2], chain.back());
        if (next.is_zero()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rat& x) {
    int variations = 0;
    int last = 0;
    for (const Polynomial& q : chain) {
        const Rat v = q(x);
        const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

// Cauchy bound: all roots lie strictly inside (-B, B).
Rat root_bound(const Polynomial& p) {
    Rat max_ratio = 0;
    const Rat lead = p.leading_coefficient();
    for (int i = 0; i < p.degree(); ++i) {
        Rat r = p.coeff(i) / lead;
        if (r < 0) r = -r;
        max_ratio = std::max(max_ratio, r);
    }
    return max_ratio + 1;
}

int count_in(const std::vector<Polynomial>& chain, const Rat& lo, const Rat& hi) {
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int distinct_real_roots(const Polynomial& p) {
    if (p.degree() <= 0) return 0;
    const Polynomial q = square_free_part(p);
    if (q.degree() <= 0) return 0;
    const auto chain = sturm_chain(q);
    const Rat b = root_bound(q);
    return count_in(chain, -b, b);
}

}  // namespace

int sturm_real_root_count(const Polynomial& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("empty interval");
    if (p.degree() == 0) return 0;
    const Polynomial q = square_free_part(p);
    if (q.degree() == 0) return 0;
    return count_in(sturm_chain(q), lo, hi);
}

RootReport is_real_rooted(const Polynomial& p, const Rat& interval_width) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    RootReport report;
    if (p.degree() == 0) {
        report.real_rooted = true;
        return report;
    }

    // real roots counted with multiplicity via the repeated-gcd chain
    int with_multiplicity = 0;
    std::vector<Polynomial> gcd_levels;
    for (Polynomial cur = p; cur.degree() > 0;) {
        with_multiplicity += distinct_real_roots(cur);
        gcd_levels.push_back(cur);
        cur = polynomial_gcd(cur, cur.derivative());
        if (!cur.is_zero() && cur.degree() > 0 && cur.degree() >= gcd_levels.back().degree())
            throw std::logic_error("gcd chain failed to descend");
    }
    report.real_rooted = with_multiplicity == p.degree();

    // isolate the distinct roots of the square-free part by bisection
    const Polynomial q = square_free_part(p);
    if (q.degree() == 0) return report;
    const auto chain = sturm_chain(q);
    const Rat bound = root_bound(q);
    std::vector<std::pair<Rat, Rat>> stack = {{-bound, bound}};
    std::vector<std::pair<Rat, Rat>> isolated;
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        const int roots_here = count_in(chain, lo, hi);
        if (roots_here == 0) continue;
        if (roots_here == 1 && hi - lo < interval_width) {
            isolated.emplace_back(lo, hi);
            continue;
        }
        const Rat mid = (lo + hi) / 2;
        stack.emplace_back(mid, hi);
        stack.emplace_back(lo, mid);
    }
    std::sort(isolated.begin(), isolated.end());

    for (const auto& [lo, hi] : isolated) {
        IsolatedRoot root{lo, hi, 1};
        // multiplicity in p: one level per gcd layer still containing the root
        for (size_t level = 1; level < gcd_levels.size(); ++level) {
            const Polynomial sq = square_free_part(gcd_levels[level]);
            if (sq.degree() > 0 && count_in(sturm_chain(sq), lo, hi) == 1)
                root.multiplicity = static_cast<int>(level) + 1;
        }
        report.roots.push_back(std::move(root));
    }
    return report;
}

bool is_log_concave(std::span<const Int> seq) {
    if (seq.empty()) throw std::invalid_argument("empty sequence");
    for (size_t i = 1; i + 1 < seq.size(); ++i)
        if (seq[i] * seq[i] < seq[i - 1] * seq[i + 1]) return false;
    return true;
}

bool is_unimodal(std::span<const Int> seq) {
    if (seq.empty()) throw std::invalid_argument("empty sequence");
    size_t i = 1;
    while (i < seq.size() && seq[i - 1] <= seq[i]) ++i;
    while (i < seq.size() && seq[i - 1] >= seq[i]) ++i;
    return i == seq.size();
}

Polynomial asymptotic_limit(const PolytopeCollection& c, const Parallelism& par) {
    const int d = c.ambient_dimension();
    if (!c.all_full_dimensional())
        throw std::invalid_argument("theorem requires full-dimensional polytopes");
    const int k = c.size();
    Rat scalar = 0;  // the empty subset has no d-volume and drops out
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        const Rat vol = volume(c.family().subset_sum(mask));
        if ((k - std::popcount(mask)) % 2 == 0)
            scalar += vol;
        else
            scalar -= vol;
    }
    if (scalar != me_top(c, par))
        throw std::logic_error("limit scalar does not match the leading mixed coefficient");
    return eulerian(d).polynomial * scalar;
}

std::vector<DilationReport> scan_dilates(const PolytopeCollection& c, Coord r_max,
                                         const Parallelism& par) {
    if (r_max < 1) throw std::invalid_argument("r_max must be positive");
    const int d = c.sum_dimension();
    const MixedEhrhartResult me = mixed_ehrhart(c, par);
    const Polynomial limit = asymptotic_limit(c, par);

    std::vector<DilationReport> reports(static_cast<size_t>(r_max));
    parallel_for(static_cast<int>(r_max), par, [&](int i) {
        const Coord r = static_cast<Coord>(i) + 1;
        const Polynomial me_r = me.polynomial.scale_variable(Rat(static_cast<long>(r)));
        const BinomialBasisVector basis = to_binomial_basis(me_r, d);

        DilationReport rep;
        rep.r = r;
        rep.hstar.degree = d;
        for (const Rat& q : basis.entries) {
            if (!is_integral(q)) throw std::logic_error("mixed h* entry is not an integer");
            rep.hstar.entries.push_back(q.get_num());
        }

        std::vector<Rat> hstar_coeffs(rep.hstar.entries.size());
        for (size_t t = 0; t < rep.hstar.entries.size(); ++t)
            hstar_coeffs[t] = Rat(rep.hstar.entries[t]);
        const Polynomial hstar_poly{std::vector<Rat>(hstar_coeffs)};

        rep.real_rooted = is_real_rooted(hstar_poly).real_rooted;
        rep.positive_tail = true;
        for (int t = 1; t <= d; ++t)
            if (rep.hstar.entries[static_cast<size_t>(t)] <= 0) rep.positive_tail = false;
        rep.log_concave = is_log_concave(rep.hstar.entries);
        rep.unimodal = is_unimodal(rep.hstar.entries);

        const Rat rd = rat_pow(Rat(static_cast<long>(r)), static_cast<unsigned>(d));
        Rat dist = 0;
        for (int t = 0; t <= d; ++t) {
            Rat delta = Rat(rep.hstar.entries[static_cast<size_t>(t)]) / rd - limit.coeff(t);
            if (delta < 0) delta = -delta;
            dist = std::max(dist, delta);
        }
        rep.limit_distance = dist;

        // real-rooted polynomials with positive coefficients have log-concave
        // unimodal coefficient sequences; any counterexample is a bug
        if (rep.positive_tail && rep.real_rooted && (!rep.log_concave || !rep.unimodal))
            throw std::logic_error("real-rooted positive h* failed log-concavity or unimodality");
        reports[static_cast<size_t>(i)] = std::move(rep);
    });
    return reports;
}

std::optional<Coord> find_min_r(const PolytopeCollection& c, Coord r_max, const Parallelism& par) {
    const std::vector<DilationReport> reports = scan_dilates(c, r_max, par);
    std::optional<Coord> witness;
    for (auto it = reports.rbegin(); it != reports.rend(); ++it) {
        if (it->real_rooted && it->positive_tail && it->log_concave && it->unimodal)
            witness = it->r;
        else
            break;
    }
    return witness;
}

}  // namespace mehr
