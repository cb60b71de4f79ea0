#include "mehr/multivariate.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mehr {

MultivariatePolynomial::MultivariatePolynomial(int arity) : arity_(arity) {
    if (arity < 0) throw std::invalid_argument("negative arity");
}

MultivariatePolynomial MultivariatePolynomial::constant(int arity, Rat c) {
    MultivariatePolynomial p(arity);
    p.add_term(Exponents(static_cast<size_t>(arity), 0), c);
    return p;
}

void MultivariatePolynomial::add_term(Exponents alpha, const Rat& c) {
    if (std::cmp_not_equal(alpha.size(), arity_))
        throw std::invalid_argument("exponent tuple arity mismatch");
    for (int e : alpha)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(alpha), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat MultivariatePolynomial::coefficient(const Exponents& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rat(0) : it->second;
}

int MultivariatePolynomial::total_degree() const {
    int deg = -1;
    for (const auto& [alpha, c] : terms_)
        deg = std::max(deg, std::accumulate(alpha.begin(), alpha.end(), 0));
    return deg;
}

int MultivariatePolynomial::degree_in(int var) const {
    if (var < 0 || var >= arity_) throw std::invalid_argument("variable index out of range");
    int deg = -1;
    for (const auto& [alpha, c] : terms_) deg = std::max(deg, alpha[static_cast<size_t>(var)]);
    return deg;
}

Rat MultivariatePolynomial::evaluate(std::span<const Rat> point) const {
    if (std::cmp_not_equal(point.size(), arity_))
        throw std::invalid_argument("evaluation point arity mismatch");
    Rat acc = 0;
    for (const auto& [alpha, c] : terms_) {
        Rat term = c;
        for (int v = 0; v < arity_; ++v)
            term *= rat_pow(point[static_cast<size_t>(v)],
                            static_cast<unsigned>(alpha[static_cast<size_t>(v)]));
        acc += term;
    }
    return acc;
}

Rat MultivariatePolynomial::evaluate_at_integers(std::span<const long> point) const {
    std::vector<Rat> rat_point(point.size());
    for (size_t i = 0; i < point.size(); ++i) rat_point[i] = Rat(point[i]);
    return evaluate(rat_point);
}

Polynomial MultivariatePolynomial::diagonal() const {
    Polynomial out;
    for (const auto& [alpha, c] : terms_) {
        int total = std::accumulate(alpha.begin(), alpha.end(), 0);
        out += Polynomial::monomial(total, c);
    }
    return out;
}

MultivariatePolynomial MultivariatePolynomial::homogeneous_part(int deg) const {
    MultivariatePolynomial out(arity_);
    for (const auto& [alpha, c] : terms_)
        if (std::accumulate(alpha.begin(), alpha.end(), 0) == deg) out.add_term(alpha, c);
    return out;
}

MultivariatePolynomial MultivariatePolynomial::operator+(const MultivariatePolynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch in addition");
    MultivariatePolynomial out = *this;
    for (const auto& [alpha, c] : o.terms_) out.add_term(alpha, c);
    return out;
}

MultivariatePolynomial MultivariatePolynomial::operator*(const MultivariatePolynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch in multiplication");
    MultivariatePolynomial out(arity_);
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : o.terms_) {
            Exponents sum(a);
            for (size_t i = 0; i < sum.size(); ++i) sum[i] += b[i];
            out.add_term(std::move(sum), ca * cb);
        }
    }
    return out;
}

std::string MultivariatePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [alpha, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << to_string(c);
        for (int v = 0; v < arity_; ++v) {
            int e = alpha[static_cast<size_t>(v)];
            if (e == 0) continue;
            out << "*n" << (v + 1);
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace mehr
