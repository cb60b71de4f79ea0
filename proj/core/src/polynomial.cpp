#include "mehr/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace mehr {

namespace {
const Rat kZero = 0;
}

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(Rat c) {
    Polynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

Polynomial Polynomial::monomial(int degree, Rat c) {
    if (degree < 0) throw std::invalid_argument("monomial of negative degree");
    Polynomial p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(degree) + 1, Rat(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

Polynomial Polynomial::variable() { return monomial(1, 1); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& Polynomial::coeff(int i) const {
    if (i < 0 || std::cmp_greater_equal(i, coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

Rat Polynomial::leading_coefficient() const {
    if (is_zero()) return 0;
    return coeffs_.back();
}

Rat Polynomial::operator()(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    out += o;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    out -= o;
    return out;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rat& c) const {
    if (c == 0) return {};
    Polynomial out = *this;
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

Polynomial Polynomial::operator/(const Rat& c) const {
    if (c == 0) throw std::invalid_argument("polynomial division by zero scalar");
    Polynomial out = *this;
    for (auto& x : out.coeffs_) x /= c;
    return out;
}

Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::scale_variable(const Rat& c) const {
    Polynomial out = *this;
    Rat power = 1;
    for (size_t i = 1; i < out.coeffs_.size(); ++i) {
        power *= c;
        out.coeffs_[i] *= power;
    }
    out.trim();
    return out;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return Polynomial(std::move(out));
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeff(i);
        if (c == 0) continue;
        Rat abs_c = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit = abs_c == 1 && i != 0;
        if (!unit) out << to_string(abs_c);
        if (i > 0) {
            if (!unit) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

Polynomial polynomial_remainder(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial remainder by zero");
    std::vector<Rat> rem(num.coefficients().begin(), num.coefficients().end());
    const int dd = den.degree();
    const Rat lead = den.leading_coefficient();
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        if (rem[static_cast<size_t>(i)] == 0) continue;
        Rat factor = rem[static_cast<size_t>(i)] / lead;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(i - dd + j)] -= factor * den.coeff(j);
    }
    if (dd > 0) rem.resize(static_cast<size_t>(dd));
    else rem.clear();
    return Polynomial(std::move(rem));
}

Polynomial polynomial_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = polynomial_remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a / a.leading_coefficient();
}

}  // namespace mehr
