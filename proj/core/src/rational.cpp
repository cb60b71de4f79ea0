#include "mehr/rational.hpp"

#include <stdexcept>

namespace mehr {

Rat ratio(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat ratio(long num, long den) { return ratio(Int(num), Int(den)); }

bool is_integral(const Rat& q) { return q.get_den() == 1; }

Int to_integer(const Rat& q) {
    if (!is_integral(q)) throw std::invalid_argument("rational is not an integer: " + to_string(q));
    return q.get_num();
}

std::string to_string(const Rat& q) {
    if (is_integral(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& n) { return n.get_str(); }

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return ratio(Int(text), Int(1));
        return ratio(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
}

Int int_pow(const Int& base, unsigned exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rat rat_pow(const Rat& base, unsigned exp) {
    return ratio(int_pow(base.get_num(), exp), int_pow(base.get_den(), exp));
}

Int rat_floor(const Rat& q) {
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

Int rat_ceil(const Rat& q) {
    Int out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

}  // namespace mehr
