#include "mehr/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace mehr {

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Int binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial with negative upper index");
    if (k < 0 || k > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Int multinomial(int n, std::span<const int> parts) {
    Int out = 1;
    int remaining = n;
    for (int p : parts) {
        if (p < 0 || p > remaining) return 0;
        out *= binomial(remaining, p);
        remaining -= p;
    }
    if (remaining != 0) throw std::invalid_argument("multinomial parts do not sum to n");
    return out;
}

Int stirling2(int i, int k) {
    if (i < 0 || k < 0) throw std::invalid_argument("stirling2 with negative argument");
    if (k == 0) return i == 0 ? 1 : 0;
    if (i < k) return 0;
    // row-by-row recurrence, keeping only the previous row
    std::vector<Int> prev(static_cast<size_t>(k) + 1, 0), cur(static_cast<size_t>(k) + 1, 0);
    prev[0] = 1;
    for (int row = 1; row <= i; ++row) {
        cur[0] = 0;
        for (int col = 1; col <= k && col <= row; ++col)
            cur[col] = col * prev[col] + prev[col - 1];
        std::swap(prev, cur);
    }
    return prev[static_cast<size_t>(k)];
}

Rat finite_difference(std::span<const Rat> values, int k) {
    if (k < 0) throw std::invalid_argument("finite difference of negative order");
    if (std::cmp_less(values.size(), k + 1))
        throw std::invalid_argument("finite difference needs k+1 values");
    Rat acc = 0;
    for (int j = 0; j <= k; ++j) {
        Rat term = Rat(binomial(k, j)) * values[static_cast<size_t>(j)];
        if ((k - j) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace mehr
