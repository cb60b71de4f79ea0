#include "mehr/intlinalg.hpp"

#include <stdexcept>

namespace mehr {

IntMatrix to_int_matrix(const std::vector<Point>& rows) {
    IntMatrix out(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        out[i].reserve(rows[i].size());
        for (Coord c : rows[i]) out[i].emplace_back(static_cast<long>(c));
    }
    return out;
}

std::vector<Point> to_point_rows(const IntMatrix& m) {
    std::vector<Point> out(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (const Int& v : m[i]) {
            if (!v.fits_slong_p()) throw std::overflow_error("lattice coordinate overflow");
            out[i].push_back(static_cast<Coord>(v.get_si()));
        }
    }
    return out;
}

HermiteResult hermite_normal_form(IntMatrix a) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    IntMatrix u(rows, std::vector<Int>(rows, 0));
    for (size_t i = 0; i < rows; ++i) u[i][i] = 1;

    auto row_axpy = [&](size_t target, size_t source, const Int& q) {
        // row[target] -= q * row[source]
        for (size_t j = 0; j < cols; ++j) a[target][j] -= q * a[source][j];
        for (size_t j = 0; j < rows; ++j) u[target][j] -= q * u[source][j];
    };
    auto row_swap = [&](size_t i, size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto row_negate = [&](size_t i) {
        for (auto& v : a[i]) v = -v;
        for (auto& v : u[i]) v = -v;
    };

    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        // Euclidean descent: clear the column below pivot_row
        while (true) {
            size_t best = rows;
            for (size_t i = pivot_row; i < rows; ++i) {
                if (a[i][col] == 0) continue;
                if (best == rows || cmp(abs(a[i][col]), abs(a[best][col])) < 0) best = i;
            }
            if (best == rows) break;  // column already clear
            row_swap(pivot_row, best);
            bool any_left = false;
            for (size_t i = pivot_row + 1; i < rows; ++i) {
                if (a[i][col] == 0) continue;
                Int q = a[i][col] / a[pivot_row][col];  // truncated division shrinks remainders
                row_axpy(i, pivot_row, q);
                if (a[i][col] != 0) any_left = true;
            }
            if (!any_left) break;
        }
        if (a[pivot_row][col] == 0) continue;
        if (a[pivot_row][col] < 0) row_negate(pivot_row);
        // reduce the entries above the pivot into [0, pivot)
        for (size_t i = 0; i < pivot_row; ++i) {
            if (a[i][col] == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[pivot_row][col].get_mpz_t());
            if (q != 0) row_axpy(i, pivot_row, q);
        }
        ++pivot_row;
    }
    return {std::move(a), std::move(u), static_cast<int>(pivot_row)};
}

int integer_rank(IntMatrix m) { return hermite_normal_form(std::move(m)).rank; }

namespace {

IntMatrix transpose(const IntMatrix& m, size_t cols) {
    IntMatrix out(cols, std::vector<Int>(m.size(), 0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < cols; ++j) out[j][i] = m[i][j];
    return out;
}

}  // namespace

IntMatrix integer_kernel_basis(const IntMatrix& a, int columns) {
    const size_t cols = static_cast<size_t>(columns);
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("kernel: ragged matrix");
    HermiteResult hr = hermite_normal_form(transpose(a, cols));
    IntMatrix kernel;
    for (size_t i = static_cast<size_t>(hr.rank); i < cols; ++i) kernel.push_back(hr.u[i]);
    return kernel;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_integer: size mismatch");
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    if (rows == 0) return std::vector<Int>(cols, 0);

    // With U*A^T = H, solutions of A x = b are x = U^T y where H^T y = b.
    HermiteResult hr = hermite_normal_form(transpose(a, cols));
    const IntMatrix& h = hr.h;
    std::vector<Int> y(cols, 0);
    std::vector<size_t> pivot_col(static_cast<size_t>(hr.rank));
    for (size_t i = 0; i < static_cast<size_t>(hr.rank); ++i) {
        size_t p = 0;
        while (p < rows && h[i][p] == 0) ++p;
        pivot_col[i] = p;
        Int rhs = b[p];
        for (size_t i2 = 0; i2 < i; ++i2) rhs -= h[i2][p] * y[i2];
        if (rhs % h[i][p] != 0) return std::nullopt;
        y[i] = rhs / h[i][p];
    }
    // consistency over the remaining equations
    for (size_t j = 0; j < rows; ++j) {
        Int acc = 0;
        for (size_t i = 0; i < static_cast<size_t>(hr.rank); ++i) acc += h[i][j] * y[i];
        if (acc != b[j]) return std::nullopt;
    }
    std::vector<Int> x(cols, 0);
    for (size_t i = 0; i < static_cast<size_t>(hr.rank); ++i)
        for (size_t j = 0; j < cols; ++j) x[j] += hr.u[i][j] * y[i];
    return x;
}

std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a, const std::vector<Int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_rational: size mismatch");
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) m[i][j] = Rat(a[i][j]);
        m[i][cols] = Rat(b[i]);
    }
    size_t row = 0;
    std::vector<size_t> pivot_of_col(cols, rows);
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) throw std::logic_error("solve_rational: dependent columns");
        std::swap(m[p], m[row]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col] / m[row][col];
            for (size_t j = col; j <= cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    if (row < cols) throw std::logic_error("solve_rational: dependent columns");
    for (size_t i = row; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt;
    std::vector<Rat> x(cols);
    for (size_t col = 0; col < cols; ++col) {
        size_t p = pivot_of_col[col];
        x[col] = m[p][cols] / m[p][col];
    }
    return x;
}

}  // namespace mehr
