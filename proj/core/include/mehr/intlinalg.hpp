#pragma once

#include <optional>
#include <vector>

#include "mehr/point.hpp"
#include "mehr/rational.hpp"

namespace mehr {

/// Dense integer matrices for the small exact solves behind affine hulls,
/// sublattice bases and facet-normal lifting. Row-major.
using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix to_int_matrix(const std::vector<Point>& rows);

int integer_rank(IntMatrix m);

/// Row-style Hermite form: returns H (row echelon over Z, pivots positive)
/// together with a unimodular U such that U*A = H.
struct HermiteResult {
    IntMatrix h;
    IntMatrix u;
    int rank = 0;
};
HermiteResult hermite_normal_form(IntMatrix a);

/// Basis (as rows) of the saturated lattice {x in Z^d : A x = 0}.
IntMatrix integer_kernel_basis(const IntMatrix& a, int columns);

/// Some integer solution of A x = b, or nullopt if none exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

/// Unique rational solution of A x = b for A with full column rank;
/// nullopt if the system is inconsistent. Throws if columns are dependent.
std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a, const std::vector<Int>& b);

std::vector<Point> to_point_rows(const IntMatrix& m);

}  // namespace mehr
