#pragma once

#include <optional>
#include <vector>

#include "loopmod/field.hpp"

namespace loopmod {

using Matrix = std::vector<std::vector<FieldElem>>;
using Vec = std::vector<FieldElem>;

Matrix identity_matrix(size_t k);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix matadd(const Matrix& a, const Matrix& b);
Matrix matscale(const Matrix& a, const FieldElem& c);
FieldElem trace(const Matrix& a);
bool is_zero_matrix(const Matrix& a);

// Rank over Q(zeta_m)(q). Denominators are cleared row-wise, then a
// fraction-free Bareiss elimination runs over the polynomial ring so
// intermediate entries stay minors of the scaled matrix.
size_t exact_rank(const Matrix& m);

// Basis of the right nullspace of m (columns = coordinates).
std::vector<Vec> nullspace(const Matrix& m);

// Solve A x = b; empty optional if inconsistent. If the system is
// underdetermined, free variables are set to zero.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

}  // namespace loopmod
