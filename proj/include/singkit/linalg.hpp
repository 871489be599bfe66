#pragma once

#include <optional>
#include <vector>

#include "singkit/field.hpp"

namespace singkit {

using Vector = std::vector<FieldElement>;
/// Row-major dense matrix.
using Matrix = std::vector<Vector>;

std::size_t rank(Matrix m);
/// Basis of the right null space {v : m v = 0}; `cols` is needed when m has no rows.
std::vector<Vector> kernel(const Matrix& m, std::size_t cols);
/// Some solution of m v = b, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols);

}  // namespace singkit
