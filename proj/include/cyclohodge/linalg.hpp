#pragma once

#include <optional>
#include <vector>

#include "cyclohodge/rational.hpp"

namespace cyclohodge::linalg {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

/// Basis of {x : A x = 0}, one vector per free column, in column order.
RationalMatrix nullspace(RationalMatrix a, std::size_t columns);

/// Unique solution of the square system A x = b, or nullopt if A is singular.
std::optional<std::vector<Rational>> solve(RationalMatrix a, const std::vector<Rational>& b);

Rational determinant(RationalMatrix a);

}  // namespace cyclohodge::linalg
