#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flagoct/rational.hpp"

namespace flagoct {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Unique solution of a square system, or nullopt if singular.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b);

/// Basis of { v : m v = 0 } for a matrix with `columns` columns.
RationalMatrix nullspace(RationalMatrix m, std::size_t columns);

}  // namespace flagoct
