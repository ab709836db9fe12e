#pragma once

#include <cstddef>
#include <vector>

#include "tropcomm/rational.hpp"

namespace tropcomm {

using RationalVector = std::vector<Rational>;
/// Row-major list of rows; every row has the same length.
using RationalMatrix = std::vector<RationalVector>;

/// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& rows, std::size_t cols);

std::size_t rank(RationalMatrix rows, std::size_t cols);

/// Basis (as rows) of {w : row . w = 0 for every row}.
RationalMatrix nullspace_basis(RationalMatrix rows, std::size_t cols);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace tropcomm
