#pragma once

#include <cstddef>
#include <optional>

#include "tropcomm/linalg.hpp"

namespace tropcomm {

/// maximize c.x  subject to  A x <= b,  x >= 0,  with b >= 0 so that the
/// origin is a feasible starting vertex.
struct ExactLPProblem {
  RationalMatrix a;
  RationalVector b;
  RationalVector c;
};

enum class LPStatus { Optimal, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Optimal;
  Rational objective = 0;
  RationalVector x;
  std::size_t pivots = 0;
};

/// Dense tableau simplex over the rationals with Bland's rule, so degenerate
/// problems cannot cycle. Throws std::invalid_argument when some b_i < 0.
LPResult solve_lp(const ExactLPProblem& problem);

/// Looks for w with  E w = 0  and  S w < 0  (every row strictly). Solved as
/// maximize t  s.t.  S N z + t <= 0,  t <= 1  over a null-space basis N of E.
/// Returns a witness w when the strict system is feasible.
std::optional<RationalVector> find_strict_point(const RationalMatrix& equalities,
                                                const RationalMatrix& strict, std::size_t dim);

}  // namespace tropcomm
