#include "tropcomm/lp.hpp"

#include <stdexcept>

#include "tropcomm/errors.hpp"

namespace tropcomm {

LPResult solve_lp(const ExactLPProblem& problem) {
  const std::size_t m = problem.a.size();
  const std::size_t n = problem.c.size();
  if (problem.b.size() != m) throw std::invalid_argument("solve_lp: b has the wrong length");
  for (const auto& bi : problem.b) {
    if (bi < 0) throw std::invalid_argument("solve_lp: origin must be feasible (b >= 0)");
  }

  // columns 0..n-1 structural, n..n+m-1 slack; last column is the rhs
  const std::size_t width = n + m + 1;
  std::vector<RationalVector> tab(m, RationalVector(width, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    if (problem.a[i].size() != n) throw std::invalid_argument("solve_lp: row has the wrong length");
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = problem.a[i][j];
    tab[i][n + i] = 1;
    tab[i][width - 1] = problem.b[i];
  }
  // reduced costs of the maximization; objective value in the last entry
  RationalVector cost(width, Rational(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = problem.c[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  LPResult result;
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (cost[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][width - 1] / tab[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leave == m) {
      result.status = LPStatus::Unbounded;
      return result;
    }

    const Rational inv = 1 / tab[leave][enter];
    for (auto& v : tab[leave]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      const Rational f = tab[i][enter];
      for (std::size_t k = 0; k < width; ++k) {
        if (tab[leave][k] != 0) tab[i][k] -= f * tab[leave][k];
      }
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t k = 0; k < width; ++k) {
        if (tab[leave][k] != 0) cost[k] -= f * tab[leave][k];
      }
    }
    basis[leave] = enter;
    ++result.pivots;
  }

  result.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) result.x[basis[i]] = tab[i][width - 1];
  }
  result.objective = -cost[width - 1];
  return result;
}

std::optional<RationalVector> find_strict_point(const RationalMatrix& equalities,
                                                const RationalMatrix& strict, std::size_t dim) {
  const RationalMatrix basis = nullspace_basis(equalities, dim);
  const std::size_t k = basis.size();

  // S N, one row per strict inequality
  RationalMatrix projected(strict.size(), RationalVector(k, Rational(0)));
  for (std::size_t r = 0; r < strict.size(); ++r)
    for (std::size_t c = 0; c < k; ++c) projected[r][c] = dot(strict[r], basis[c]);

  // variables: z+ (k), z- (k), t
  ExactLPProblem lp;
  lp.c.assign(2 * k + 1, Rational(0));
  lp.c[2 * k] = 1;
  for (const auto& row : projected) {
    RationalVector a(2 * k + 1, Rational(0));
    for (std::size_t c = 0; c < k; ++c) {
      a[c] = row[c];
      a[k + c] = -row[c];
    }
    a[2 * k] = 1;
    lp.a.push_back(std::move(a));
    lp.b.emplace_back(0);
  }
  RationalVector cap(2 * k + 1, Rational(0));
  cap[2 * k] = 1;
  lp.a.push_back(std::move(cap));
  lp.b.emplace_back(1);

  const LPResult res = solve_lp(lp);
  if (res.status == LPStatus::Unbounded) {
    throw UnboundedNormalizationViolated("strict-feasibility LP reported unbounded despite t <= 1");
  }
  if (res.objective <= 0) return std::nullopt;

  RationalVector w(dim, Rational(0));
  for (std::size_t c = 0; c < k; ++c) {
    const Rational zc = res.x[c] - res.x[k + c];
    if (zc == 0) continue;
    for (std::size_t d = 0; d < dim; ++d) w[d] += zc * basis[c][d];
  }
  return w;
}

}  // namespace tropcomm
