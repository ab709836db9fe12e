#pragma once

#include <random>
#include <vector>

#include "tropcomm/matrix.hpp"

namespace tropcomm::testing {

inline Rational hundredths(int k) {
  Rational q(k, 100);
  q.canonicalize();
  return q;
}

/// Zero diagonal, off-diagonal entries k/100 with 1 <= k <= 1000.
inline TropMatrix random_premetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(1, 1000);
  TropMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? TropScalar(0) : TropScalar(hundredths(k(rng)));
  return m;
}

inline TropMatrix random_polytrope(std::size_t n, std::mt19937_64& rng) {
  return kleene_star(random_premetric(n, rng));
}

/// Two polytropes whose tropical sum is a given polytrope c: every off-diagonal
/// entry of c is kept by A or by B and raised in the other before closing.
inline std::pair<TropMatrix, TropMatrix> polytropes_with_closed_sum(const TropMatrix& c, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> bump(1, 500);
  TropMatrix a = c;
  TropMatrix b = c;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i == j) continue;
      TropMatrix& raised = coin(rng) ? a : b;
      raised(i, j) = TropScalar(Rational(c(i, j).value() + hundredths(bump(rng))));
    }
  return {kleene_star(a), kleene_star(b)};
}

inline TropVector random_vector(std::size_t n, std::mt19937_64& rng, int lo = -1000, int hi = 1000) {
  std::uniform_int_distribution<int> k(lo, hi);
  std::vector<TropScalar> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(hundredths(k(rng)));
  return TropVector(std::move(v));
}

inline TropMatrix random_integer_matrix(std::size_t n, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> k(lo, hi);
  TropMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = TropScalar(k(rng));
  return m;
}

/// I + A + A^2 + ... + A^n by repeated products; the reference for kleene_star.
inline TropMatrix power_sum_star(const TropMatrix& a) {
  TropMatrix sum = TropMatrix::identity(a.size());
  TropMatrix power = a;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    sum = trop_add(sum, power);
    power = trop_mul(power, a);
  }
  return sum;
}

}  // namespace tropcomm::testing
