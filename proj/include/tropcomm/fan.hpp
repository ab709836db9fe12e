#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tropcomm/commuting.hpp"
#include "tropcomm/linalg.hpp"
#include "tropcomm/polynomial.hpp"

namespace tropcomm {

/// For each generator, the sorted indices (into its canonical term order) of
/// the terms attaining the minimum. Every subset has at least two entries.
struct ArgminPattern {
  std::vector<std::vector<std::size_t>> subsets;
  friend auto operator<=>(const ArgminPattern&, const ArgminPattern&) = default;
  friend bool operator==(const ArgminPattern&, const ArgminPattern&) = default;
};

/// Relatively open cell: equalities E w = 0 and strict rows S w < 0.
struct Cell {
  ArgminPattern pattern;
  RationalMatrix equalities;
  RationalMatrix inequalities;
  std::size_t dim = 0;
  RationalVector witness;  // filled once feasibility is established
};

struct LinealitySpace {
  RationalMatrix basis;
  std::size_t dim = 0;
};

/// Null space of all pairwise term ties of every generator.
LinealitySpace lineality_space(const std::vector<SparsePoly>& gens, std::size_t dim);

/// Builds the linear system of a pattern (dim and witness left empty).
Cell cell_system(const std::vector<SparsePoly>& gens, std::size_t dim, const ArgminPattern& pattern);

/// Exact LP check; returns an interior witness point when the cell is nonempty.
std::optional<RationalVector> relative_interior_feasible(const Cell& cell, std::size_t dim);

/// Argmin pattern of w, or nullopt when some generator has a unique minimum.
std::optional<ArgminPattern> pattern_at(const std::vector<SparsePoly>& gens, std::span<const Rational> w);

/// Product over generators of 2^terms - terms - 1, saturating at UINT64_MAX.
std::uint64_t candidate_count(const std::vector<SparsePoly>& gens);

struct EnumerationOptions {
  std::uint64_t budget = 1000000;
  unsigned threads = 1;
};

/// Every feasible argmin pattern, sorted by pattern. Throws BudgetExceeded
/// when candidate_count exceeds the budget.
std::vector<Cell> enumerate_cells(const std::vector<SparsePoly>& gens, std::size_t dim,
                                  const EnumerationOptions& options = {});

struct FVector {
  std::size_t lineality_dim = 0;
  std::vector<std::size_t> counts;  // counts[k] = cells of dimension lineality_dim + k
};

/// Throws std::logic_error for a cell below the lineality dimension.
FVector f_vector(const std::vector<Cell>& cells, std::size_t lineality_dim);

struct CellOrbit {
  std::vector<std::size_t> members;              // indices into the cell list, ascending
  std::vector<std::vector<Monomial>> tie_terms;  // per generator, for members.front()
};

/// Orbits of the top-dimensional cells under symmetry_group(layout.n()),
/// acting on witness points through variable_mapping.
std::vector<CellOrbit> maximal_cell_orbits(const std::vector<Cell>& cells, const std::vector<SparsePoly>& gens,
                                           const VariableLayout& layout);

/// Tied monomials of each generator in a pattern.
std::vector<std::vector<Monomial>> tie_terms(const std::vector<SparsePoly>& gens, const ArgminPattern& pattern);

/// Reference data that is deliberately not recomputed (beyond desktop scale).
struct ReferenceFVector {
  const char* name;
  std::size_t lineality_dim;
  std::vector<std::uint64_t> counts;  // empty when only partially known
  const char* note;
};
const std::vector<ReferenceFVector>& reference_f_vectors();

}  // namespace tropcomm
