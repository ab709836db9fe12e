#include "tropcomm/fan.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "tropcomm/errors.hpp"
#include "tropcomm/lp.hpp"

namespace tropcomm {

namespace {

using Exponents = std::vector<RationalVector>;

std::vector<Exponents> exponent_table(const std::vector<SparsePoly>& gens, std::size_t dim) {
  std::vector<Exponents> table;
  table.reserve(gens.size());
  for (const auto& g : gens) {
    Exponents rows;
    for (const auto& [m, c] : g.terms()) {
      const auto e = m.exponent_vector(dim);
      rows.emplace_back(e.begin(), e.end());
    }
    table.push_back(std::move(rows));
  }
  return table;
}

RationalVector difference(const RationalVector& a, const RationalVector& b) {
  RationalVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// Subsets of {0..k-1} with at least two elements, sizes ascending, each size
// in lexicographic order.
std::vector<std::vector<std::size_t>> tie_subsets(std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t size = 2; size <= k; ++size) {
    std::vector<bool> mask(k, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask[i]) s.push_back(i);
      out.push_back(std::move(s));
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return out;
}

void append_rows(const Exponents& terms, const std::vector<std::size_t>& subset, RationalMatrix& eq,
                 RationalMatrix& strict) {
  const RationalVector& u = terms[subset.front()];
  std::size_t next = 0;
  for (std::size_t v = 0; v < terms.size(); ++v) {
    if (next < subset.size() && subset[next] == v) {
      if (v != subset.front()) eq.push_back(difference(u, terms[v]));
      ++next;
    } else {
      strict.push_back(difference(u, terms[v]));
    }
  }
}

struct Search {
  const std::vector<Exponents>& table;
  const std::vector<std::vector<std::vector<std::size_t>>>& choices;
  std::size_t dim;
  std::vector<Cell> found;

  void descend(std::size_t level, ArgminPattern& pattern, RationalMatrix& eq, RationalMatrix& strict) {
    if (level == table.size()) {
      auto w = find_strict_point(eq, strict, dim);
      if (!w) return;
      Cell c{pattern, eq, strict, dim - rank(eq, dim), std::move(*w)};
      found.push_back(std::move(c));
      return;
    }
    for (const auto& subset : choices[level]) {
      const std::size_t eq_size = eq.size();
      const std::size_t strict_size = strict.size();
      append_rows(table[level], subset, eq, strict);
      // an infeasible prefix stays infeasible once more rows are added
      const bool last = level + 1 == table.size();
      if (last || find_strict_point(eq, strict, dim)) {
        pattern.subsets.push_back(subset);
        descend(level + 1, pattern, eq, strict);
        pattern.subsets.pop_back();
      }
      eq.resize(eq_size);
      strict.resize(strict_size);
    }
  }
};

}  // namespace

LinealitySpace lineality_space(const std::vector<SparsePoly>& gens, std::size_t dim) {
  RationalMatrix eq;
  for (const auto& terms : exponent_table(gens, dim))
    for (std::size_t v = 1; v < terms.size(); ++v) eq.push_back(difference(terms.front(), terms[v]));
  LinealitySpace space;
  space.basis = nullspace_basis(eq, dim);
  space.dim = space.basis.size();
  return space;
}

Cell cell_system(const std::vector<SparsePoly>& gens, std::size_t dim, const ArgminPattern& pattern) {
  if (pattern.subsets.size() != gens.size()) throw SizeMismatch("pattern does not match the generator list");
  const auto table = exponent_table(gens, dim);
  Cell cell;
  cell.pattern = pattern;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& s = pattern.subsets[g];
    if (s.size() < 2 || !std::is_sorted(s.begin(), s.end()) || s.back() >= table[g].size() ||
        std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw PreconditionFailed("malformed argmin subset");
    }
    append_rows(table[g], s, cell.equalities, cell.inequalities);
  }
  cell.dim = dim - rank(cell.equalities, dim);
  return cell;
}

std::optional<RationalVector> relative_interior_feasible(const Cell& cell, std::size_t dim) {
  return find_strict_point(cell.equalities, cell.inequalities, dim);
}

std::optional<ArgminPattern> pattern_at(const std::vector<SparsePoly>& gens, std::span<const Rational> w) {
  ArgminPattern p;
  for (const auto& g : gens) {
    const TropEvaluation ev = trop_evaluate(g, w);
    if (!ev.satisfied()) return std::nullopt;
    p.subsets.push_back(ev.argmin);
  }
  return p;
}

std::uint64_t candidate_count(const std::vector<SparsePoly>& gens) {
  constexpr std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (const auto& g : gens) {
    const std::size_t k = g.size();
    if (k >= 64) return max;
    const std::uint64_t options = (std::uint64_t{1} << k) - k - 1;
    if (options != 0 && total > max / options) return max;
    total *= options;
  }
  return total;
}

std::vector<Cell> enumerate_cells(const std::vector<SparsePoly>& gens, std::size_t dim,
                                  const EnumerationOptions& options) {
  const std::uint64_t candidates = candidate_count(gens);
  if (candidates > options.budget) throw BudgetExceeded(candidates, options.budget);

  const auto table = exponent_table(gens, dim);
  std::vector<std::vector<std::vector<std::size_t>>> choices;
  for (const auto& terms : table) {
    if (terms.size() < 2) return {};  // a monomial is never tropically satisfied
    choices.push_back(tie_subsets(terms.size()));
  }
  if (gens.empty()) {
    Cell whole;
    whole.dim = dim;
    whole.witness.assign(dim, Rational(0));
    return {whole};
  }

  // split the search at the first generator
  const auto& first = choices.front();
  std::atomic<std::size_t> next{0};
  std::mutex merge;
  std::vector<Cell> cells;
  auto worker = [&] {
    Search search{table, choices, dim, {}};
    for (std::size_t i = next++; i < first.size(); i = next++) {
      ArgminPattern pattern;
      RationalMatrix eq;
      RationalMatrix strict;
      append_rows(table.front(), first[i], eq, strict);
      if (table.size() > 1 && !find_strict_point(eq, strict, dim)) continue;
      pattern.subsets.push_back(first[i]);
      search.descend(1, pattern, eq, strict);
    }
    std::lock_guard lock(merge);
    for (auto& c : search.found) cells.push_back(std::move(c));
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.pattern < b.pattern; });
  return cells;
}

FVector f_vector(const std::vector<Cell>& cells, std::size_t lineality_dim) {
  FVector f;
  f.lineality_dim = lineality_dim;
  if (cells.empty()) return f;
  for (const auto& c : cells) {
    if (c.dim < lineality_dim) throw std::logic_error("cell dimension below the lineality dimension");
    const std::size_t k = c.dim - lineality_dim;
    if (f.counts.size() <= k) f.counts.resize(k + 1, 0);
    ++f.counts[k];
  }
  return f;
}

std::vector<std::vector<Monomial>> tie_terms(const std::vector<SparsePoly>& gens, const ArgminPattern& pattern) {
  std::vector<std::vector<Monomial>> out;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::vector<Monomial> monos;
    for (const auto& [m, c] : gens[g].terms()) monos.push_back(m);
    std::vector<Monomial> tied;
    for (std::size_t i : pattern.subsets.at(g)) tied.push_back(monos.at(i));
    out.push_back(std::move(tied));
  }
  return out;
}

std::vector<CellOrbit> maximal_cell_orbits(const std::vector<Cell>& cells, const std::vector<SparsePoly>& gens,
                                           const VariableLayout& layout) {
  std::vector<CellOrbit> orbits;
  if (cells.empty()) return orbits;
  std::size_t top = 0;
  for (const auto& c : cells) top = std::max(top, c.dim);

  std::map<ArgminPattern, std::size_t> index;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].dim == top) index.emplace(cells[i].pattern, i);

  std::vector<std::vector<VarId>> mappings;
  for (const auto& g : symmetry_group(layout.n())) mappings.push_back(variable_mapping(g, layout));

  std::vector<bool> assigned(cells.size(), false);
  for (const auto& [pattern, i] : index) {
    if (assigned[i]) continue;
    CellOrbit orbit;
    for (const auto& map : mappings) {
      RationalVector w(cells[i].witness.size());
      for (std::size_t v = 0; v < w.size(); ++v) w[map[v]] = cells[i].witness[v];
      auto image = pattern_at(gens, w);
      if (!image) throw std::logic_error("group image of a cell left the prevariety");
      auto it = index.find(*image);
      if (it == index.end()) throw std::logic_error("group image of a top cell is not a top cell");
      if (!assigned[it->second]) {
        assigned[it->second] = true;
        orbit.members.push_back(it->second);
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.tie_terms = tie_terms(gens, cells[orbit.members.front()].pattern);
    orbits.push_back(std::move(orbit));
  }
  std::stable_sort(orbits.begin(), orbits.end(),
                   [](const CellOrbit& a, const CellOrbit& b) { return a.members.size() < b.members.size(); });
  return orbits;
}

const std::vector<ReferenceFVector>& reference_f_vectors() {
  static const std::vector<ReferenceFVector> data = {
      {"variety:n=3", 4, {1, 1658, 23755, 143852, 481835, 972387, 1186489, 808218, 235038},
       "tropical commuting variety of 3x3 matrices; needs a Groebner fan traversal"},
      {"commuting:n=3", 4, {1, 146, 2290, 16322, 66193, 162886, 241476, 199030, 71766, 2397, 58},
       "prevariety of the nine 3x3 commutator entries; over the default pattern budget"},
  };
  return data;
}

}  // namespace tropcomm
