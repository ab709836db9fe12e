#include "tropcomm/commuting.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tropcomm/errors.hpp"
#include "tropcomm/linalg.hpp"
#include "tropcomm/polytrope.hpp"

namespace tropcomm {

namespace {

// (XY - YX)_kl = sum_s x_ks y_sl - y_ks x_sl
SparsePoly commutator_entry(const VariableLayout& layout, std::size_t k, std::size_t l) {
  SparsePoly p;
  for (std::size_t s = 0; s < layout.n(); ++s) {
    p.add_term(Monomial::variable(layout.x(k, s)) * Monomial::variable(layout.y(s, l)), 1);
    p.add_term(Monomial::variable(layout.y(k, s)) * Monomial::variable(layout.x(s, l)), -1);
  }
  return p;
}

Monomial y_var(const VariableLayout& layout, std::size_t i, std::size_t j) {
  return Monomial::variable(layout.y(i, j));
}

void require_finite(const TropMatrix& a, const TropMatrix& b) {
  if (a.size() != b.size()) throw SizeMismatch("matrix sizes differ");
  if (!a.all_finite() || !b.all_finite()) {
    throw UnsupportedSize("membership tests need finite matrix entries");
  }
}

}  // namespace

std::vector<Generator> generators(std::size_t n) {
  if (n < 2) throw UnsupportedSize("generators need n >= 2");
  const auto layout = VariableLayout::full(n);
  std::vector<Generator> out;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      SparsePoly p = commutator_entry(layout, k, l);
      if (!p.is_zero()) out.push_back({k, l, std::move(p)});
    }
  return out;
}

std::vector<Generator> distinct_generators(const VariableLayout& layout) {
  std::vector<Generator> out;
  for (std::size_t k = 0; k < layout.n(); ++k)
    for (std::size_t l = 0; l < layout.n(); ++l) {
      SparsePoly p = commutator_entry(layout, k, l);
      if (p.is_zero()) continue;
      const SparsePoly neg = -p;
      bool duplicate = std::any_of(out.begin(), out.end(),
                                   [&](const Generator& g) { return g.poly == p || g.poly == neg; });
      if (!duplicate) out.push_back({k, l, std::move(p)});
    }
  return out;
}

std::vector<Generator> symmetric_generators() { return distinct_generators(VariableLayout::symmetric(3)); }

TropEvaluation trop_evaluate(const SparsePoly& f, std::span<const Rational> w) {
  if (f.is_zero()) throw EmptyPolynomial("tropical evaluation of the zero polynomial");
  TropEvaluation ev;
  ev.terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) ev.terms.push_back({m, c, m.weight(w)});
  ev.min_value = ev.terms.front().value;
  for (const auto& t : ev.terms) {
    if (t.value < ev.min_value) ev.min_value = t.value;
  }
  for (std::size_t i = 0; i < ev.terms.size(); ++i) {
    if (ev.terms[i].value == ev.min_value) ev.argmin.push_back(i);
  }
  return ev;
}

bool trop_satisfied(const SparsePoly& f, std::span<const Rational> w) { return trop_evaluate(f, w).satisfied(); }

bool in_TS(const TropMatrix& a, const TropMatrix& b) { return commutes(a, b); }

PrevarietyReport in_Tpre(const TropMatrix& a, const TropMatrix& b) {
  require_finite(a, b);
  const auto w = VariableLayout::full(a.size()).weights(a, b);
  PrevarietyReport report;
  for (const auto& g : generators(a.size())) {
    if (!trop_satisfied(g.poly, w)) report.failures.emplace_back(g.row, g.col);
  }
  report.member = report.failures.empty();
  return report;
}

bool in_TC2(const TropMatrix& a, const TropMatrix& b) {
  if (a.size() != 2 || b.size() != 2) throw UnsupportedSize("in_TC2 is defined for 2x2 pairs only");
  require_finite(a, b);
  return in_TS(a, b) && a(0, 1).value() + b(1, 0).value() == a(1, 0).value() + b(0, 1).value();
}

std::optional<HomogeneityParameters> homogeneity_membership(std::span<const Rational> w, std::size_t n) {
  if (n < 2) throw UnsupportedSize("homogeneity needs n >= 2");
  const auto layout = VariableLayout::full(n);
  if (w.size() != layout.dimension()) throw SizeMismatch("weight vector has the wrong length");
  auto wx = [&](std::size_t i, std::size_t j) -> const Rational& { return w[layout.x(i, j)]; };
  auto wy = [&](std::size_t i, std::size_t j) -> const Rational& { return w[layout.y(i, j)]; };

  HomogeneityParameters p;
  p.a = wx(0, 0);
  p.b = wy(0, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && (wx(i, i) != p.a || wy(i, i) != p.b)) return std::nullopt;
      if (wy(i, j) != wx(i, j) - p.a + p.b) return std::nullopt;
    }
  if (n == 2) {
    p.x12 = wx(0, 1);
    p.x21 = wx(1, 0);
    return p;
  }
  p.c.resize(n);
  p.c[0] = 0;
  for (std::size_t j = 1; j < n; ++j) p.c[j] = p.a - wx(0, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (wx(i, j) != p.c[i] - p.c[j] + p.a) return std::nullopt;
  return p;
}

std::size_t homogeneity_dimension(std::size_t n) {
  const auto layout = VariableLayout::full(n);
  const std::size_t dim = layout.dimension();
  RationalMatrix rows;
  for (const auto& g : generators(n)) {
    const auto& terms = g.poly.terms();
    const auto first = terms.begin()->first.exponent_vector(dim);
    for (auto it = std::next(terms.begin()); it != terms.end(); ++it) {
      const auto e = it->first.exponent_vector(dim);
      RationalVector row(dim);
      for (std::size_t d = 0; d < dim; ++d) row[d] = e[d] - first[d];
      rows.push_back(std::move(row));
    }
  }
  return dim - rank(std::move(rows), dim);
}

std::vector<GroupElement> symmetry_group(std::size_t n) {
  std::vector<GroupElement> out;
  for (bool swap : {false, true}) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      out.push_back({perm, swap});
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::vector<VarId> variable_mapping(const GroupElement& g, const VariableLayout& layout) {
  if (g.perm.size() != layout.n()) throw SizeMismatch("group element and layout sizes differ");
  std::vector<VarId> map(layout.dimension());
  for (VarId v = 0; v < layout.dimension(); ++v) {
    const auto c = layout.coordinates(v);
    const bool is_y = c.is_y != g.swap;
    const std::size_t i = g.perm[c.row];
    const std::size_t j = g.perm[c.col];
    map[v] = is_y ? layout.y(i, j) : layout.x(i, j);
  }
  return map;
}

SparsePoly act(const GroupElement& g, const SparsePoly& p, const VariableLayout& layout) {
  return p.substitute(variable_mapping(g, layout));
}

std::pair<TropMatrix, TropMatrix> act(const GroupElement& g, const TropMatrix& a, const TropMatrix& b) {
  if (g.perm.size() != a.size() || a.size() != b.size()) throw SizeMismatch("group element and matrix sizes differ");
  TropMatrix pa(a.size());
  TropMatrix pb(b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      pa(g.perm[i], g.perm[j]) = a(i, j);
      pb(g.perm[i], g.perm[j]) = b(i, j);
    }
  if (g.swap) return {pb, pa};
  return {pa, pb};
}

namespace {

IdealElement transform(const GroupElement& g, const IdealElement& e, const VariableLayout& layout) {
  IdealElement out{act(g, e.poly, layout), {}};
  for (const auto& c : e.cofactors) {
    SparsePoly m = act(g, c.multiplier, layout);
    // swapping X and Y negates every commutator entry
    out.cofactors.push_back({g.perm[c.row], g.perm[c.col], g.swap ? -m : m});
  }
  return out;
}

}  // namespace

IdealElement witness_deg4(const GroupElement& g) {
  const auto layout = VariableLayout::full(3);
  const PolyMatrix x = PolyMatrix::variables(layout, false);
  const PolyMatrix y = PolyMatrix::variables(layout, true);
  const PolyMatrix c = x * y - y * x;
  const Monomial m31 = y_var(layout, 1, 0) * y_var(layout, 2, 1);  // y32 y21
  const Monomial m32 = y_var(layout, 1, 0) * y_var(layout, 2, 0);  // y31 y21
  const Monomial m21 = y_var(layout, 2, 0) * y_var(layout, 2, 1);  // y31 y32
  IdealElement base;
  base.poly = c(2, 0) * m31 - c(2, 1) * m32 - c(1, 0) * m21;
  base.cofactors = {{2, 0, SparsePoly::term(1, m31)}, {2, 1, SparsePoly::term(-1, m32)}, {1, 0, SparsePoly::term(-1, m21)}};
  return transform(g, base, layout);
}

IdealElement witness_deg3(const GroupElement& g) {
  const auto layout = VariableLayout::full(3);
  const PolyMatrix x = PolyMatrix::variables(layout, false);
  const PolyMatrix y = PolyMatrix::variables(layout, true);
  const PolyMatrix c = x * y - y * x;
  const Monomial y21 = y_var(layout, 1, 0);
  const Monomial y12 = y_var(layout, 0, 1);
  IdealElement base;
  base.poly = c(0, 1) * y21 - c(1, 0) * y12;
  base.cofactors = {{0, 1, SparsePoly::term(1, y21)}, {1, 0, SparsePoly::term(-1, y12)}};
  return transform(g, base, layout);
}

SparsePoly expand_combination(const std::vector<Cofactor>& cofactors, std::size_t n) {
  std::map<std::pair<std::size_t, std::size_t>, const SparsePoly*> by_entry;
  const auto gens = generators(n);
  for (const auto& g : gens) by_entry[{g.row, g.col}] = &g.poly;
  SparsePoly total;
  for (const auto& c : cofactors) {
    auto it = by_entry.find({c.row, c.col});
    if (it == by_entry.end()) continue;  // vanishing entry
    total = total + c.multiplier * *it->second;
  }
  return total;
}

std::vector<IdealElement> witness_orbit(IdealElement (*witness)(const GroupElement&)) {
  std::vector<IdealElement> out;
  for (const auto& g : symmetry_group(3)) {
    IdealElement e = witness(g);
    const SparsePoly neg = -e.poly;
    bool seen = std::any_of(out.begin(), out.end(),
                            [&](const IdealElement& o) { return o.poly == e.poly || o.poly == neg; });
    if (!seen) out.push_back(std::move(e));
  }
  return out;
}

namespace {

std::optional<NonMembershipCertificate> unique_minimum(const IdealElement& e, std::span<const Rational> w,
                                                        const std::string& family) {
  const TropEvaluation ev = trop_evaluate(e.poly, w);
  if (ev.argmin.size() != 1) return std::nullopt;
  std::optional<Rational> runner_up;
  for (std::size_t i = 0; i < ev.terms.size(); ++i) {
    if (i == ev.argmin.front()) continue;
    if (!runner_up || ev.terms[i].value < *runner_up) runner_up = ev.terms[i].value;
  }
  if (!runner_up) return std::nullopt;  // a monomial, not a useful certificate
  return NonMembershipCertificate{family, e, ev.terms[ev.argmin.front()].monomial, ev.min_value, *runner_up};
}

const std::vector<IdealElement>& deg3_family() {
  static const std::vector<IdealElement> family = witness_orbit(&witness_deg3);
  return family;
}

const std::vector<IdealElement>& deg4_family() {
  static const std::vector<IdealElement> family = witness_orbit(&witness_deg4);
  return family;
}

}  // namespace

std::optional<NonMembershipCertificate> certify_not_in_TC3(const TropMatrix& a, const TropMatrix& b) {
  if (a.size() != 3 || b.size() != 3) throw UnsupportedSize("certificates are implemented for 3x3 pairs");
  require_finite(a, b);
  const auto w = VariableLayout::full(3).weights(a, b);
  for (const auto& g : generators(3)) {
    IdealElement e{g.poly, {{g.row, g.col, SparsePoly::term(1, Monomial())}}};
    if (auto cert = unique_minimum(e, w, "generator")) return cert;
  }
  for (const auto& e : deg3_family()) {
    if (auto cert = unique_minimum(e, w, "deg3")) return cert;
  }
  for (const auto& e : deg4_family()) {
    if (auto cert = unique_minimum(e, w, "deg4")) return cert;
  }
  return std::nullopt;
}

namespace {

using SparseRow = std::map<std::size_t, Rational>;

struct SliceRow {
  SparseRow entries;  // column -> coefficient
  SparseRow combo;    // spanning-row id -> coefficient
};

void axpy(SparseRow& target, const Rational& factor, const SparseRow& source) {
  for (const auto& [k, v] : source) {
    Rational& t = target[k];
    t -= factor * v;
    if (t == 0) target.erase(k);
  }
}

void scale(SliceRow& r, const Rational& s) {
  for (auto& [k, v] : r.entries) v /= s;
  for (auto& [k, v] : r.combo) v /= s;
}

void eliminate(SliceRow& r, std::size_t col, const SliceRow& pivot) {
  auto it = r.entries.find(col);
  if (it == r.entries.end()) return;
  const Rational f = it->second;
  axpy(r.entries, f, pivot.entries);
  axpy(r.combo, f, pivot.combo);
}

void monomials_of_degree(std::vector<Monomial>& out, const Monomial& cur, VarId first, VarId end, unsigned left) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (VarId v = first; v < end; ++v) monomials_of_degree(out, cur * Monomial::variable(v), v, end, left - 1);
}

std::vector<Monomial> bidegree_monomials(std::size_t n, unsigned dx, unsigned dy) {
  const auto per = static_cast<VarId>(n * n);
  std::vector<Monomial> xs, ys, out;
  monomials_of_degree(xs, Monomial(), 0, per, dx);
  monomials_of_degree(ys, Monomial(), per, static_cast<VarId>(2 * per), dy);
  for (const auto& x : xs)
    for (const auto& y : ys) out.push_back(x * y);
  return out;
}

std::optional<NonMembershipCertificate> certify_slice(const std::vector<Generator>& gens, std::span<const Rational> w,
                                                      std::size_t n, unsigned dx, unsigned dy) {
  std::vector<Monomial> cols = bidegree_monomials(n, dx, dy);
  std::vector<Rational> weight(cols.size());
  std::vector<std::size_t> order(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    weight[i] = cols[i].weight(w);
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weight[a] != weight[b] ? weight[a] < weight[b] : cols[a] < cols[b];
  });
  std::map<Monomial, std::size_t> column_of;
  std::vector<Monomial> sorted(cols.size());
  std::vector<Rational> sorted_weight(cols.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted[i] = cols[order[i]];
    sorted_weight[i] = weight[order[i]];
    column_of.emplace(sorted[i], i);
  }

  const std::vector<Monomial> multipliers = bidegree_monomials(n, dx - 1, dy - 1);
  // echelon form, pivot = lightest column
  std::map<std::size_t, SliceRow> pivots;
  std::size_t id = 0;
  for (const auto& m : multipliers)
    for (const auto& g : gens) {
      SliceRow r;
      for (const auto& [t, c] : g.poly.terms()) r.entries[column_of.at(t * m)] = Rational(static_cast<long>(c));
      r.combo[id++] = 1;
      while (!r.entries.empty()) {
        const std::size_t col = r.entries.begin()->first;
        auto it = pivots.find(col);
        if (it == pivots.end()) {
          scale(r, Rational(r.entries.begin()->second));
          pivots.emplace(col, std::move(r));
          break;
        }
        eliminate(r, col, it->second);
      }
    }

  // within each weight level, reduce fully on that level's columns
  auto it = pivots.begin();
  while (it != pivots.end()) {
    const Rational level = sorted_weight[it->first];
    std::map<std::size_t, SliceRow> reduced;
    for (; it != pivots.end() && sorted_weight[it->first] == level; ++it) {
      SliceRow r = it->second;
      for (const auto& [col, p] : reduced) eliminate(r, col, p);
      auto lead = std::find_if(r.entries.begin(), r.entries.end(),
                               [&](const auto& e) { return sorted_weight[e.first] == level; });
      if (lead == r.entries.end()) continue;
      const std::size_t col = lead->first;
      scale(r, Rational(lead->second));
      for (auto& [c2, p] : reduced) eliminate(p, col, r);
      reduced.emplace(col, std::move(r));
    }
    for (const auto& [col, r] : reduced) {
      std::size_t at_level = 0;
      for (const auto& [k, v] : r.entries)
        if (sorted_weight[k] == level) ++at_level;
      if (at_level != 1) continue;

      // integer multiple of the combination
      mpz_class lcm = 1;
      for (const auto& [k, v] : r.combo) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
      IdealElement element;
      std::map<std::pair<std::size_t, std::size_t>, SparsePoly> by_entry;
      for (const auto& [k, v] : r.combo) {
        const Rational scaled = v * lcm;
        if (!scaled.get_num().fits_slong_p()) return std::nullopt;
        const Generator& g = gens[k % gens.size()];
        by_entry[{g.row, g.col}].add_term(multipliers[k / gens.size()], scaled.get_num().get_si());
      }
      for (auto& [entry, mult] : by_entry) {
        if (mult.is_zero()) continue;
        element.cofactors.push_back({entry.first, entry.second, mult});
      }
      element.poly = expand_combination(element.cofactors, n);
      const std::string family = "slice " + std::to_string(dx) + "," + std::to_string(dy);
      if (auto cert = unique_minimum(element, w, family)) return cert;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<NonMembershipCertificate> certify_by_slices(const TropMatrix& a, const TropMatrix& b,
                                                          unsigned max_degree) {
  require_finite(a, b);
  const std::size_t n = a.size();
  const auto w = VariableLayout::full(n).weights(a, b);
  const auto gens = generators(n);
  for (unsigned d = 2; d <= max_degree; ++d)
    for (unsigned dx = 1; dx < d; ++dx)
      if (auto cert = certify_slice(gens, w, n, dx, d - dx)) return cert;
  return std::nullopt;
}

std::string to_string(TCStatus s) {
  switch (s) {
    case TCStatus::Member: return "member";
    case TCStatus::NotMember: return "not-member";
    case TCStatus::CertifiedOut: return "certified-out";
    case TCStatus::Unknown: return "unknown";
  }
  return "unknown";
}

RegionLabel classify_pair(const TropMatrix& a, const TropMatrix& b) {
  if (a.size() != b.size()) throw SizeMismatch("matrix sizes differ");
  if (a.size() != 2 && a.size() != 3) throw UnsupportedSize("region labels are defined for n = 2, 3");
  require_finite(a, b);
  RegionLabel label;
  if (auto w = commutator_witness(a, b)) label.commute_failure = std::make_pair(w->row, w->col);
  label.in_ts = !label.commute_failure;
  label.tpre_report = in_Tpre(a, b);
  label.in_tpre = label.tpre_report.member;
  if (a.size() == 2) {
    label.tc = in_TC2(a, b) ? TCStatus::Member : TCStatus::NotMember;
  } else {
    label.certificate = certify_not_in_TC3(a, b);
    label.tc = label.certificate ? TCStatus::CertifiedOut : TCStatus::Unknown;
  }
  return label;
}

}  // namespace tropcomm
