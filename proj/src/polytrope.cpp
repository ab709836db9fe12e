#include "tropcomm/polytrope.hpp"

#include <algorithm>

#include "tropcomm/errors.hpp"

namespace tropcomm {

bool is_premetric(const TropMatrix& a) {
  const TropScalar zero(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      const auto& e = a(i, j);
      if (i == j ? e != zero : (e.is_infinite() || e <= zero)) return false;
    }
  return true;
}

bool is_polytrope(const TropMatrix& a) {
  if (!is_premetric(a)) return false;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a(i, j) > otimes(a(i, k), a(k, j))) return false;
  return true;
}

bool is_polytrope_by_square(const TropMatrix& a) { return is_premetric(a) && trop_mul(a, a) == a; }

std::optional<EntryWitness> first_difference(const TropMatrix& lhs, const TropMatrix& rhs) {
  if (lhs.size() != rhs.size()) throw SizeMismatch("matrix sizes differ");
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < lhs.size(); ++j)
      if (lhs(i, j) != rhs(i, j)) return EntryWitness{i, j, lhs(i, j), rhs(i, j)};
  return std::nullopt;
}

bool commutes(const TropMatrix& a, const TropMatrix& b) { return !commutator_witness(a, b); }

std::optional<EntryWitness> commutator_witness(const TropMatrix& a, const TropMatrix& b) {
  return first_difference(trop_mul(a, b), trop_mul(b, a));
}

CommutClassification classify_polytrope_pair(const TropMatrix& a, const TropMatrix& b) {
  if (a.size() != b.size()) throw SizeMismatch("matrix sizes differ");
  if (!is_polytrope(a)) throw NotPolytrope("first matrix is not a polytrope");
  if (!is_polytrope(b)) throw NotPolytrope("second matrix is not a polytrope");

  const TropMatrix sum = trop_add(a, b);
  const TropMatrix star = kleene_star(sum);
  const TropMatrix ab = trop_mul(a, b);

  CommutClassification c;
  c.commute_failure = first_difference(ab, trop_mul(b, a));
  c.star_failure = first_difference(sum, star);
  c.square_failure = first_difference(trop_mul(sum, sum), star);
  c.product_failure = first_difference(ab, sum);
  c.commutes = !c.commute_failure;
  c.star_condition = !c.star_failure;
  c.square_condition = !c.square_failure;
  c.product_condition = !c.product_failure;
  for (const auto* f : {&c.square_failure, &c.commute_failure, &c.star_failure, &c.product_failure}) {
    if (*f) {
      c.witness_entry = *f;
      break;
    }
  }
  return c;
}

PreimageDescription preimage(const TropMatrix& a, const TropVector& b) {
  if (!is_polytrope(a)) throw NotPolytrope("preimage requires a polytrope");
  if (b.size() != a.size()) throw SizeMismatch("vector length differs from matrix size");
  if (trop_apply(a, b) != b) throw NotInImage("A . b != b, so b is not in the image");

  const std::size_t n = a.size();
  PreimageDescription d{b, {}};
  for (std::size_t j = 0; j < n; ++j) {
    bool covered = true;
    for (std::size_t k = 0; k < n && covered; ++k) {
      TropScalar best;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != j) best = oplus(best, otimes(a(k, i), b[i]));
      }
      covered = best == b[k];
    }
    if (covered) d.free_directions.push_back(j);
  }
  return d;
}

std::vector<TropVector> image_vertices(const TropMatrix& a) {
  std::vector<TropVector> out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    TropVector v = normalize_tp(a.column(j));
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  }
  return out;
}

bool in_star_image(const TropMatrix& star, const TropVector& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (i == j || star(i, j).is_infinite()) continue;
      if (x[i].value() - x[j].value() > star(i, j).value()) return false;
    }
  return true;
}

}  // namespace tropcomm
