#include "tropcomm/matrix.hpp"

#include <stdexcept>

#include "tropcomm/errors.hpp"

namespace tropcomm {

TropScalar TropScalar::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  if (s == "inf" || s == "+inf" || s == "infinity" || s == "\xE2\x88\x9E") return infinity();
  return TropScalar(parse_rational(s));
}

const Rational& TropScalar::value() const {
  if (infinite_) throw std::logic_error("value() of tropical infinity");
  return value_;
}

TropScalar oplus(const TropScalar& a, const TropScalar& b) { return a <= b ? a : b; }

TropScalar otimes(const TropScalar& a, const TropScalar& b) {
  if (a.infinite_ || b.infinite_) return TropScalar::infinity();
  return TropScalar(Rational(a.value_ + b.value_));
}

bool operator==(const TropScalar& a, const TropScalar& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  return cmp(a.value_, b.value_) <=> 0;
}

std::string TropScalar::to_fraction_string() const {
  return infinite_ ? "inf" : tropcomm::to_fraction_string(value_);
}

std::string TropScalar::to_display_string() const {
  return infinite_ ? "inf" : tropcomm::to_display_string(value_);
}

TropMatrix::TropMatrix(std::size_t n) : n_(n), entries_(n * n) {}

TropMatrix::TropMatrix(std::initializer_list<std::initializer_list<TropScalar>> rows)
    : n_(rows.size()) {
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw SizeMismatch("matrix rows must have length " + std::to_string(n_));
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

TropMatrix TropMatrix::from_rows(const std::vector<std::vector<TropScalar>>& rows) {
  TropMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw SizeMismatch("matrix rows must have length " + std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

TropMatrix TropMatrix::identity(std::size_t n) {
  TropMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = TropScalar(0);
  return m;
}

bool TropMatrix::all_finite() const {
  for (const auto& e : entries_) {
    if (e.is_infinite()) return false;
  }
  return true;
}

TropVector TropMatrix::column(std::size_t j) const {
  std::vector<TropScalar> col(n_);
  for (std::size_t i = 0; i < n_; ++i) col[i] = (*this)(i, j);
  return TropVector(std::move(col));
}

namespace {

void require_same_size(const TropMatrix& a, const TropMatrix& b) {
  if (a.size() != b.size()) {
    throw SizeMismatch("matrix sizes differ: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
  }
}

}  // namespace

TropMatrix trop_add(const TropMatrix& a, const TropMatrix& b) {
  require_same_size(a, b);
  TropMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r(i, j) = oplus(a(i, j), b(i, j));
  return r;
}

TropMatrix trop_mul(const TropMatrix& a, const TropMatrix& b) {
  require_same_size(a, b);
  const std::size_t n = a.size();
  TropMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      TropScalar best;
      for (std::size_t s = 0; s < n; ++s) best = oplus(best, otimes(a(i, s), b(s, j)));
      r(i, j) = best;
    }
  return r;
}

TropMatrix trop_pow(const TropMatrix& a, unsigned m) {
  if (m == 0) throw std::invalid_argument("trop_pow: exponent must be >= 1");
  TropMatrix r = a;
  for (unsigned k = 1; k < m; ++k) r = trop_mul(r, a);
  return r;
}

TropVector trop_apply(const TropMatrix& a, const TropVector& x) {
  if (a.size() != x.size()) throw SizeMismatch("matrix/vector sizes differ");
  std::vector<TropScalar> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    TropScalar best;
    for (std::size_t s = 0; s < a.size(); ++s) best = oplus(best, otimes(a(i, s), x[s]));
    r[i] = best;
  }
  return TropVector(std::move(r));
}

TropMatrix kleene_star(const TropMatrix& a) {
  const std::size_t n = a.size();
  TropMatrix r = trop_add(TropMatrix::identity(n), a);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (r(i, k).is_infinite()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        TropScalar via = otimes(r(i, k), r(k, j));
        if (via < r(i, j)) r(i, j) = std::move(via);
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (r(i, i) < TropScalar(0)) {
      throw NegativeCycle("negative cycle through vertex " + std::to_string(i + 1));
    }
  }
  return r;
}

bool entrywise_leq(const TropMatrix& a, const TropMatrix& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a(i, j) > b(i, j)) return false;
  return true;
}

TropVector normalize_tp(const TropVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_finite()) {
      const Rational shift = v[i].value();
      std::vector<TropScalar> out(v.size());
      for (std::size_t k = 0; k < v.size(); ++k) {
        out[k] = v[k].is_finite() ? TropScalar(Rational(v[k].value() - shift)) : TropScalar::infinity();
      }
      return TropVector(std::move(out));
    }
  }
  throw AllInfinite("cannot normalize a vector with no finite coordinate");
}

}  // namespace tropcomm
