#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "tropcomm/rational.hpp"

namespace tropcomm {

/// An element of the min-plus semiring: an exact rational or +infinity.
class TropScalar {
 public:
  /// Defaults to +infinity, the neutral element of tropical addition.
  TropScalar() = default;
  TropScalar(Rational value) : infinite_(false), value_(std::move(value)) { value_.canonicalize(); }
  TropScalar(long value) : infinite_(false), value_(value) {}
  TropScalar(int value) : infinite_(false), value_(value) {}

  static TropScalar infinity() { return TropScalar(); }
  /// Accepts everything parse_rational does, plus "inf".
  static TropScalar parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Throws std::logic_error on +infinity.
  const Rational& value() const;

  /// min(a, b)
  friend TropScalar oplus(const TropScalar& a, const TropScalar& b);
  /// a + b with infinity absorbing
  friend TropScalar otimes(const TropScalar& a, const TropScalar& b);

  friend bool operator==(const TropScalar& a, const TropScalar& b);
  friend std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b);

  std::string to_fraction_string() const;
  std::string to_display_string() const;

 private:
  bool infinite_ = true;
  Rational value_ = 0;
};

class TropVector {
 public:
  TropVector() = default;
  explicit TropVector(std::vector<TropScalar> entries) : entries_(std::move(entries)) {}
  TropVector(std::initializer_list<TropScalar> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  const TropScalar& operator[](std::size_t i) const { return entries_[i]; }
  TropScalar& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<TropScalar>& entries() const { return entries_; }

  friend bool operator==(const TropVector&, const TropVector&) = default;

 private:
  std::vector<TropScalar> entries_;
};

/// Square n x n matrix over the min-plus semiring, stored row-major.
class TropMatrix {
 public:
  /// n x n matrix with every entry +infinity.
  explicit TropMatrix(std::size_t n = 0);
  TropMatrix(std::initializer_list<std::initializer_list<TropScalar>> rows);
  static TropMatrix from_rows(const std::vector<std::vector<TropScalar>>& rows);
  static TropMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  const TropScalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  TropScalar& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  bool all_finite() const;
  TropVector column(std::size_t j) const;

  friend bool operator==(const TropMatrix&, const TropMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<TropScalar> entries_;
};

/// Entrywise min.
TropMatrix trop_add(const TropMatrix& a, const TropMatrix& b);
/// (A . B)_ij = min_s A_is + B_sj
TropMatrix trop_mul(const TropMatrix& a, const TropMatrix& b);
/// m-fold tropical product, m >= 1.
TropMatrix trop_pow(const TropMatrix& a, unsigned m);
/// A . x
TropVector trop_apply(const TropMatrix& a, const TropVector& x);

/// I + A + A^2 + ... via an all-pairs shortest-path closure. Throws NegativeCycle
/// when some cycle has negative weight.
TropMatrix kleene_star(const TropMatrix& a);

/// Entrywise a <= b.
bool entrywise_leq(const TropMatrix& a, const TropMatrix& b);

/// Shifts v so that its first finite coordinate is 0. Throws AllInfinite.
TropVector normalize_tp(const TropVector& v);

}  // namespace tropcomm
