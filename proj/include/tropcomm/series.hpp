#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropcomm/matrix.hpp"
#include "tropcomm/rational.hpp"

namespace tropcomm {

/// Finite sum of c * t^e with rational c != 0 and rational e.
class SeriesPoly {
 public:
  using TermMap = std::map<Rational, Rational>;  // exponent -> coefficient

  SeriesPoly() = default;
  SeriesPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  static SeriesPoly monomial(const Rational& coefficient, const Rational& exponent);
  /// Parses "1+t", "t^4", "t^-1", "-2*t^(1/2)", "3/2*t^2 - t"; throws ParseError.
  static SeriesPoly parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Least exponent; infinity for the zero series.
  TropScalar valuation() const;
  /// Coefficient of the least exponent (0 for the zero series).
  Rational leading_coefficient() const;

  friend SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b);
  friend SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b);
  friend SeriesPoly operator-(const SeriesPoly& a);
  friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);
  friend bool operator==(const SeriesPoly&, const SeriesPoly&) = default;

 private:
  void add(const Rational& exponent, const Rational& coefficient);
  TermMap terms_;
};

/// "1 + t", "t^4", "-t^(1/2)", "0"; ascending exponents.
std::string format_series(const SeriesPoly& s);

class SeriesMatrix {
 public:
  explicit SeriesMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  static SeriesMatrix from_rows(const std::vector<std::vector<SeriesPoly>>& rows);

  std::size_t size() const { return n_; }
  const SeriesPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  SeriesPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend bool operator==(const SeriesMatrix&, const SeriesMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<SeriesPoly> entries_;
};

/// Entrywise valuation; the zero series maps to infinity.
TropMatrix val_matrix(const SeriesMatrix& x);

struct LiftReport {
  bool verified = false;
  bool commutes = false;
  bool valuations_match = false;
  /// First entry (row-major, 0-based) where XY and YX differ.
  std::optional<std::pair<std::size_t, std::size_t>> product_entry;
  std::optional<SeriesPoly> xy_value;
  std::optional<SeriesPoly> yx_value;
  /// First entry where val(X) != A, then val(Y) != B.
  std::optional<std::pair<std::size_t, std::size_t>> x_valuation_entry;
  std::optional<std::pair<std::size_t, std::size_t>> y_valuation_entry;
};

/// Classical commutation of (X, Y) plus val(X) = A and val(Y) = B.
LiftReport verify_lift(const SeriesMatrix& x, const SeriesMatrix& y, const TropMatrix& a, const TropMatrix& b);

/// Bounded deterministic search for a verified lift of a 2x2 pair with
/// in_TC2(A, B). Throws PreconditionFailed otherwise.
std::optional<std::pair<SeriesMatrix, SeriesMatrix>> lift_2x2(const TropMatrix& a, const TropMatrix& b);

}  // namespace tropcomm
