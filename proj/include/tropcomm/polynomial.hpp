#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropcomm/matrix.hpp"
#include "tropcomm/rational.hpp"

namespace tropcomm {

using VarId = std::uint16_t;

/// Product of variables with positive exponents, kept sorted by variable id.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(VarId v, unsigned exponent = 1);
  /// From (variable, exponent) pairs in any order; zero exponents are dropped.
  static Monomial from_factors(std::vector<std::pair<VarId, unsigned>> factors);

  const std::vector<std::pair<VarId, unsigned>>& factors() const { return factors_; }
  unsigned degree() const;
  unsigned exponent(VarId v) const;
  bool is_one() const { return factors_.empty(); }

  /// Dense exponent vector of length dim.
  std::vector<int> exponent_vector(std::size_t dim) const;
  /// Renames variable v to mapping[v].
  Monomial substitute(std::span<const VarId> mapping) const;
  /// <exponent, w>
  Rational weight(std::span<const Rational> w) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<VarId, unsigned>> factors_;
};

/// Integer-coefficient polynomial in canonical form: like terms combined and
/// zero coefficients removed, so equality is structural.
class SparsePoly {
 public:
  using Coefficient = long long;
  using TermMap = std::map<Monomial, Coefficient>;

  SparsePoly() = default;
  static SparsePoly term(Coefficient c, Monomial m);

  void add_term(const Monomial& m, Coefficient c);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(const Monomial& m) const;
  SparsePoly substitute(std::span<const VarId> mapping) const;

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const Monomial& m);
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  TermMap terms_;
};

/// Names the variables x_ij, y_ij of a pair of n x n matrices. The full layout
/// has 2n^2 variables ordered x_11..x_nn then y_11..y_nn (row-major). The
/// symmetric layout keeps only i <= j, same ordering, and maps x_ji to x_ij.
class VariableLayout {
 public:
  static VariableLayout full(std::size_t n);
  static VariableLayout symmetric(std::size_t n);

  std::size_t n() const { return n_; }
  bool is_symmetric() const { return symmetric_; }
  std::size_t dimension() const { return 2 * per_matrix_; }

  /// 0-based indices.
  VarId x(std::size_t i, std::size_t j) const;
  VarId y(std::size_t i, std::size_t j) const;
  /// "x12", "y31" (1-based); "x10_2" style once n >= 10.
  std::string name(VarId v) const;
  std::optional<VarId> parse_name(std::string_view name) const;
  /// is_y, row, col (0-based) of a variable.
  struct Coordinates {
    bool is_y;
    std::size_t row;
    std::size_t col;
  };
  Coordinates coordinates(VarId v) const;

  /// Weight vector of (A, B): w[x_ij] = A_ij, w[y_ij] = B_ij. Entries must be finite.
  std::vector<Rational> weights(const TropMatrix& a, const TropMatrix& b) const;

  friend bool operator==(const VariableLayout&, const VariableLayout&) = default;

 private:
  VariableLayout(std::size_t n, bool symmetric);
  std::size_t slot(std::size_t i, std::size_t j) const;

  std::size_t n_;
  bool symmetric_;
  std::size_t per_matrix_;
};

std::string format_monomial(const Monomial& m, const VariableLayout& layout);
/// Parses "x31*y12*y31^2"; throws ParseError.
Monomial parse_monomial(std::string_view text, const VariableLayout& layout);
/// "x12*y21 - x21*y12" in canonical term order.
std::string format_poly(const SparsePoly& p, const VariableLayout& layout);

/// Symbolic n x n matrix of polynomials with ordinary (+, *) product.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  /// X (is_y = false) or Y (is_y = true) with variable entries.
  static PolyMatrix variables(const VariableLayout& layout, bool is_y);

  std::size_t size() const { return n_; }
  const SparsePoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  SparsePoly& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t n_;
  std::vector<SparsePoly> entries_;
};

}  // namespace tropcomm
