#include "tropcomm/series.hpp"

#include <algorithm>
#include <array>

#include "tropcomm/commuting.hpp"
#include "tropcomm/errors.hpp"

namespace tropcomm {

SeriesPoly::SeriesPoly(const Rational& constant) { add(Rational(0), constant); }

SeriesPoly SeriesPoly::monomial(const Rational& coefficient, const Rational& exponent) {
  SeriesPoly s;
  s.add(exponent, coefficient);
  return s;
}

void SeriesPoly::add(const Rational& exponent, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

namespace {

Rational parse_exponent(std::string_view text, std::string_view whole) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  if (text.empty()) throw ParseError("missing exponent in '" + std::string(whole) + "'");
  return parse_rational(text);
}

SeriesPoly parse_term(std::string_view term, bool negative, std::string_view whole) {
  if (term.empty()) throw ParseError("empty term in '" + std::string(whole) + "'");
  Rational coefficient = 1;
  Rational exponent = 0;
  const auto t = term.find('t');
  if (t == std::string_view::npos) {
    coefficient = parse_rational(term);
  } else {
    std::string_view before = term.substr(0, t);
    std::string_view after = term.substr(t + 1);
    if (!before.empty()) {
      if (before.back() != '*') throw ParseError("expected '*' before t in '" + std::string(whole) + "'");
      before.remove_suffix(1);
      coefficient = parse_rational(before);
    }
    if (after.empty()) {
      exponent = 1;
    } else {
      if (after.front() != '^') throw ParseError("expected '^' after t in '" + std::string(whole) + "'");
      exponent = parse_exponent(after.substr(1), whole);
    }
  }
  if (negative) coefficient = -coefficient;
  return SeriesPoly::monomial(coefficient, exponent);
}

}  // namespace

SeriesPoly SeriesPoly::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n') s.push_back(c);
  if (s.empty()) throw ParseError("empty series");

  SeriesPoly total;
  std::size_t start = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    start = 1;
  }
  int depth = 0;
  for (std::size_t i = start; i <= s.size(); ++i) {
    const char c = i < s.size() ? s[i] : '\0';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in '" + s + "'");
    const bool split = c == '\0' || (depth == 0 && (c == '+' || c == '-') && i > start && s[i - 1] != '^');
    if (!split) continue;
    total = total + parse_term(std::string_view(s).substr(start, i - start), negative, s);
    negative = c == '-';
    start = i + 1;
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + s + "'");
  return total;
}

TropScalar SeriesPoly::valuation() const {
  if (terms_.empty()) return TropScalar::infinity();
  return TropScalar(terms_.begin()->first);
}

Rational SeriesPoly::leading_coefficient() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b) {
  SeriesPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add(e, c);
  return out;
}

SeriesPoly operator-(const SeriesPoly& a) {
  SeriesPoly out;
  for (const auto& [e, c] : a.terms_) out.add(e, -c);
  return out;
}

SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b) { return a + (-b); }

SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
  SeriesPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add(Rational(ea + eb), Rational(ca * cb));
  return out;
}

std::string format_series(const SeriesPoly& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += to_fraction_string(mag);
      continue;
    }
    if (mag != 1) out += to_fraction_string(mag) + "*";
    out += "t";
    if (e == 1) continue;
    const std::string es = to_fraction_string(e);
    out += "^";
    out += e.get_den() == 1 ? es : "(" + es + ")";
  }
  return out;
}

SeriesMatrix SeriesMatrix::from_rows(const std::vector<std::vector<SeriesPoly>>& rows) {
  SeriesMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw SizeMismatch("series matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.size() != b.size()) throw SizeMismatch("series matrix sizes differ");
  SeriesMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t s = 0; s < a.size(); ++s) out(i, j) = out(i, j) + a(i, s) * b(s, j);
  return out;
}

TropMatrix val_matrix(const SeriesMatrix& x) {
  TropMatrix out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out(i, j) = x(i, j).valuation();
  return out;
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const TropMatrix& a, const TropMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a(i, j) != b(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

}  // namespace

LiftReport verify_lift(const SeriesMatrix& x, const SeriesMatrix& y, const TropMatrix& a, const TropMatrix& b) {
  if (x.size() != y.size() || x.size() != a.size() || a.size() != b.size()) {
    throw SizeMismatch("lift matrices and tropical matrices differ in size");
  }
  LiftReport r;
  const SeriesMatrix xy = x * y;
  const SeriesMatrix yx = y * x;
  for (std::size_t i = 0; i < x.size() && !r.product_entry; ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (xy(i, j) != yx(i, j)) {
        r.product_entry = std::make_pair(i, j);
        r.xy_value = xy(i, j);
        r.yx_value = yx(i, j);
        break;
      }
  r.commutes = !r.product_entry;
  r.x_valuation_entry = first_mismatch(val_matrix(x), a);
  r.y_valuation_entry = first_mismatch(val_matrix(y), b);
  r.valuations_match = !r.x_valuation_entry && !r.y_valuation_entry;
  r.verified = r.commutes && r.valuations_match;
  return r;
}

std::optional<std::pair<SeriesMatrix, SeriesMatrix>> lift_2x2(const TropMatrix& a, const TropMatrix& b) {
  if (a.size() != 2 || b.size() != 2 || !in_TC2(a, b)) {
    throw PreconditionFailed("lift_2x2 needs a 2x2 pair satisfying the TC2 test");
  }
  const Rational a11 = a(0, 0).value(), a12 = a(0, 1).value(), a21 = a(1, 0).value(), a22 = a(1, 1).value();
  const Rational b11 = b(0, 0).value(), b22 = b(1, 1).value(), b12 = b(0, 1).value();
  const Rational delta = b12 - a12;

  // Y = alpha I + beta X, so Y commutes with X whatever alpha and beta are.
  const SeriesPoly beta = SeriesPoly::monomial(1, delta);
  const std::array<Rational, 4> coeffs = {Rational(1), Rational(-1), Rational(2), Rational(-2)};

  std::vector<Rational> exps;
  for (const Rational& e : {b11, b22, Rational(a11 + delta), Rational(a22 + delta)})
    if (std::find(exps.begin(), exps.end(), e) == exps.end()) exps.push_back(e);

  std::vector<SeriesPoly> alphas{SeriesPoly()};
  for (const auto& e : exps)
    for (const auto& c : coeffs) alphas.push_back(SeriesPoly::monomial(c, e));
  for (std::size_t i = 0; i < exps.size(); ++i)
    for (std::size_t j = 0; j < exps.size(); ++j) {
      if (!(exps[i] < exps[j])) continue;
      for (const auto& c1 : coeffs)
        for (const auto& c2 : coeffs)
          alphas.push_back(SeriesPoly::monomial(c1, exps[i]) + SeriesPoly::monomial(c2, exps[j]));
    }

  // p and q: leading term, optionally a correction that survives cancellation
  auto diagonal_options = [&](const Rational& lead) {
    std::vector<SeriesPoly> out;
    for (const auto& c0 : coeffs) out.push_back(SeriesPoly::monomial(c0, lead));
    for (const Rational& e : {Rational(b11 - delta), Rational(b22 - delta)}) {
      if (!(e > lead)) continue;
      for (const auto& c0 : coeffs)
        for (const auto& c : coeffs) {
          SeriesPoly s = SeriesPoly::monomial(c0, lead) + SeriesPoly::monomial(c, e);
          if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
        }
    }
    return out;
  };
  const auto ps = diagonal_options(a11);
  const auto qs = diagonal_options(a22);

  const TropScalar want11(b11), want22(b22);
  for (const auto& alpha : alphas)
    for (const auto& p : ps) {
      const SeriesPoly y11 = alpha + beta * p;
      if (y11.valuation() != want11) continue;
      for (const auto& q : qs) {
        const SeriesPoly y22 = alpha + beta * q;
        if (y22.valuation() != want22) continue;
        SeriesMatrix x(2);
        x(0, 0) = p;
        x(0, 1) = SeriesPoly::monomial(1, a12);
        x(1, 0) = SeriesPoly::monomial(1, a21);
        x(1, 1) = q;
        SeriesMatrix y(2);
        y(0, 0) = y11;
        y(0, 1) = beta * x(0, 1);
        y(1, 0) = beta * x(1, 0);
        y(1, 1) = y22;
        if (verify_lift(x, y, a, b).verified) return std::make_pair(std::move(x), std::move(y));
      }
    }
  return std::nullopt;
}

}  // namespace tropcomm
