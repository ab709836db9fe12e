#include "tropcomm/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "tropcomm/errors.hpp"

namespace tropcomm {

// --- Monomial ----------------------------------------------------------------

Monomial Monomial::variable(VarId v, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

Monomial Monomial::from_factors(std::vector<std::pair<VarId, unsigned>> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
  }
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), std::pair<VarId, unsigned>{v, 0});
  return it != factors_.end() && it->first == v ? it->second : 0;
}

std::vector<int> Monomial::exponent_vector(std::size_t dim) const {
  std::vector<int> e(dim, 0);
  for (const auto& [v, k] : factors_) {
    if (v >= dim) throw std::out_of_range("monomial variable outside the ambient dimension");
    e[v] = static_cast<int>(k);
  }
  return e;
}

Monomial Monomial::substitute(std::span<const VarId> mapping) const {
  std::vector<std::pair<VarId, unsigned>> f;
  f.reserve(factors_.size());
  for (const auto& [v, k] : factors_) f.emplace_back(mapping[v], k);
  return from_factors(std::move(f));
}

Rational Monomial::weight(std::span<const Rational> w) const {
  Rational total = 0;
  for (const auto& [v, k] : factors_) {
    if (v >= w.size()) throw std::out_of_range("weight vector too short for monomial");
    total += w[v] * k;
  }
  return total;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto& out = m.factors_;
  out.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return m;
}

// --- SparsePoly --------------------------------------------------------------

SparsePoly SparsePoly::term(Coefficient c, Monomial m) {
  SparsePoly p;
  p.add_term(m, c);
  return p;
}

void SparsePoly::add_term(const Monomial& m, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly::Coefficient SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

SparsePoly SparsePoly::substitute(std::span<const VarId> mapping) const {
  SparsePoly out;
  for (const auto& [m, c] : terms_) out.add_term(m.substitute(mapping), c);
  return out;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

SparsePoly operator-(const SparsePoly& a) {
  SparsePoly r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
  return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

SparsePoly operator*(const SparsePoly& a, const Monomial& m) {
  SparsePoly r;
  for (const auto& [ma, ca] : a.terms_) r.terms_.emplace(ma * m, ca);
  return r;
}

// --- VariableLayout ----------------------------------------------------------

VariableLayout::VariableLayout(std::size_t n, bool symmetric)
    : n_(n), symmetric_(symmetric), per_matrix_(symmetric ? n * (n + 1) / 2 : n * n) {
  if (n == 0) throw std::invalid_argument("layout size must be positive");
  if (2 * per_matrix_ > 65535) throw std::invalid_argument("layout too large");
}

VariableLayout VariableLayout::full(std::size_t n) { return VariableLayout(n, false); }
VariableLayout VariableLayout::symmetric(std::size_t n) { return VariableLayout(n, true); }

std::size_t VariableLayout::slot(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("matrix index out of range");
  if (!symmetric_) return i * n_ + j;
  if (i > j) std::swap(i, j);
  // rows 0..i-1 hold n, n-1, ... entries
  return i * n_ - i * (i - 1) / 2 + (j - i);
}

VarId VariableLayout::x(std::size_t i, std::size_t j) const { return static_cast<VarId>(slot(i, j)); }
VarId VariableLayout::y(std::size_t i, std::size_t j) const {
  return static_cast<VarId>(per_matrix_ + slot(i, j));
}

VariableLayout::Coordinates VariableLayout::coordinates(VarId v) const {
  if (v >= dimension()) throw std::out_of_range("variable id out of range");
  const bool is_y = v >= per_matrix_;
  std::size_t s = is_y ? v - per_matrix_ : v;
  if (!symmetric_) return {is_y, s / n_, s % n_};
  std::size_t i = 0;
  while (s >= n_ - i) {
    s -= n_ - i;
    ++i;
  }
  return {is_y, i, i + s};
}

std::string VariableLayout::name(VarId v) const {
  auto [is_y, i, j] = coordinates(v);
  std::string s(1, is_y ? 'y' : 'x');
  if (n_ < 10) return s + std::to_string(i + 1) + std::to_string(j + 1);
  return s + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

std::optional<VarId> VariableLayout::parse_name(std::string_view text) const {
  if (text.size() < 3 || (text[0] != 'x' && text[0] != 'y')) return std::nullopt;
  const bool is_y = text[0] == 'y';
  std::string_view rest = text.substr(1);
  std::size_t i = 0;
  std::size_t j = 0;
  auto parse_index = [](std::string_view s, std::size_t& out) {
    if (s.empty()) return false;
    out = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
      out = out * 10 + static_cast<std::size_t>(c - '0');
    }
    return true;
  };
  if (auto sep = rest.find('_'); sep != std::string_view::npos) {
    if (!parse_index(rest.substr(0, sep), i) || !parse_index(rest.substr(sep + 1), j)) return std::nullopt;
  } else {
    if (rest.size() != 2 || !parse_index(rest.substr(0, 1), i) || !parse_index(rest.substr(1, 1), j)) {
      return std::nullopt;
    }
  }
  if (i == 0 || j == 0 || i > n_ || j > n_) return std::nullopt;
  return is_y ? y(i - 1, j - 1) : x(i - 1, j - 1);
}

std::vector<Rational> VariableLayout::weights(const TropMatrix& a, const TropMatrix& b) const {
  if (a.size() != n_ || b.size() != n_) throw SizeMismatch("matrix size does not match the variable layout");
  std::vector<Rational> w(dimension());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = symmetric_ ? i : 0; j < n_; ++j) {
      if (a(i, j).is_infinite() || b(i, j).is_infinite()) {
        throw UnsupportedSize("weight vectors need finite matrix entries");
      }
      w[x(i, j)] = a(i, j).value();
      w[y(i, j)] = b(i, j).value();
    }
  return w;
}

// --- formatting ---------------------------------------------------------------

std::string format_monomial(const Monomial& m, const VariableLayout& layout) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [v, k] : m.factors()) {
    if (!s.empty()) s += '*';
    s += layout.name(v);
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

Monomial parse_monomial(std::string_view text, const VariableLayout& layout) {
  std::vector<std::pair<VarId, unsigned>> factors;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('*', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    unsigned exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      std::string e(token.substr(caret + 1));
      if (e.empty() || !std::all_of(e.begin(), e.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("bad exponent in '" + std::string(text) + "'");
      }
      exponent = static_cast<unsigned>(std::stoul(e));
      token = token.substr(0, caret);
    }
    auto v = layout.parse_name(token);
    if (!v) throw ParseError("unknown variable '" + std::string(token) + "'");
    factors.emplace_back(*v, exponent);
    pos = end + 1;
  }
  return Monomial::from_factors(std::move(factors));
}

std::string format_poly(const SparsePoly& p, const VariableLayout& layout) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const auto magnitude = negative ? -c : c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (magnitude != 1 || m.is_one()) {
      s += std::to_string(magnitude);
      if (!m.is_one()) s += "*";
    }
    if (!m.is_one()) s += format_monomial(m, layout);
  }
  return s;
}

// --- PolyMatrix --------------------------------------------------------------

PolyMatrix PolyMatrix::variables(const VariableLayout& layout, bool is_y) {
  PolyMatrix m(layout.n());
  for (std::size_t i = 0; i < layout.n(); ++i)
    for (std::size_t j = 0; j < layout.n(); ++j) {
      m(i, j) = SparsePoly::term(1, Monomial::variable(is_y ? layout.y(i, j) : layout.x(i, j)));
    }
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size() != b.size()) throw SizeMismatch("polynomial matrix sizes differ");
  PolyMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t s = 0; s < a.size(); ++s) r(i, j) = r(i, j) + a(i, s) * b(s, j);
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size() != b.size()) throw SizeMismatch("polynomial matrix sizes differ");
  PolyMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

}  // namespace tropcomm
