#include "tropcomm/rational.hpp"

#include <cctype>

#include "tropcomm/errors.hpp"

namespace tropcomm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  const std::string original(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed fraction '" + original + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + original + "'");
    result = Rational(mpz_class(std::string(num), 10), d);
    result.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw ParseError("malformed decimal '" + original + "'");
    }
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    result = Rational(digits, scale);
    result.canonicalize();
  } else {
    if (!all_digits(s)) throw ParseError("malformed number '" + original + "'");
    result = Rational(mpz_class(std::string(s), 10));
  }
  return negative ? Rational(-result) : result;
}

std::string to_fraction_string(const Rational& q) { return q.get_str(); }

std::string to_display_string(const Rational& q) {
  const mpz_class& den = q.get_den();
  if (den == 1) return q.get_num().get_str();
  if (100 % den != 0) return q.get_str();
  mpz_class scaled = q.get_num() * (100 / den);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  mpz_class whole = scaled / 100;
  unsigned long rem = mpz_class(scaled % 100).get_ui();
  std::string frac = (rem < 10 ? "0" : "") + std::to_string(rem);
  if (frac.back() == '0') frac.pop_back();
  return (negative ? "-" : "") + whole.get_str() + "." + frac;
}

}  // namespace tropcomm
