#include "lexiprof/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace lexiprof {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class pow10(int digits) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return p;
}

// Rounds |value| * 10^digits to an integer, half to even.
mpz_class scaled_half_even(const Rational& magnitude, int digits) {
  mpz_class num = magnitude.get_num() * pow10(digits);
  const mpz_class& den = magnitude.get_den();
  mpz_class quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int cmp_half = cmp(mpz_class(rem * 2), den);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(quot.get_mpz_t()))) ++quot;
  return quot;
}

}  // namespace

Rational make_ratio(long num, unsigned long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational parse_decimal(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto dot = body.find('.');
  std::string_view whole = body.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if (!all_digits(whole) || (dot != std::string_view::npos && !all_digits(frac))) {
    throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  }
  mpz_class num(std::string(whole) + std::string(frac), 10);
  Rational out(num, pow10(static_cast<int>(frac.size())));
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && num.front() == '-') {
    negative = true;
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational out(mpz_class(std::string(num), 10), d);
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string render_fixed(const Rational& value, int digits) {
  const bool negative = sgn(value) < 0;
  const mpz_class scaled = scaled_half_even(abs(value), digits);
  std::string s = scaled.get_str(10);
  if (static_cast<int>(s.size()) <= digits) {
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  }
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), 1, '.');
  if (negative && scaled != 0) s.insert(0, 1, '-');
  return s;
}

Rational round_fixed(const Rational& value, int digits) {
  Rational out(scaled_half_even(abs(value), digits), pow10(digits));
  out.canonicalize();
  return sgn(value) < 0 ? Rational(-out) : out;
}

Rational from_double_fixed(double value, int digits) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  // mpq set from a double is exact.
  return round_fixed(Rational(value), digits);
}

}  // namespace lexiprof
