#include "hcube/rational.hpp"

#include <cctype>
#include <string>

#include "hcube/error.hpp"

namespace hcube {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw ValidationError("malformed number '" + std::string(text) + "'");
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) malformed(whole);
  Integer value(std::string(s), 10);
  return negative ? Integer(-value) : value;
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) malformed(text);

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(trim(s.substr(0, slash)), text);
    const Integer den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::string_view mantissa = s;
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    const Integer exp = parse_integer(s.substr(e + 1), text);
    if (!exp.fits_slong_p() || abs(exp) > 100000) malformed(text);
    exponent = exp.get_si();
  }

  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  std::string_view int_part = mantissa;
  std::string_view frac_part;
  if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) malformed(text);
  if ((!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part)))
    malformed(text);
  digits.append(int_part);
  digits.append(frac_part);

  Integer num(digits, 10);
  if (negative) num = -num;
  exponent -= static_cast<long>(frac_part.size());
  Rational r;
  if (exponent >= 0) {
    r = Rational(num * pow10(static_cast<unsigned long>(exponent)));
  } else {
    r = Rational(num, pow10(static_cast<unsigned long>(-exponent)));
    r.canonicalize();
  }
  return r;
}

std::string format_rational(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  return r.get_str();
}

std::string format_decimal(const Rational& value, int digits) {
  if (digits < 0) throw ValidationError("negative decimal digit count");
  const Integer scaled_num = abs(value.get_num()) * pow10(static_cast<unsigned long>(digits));
  Integer quotient;
  Integer remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled_num.get_mpz_t(),
              value.get_den_mpz_t());
  if (2 * remainder >= value.get_den()) quotient += 1;

  std::string body = quotient.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sgn(value) < 0 && quotient != 0) body.insert(0, "-");
  return body;
}

std::string format_value(const Rational& value, std::optional<int> digits) {
  return digits ? format_decimal(value, *digits) : format_rational(value);
}

}  // namespace hcube
