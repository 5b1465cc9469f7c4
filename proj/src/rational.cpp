#include "clpart/rational.hpp"

#include <stdexcept>

namespace clpart {

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string digits(text);
  std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
  if (digits.size() == start) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (digits[i] < '0' || digits[i] > '9') {
      throw std::invalid_argument("malformed rational '" + std::string(whole) +
                                  "' (expected a/b or an integer)");
    }
  }
  if (digits[0] == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, unsigned long exponent) {
  Rational out(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
  out.canonicalize();
  return out;
}

Rational inverse_power(long p, unsigned long exponent) {
  return Rational(Integer(1), ipow(Integer(p), exponent));
}

UnitThreshold unit_threshold(const Rational& x) {
  if (x <= 0) return {0, false};
  if (x >= 1) return {0, true};
  Integer scaled = x.get_num() << 64;
  Integer t;
  mpz_cdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
  if (t >= (Integer(1) << 64)) return {0, true};
  // mpz_get_ui is 64-bit on LP64 targets.
  static_assert(sizeof(unsigned long) == 8);
  return {static_cast<std::uint64_t>(mpz_get_ui(t.get_mpz_t())), false};
}

}  // namespace clpart
