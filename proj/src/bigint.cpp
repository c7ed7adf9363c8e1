#include "zfpoly/bigint.hpp"

#include <cctype>

#include "zfpoly/errors.hpp"

namespace zfp {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(const std::string& text) {
  std::string digits = text;
  bool negative = false;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    negative = digits[0] == '-';
    digits.erase(0, 1);
  }
  if (!all_digits(digits)) throw ParseError("not an integer: '" + text + "'");
  BigInt v(digits);
  return negative ? BigInt(-v) : v;
}

Rational parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    const BigInt num = parse_bigint(text.substr(0, slash));
    const std::string den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("bad denominator in '" + text + "'");
    const BigInt den(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (!frac.empty() && !all_digits(frac)) throw ParseError("bad decimal '" + text + "'");
    const bool negative = !whole.empty() && whole[0] == '-';
    const std::string whole_digits = (whole.empty() || whole == "-" || whole == "+") ? "0" : whole;
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt magnitude = abs(parse_bigint(whole_digits)) * scale + (frac.empty() ? BigInt(0) : BigInt(frac));
    if (whole.empty() && frac.empty()) throw ParseError("bad decimal '" + text + "'");
    return Rational(negative ? BigInt(-magnitude) : magnitude, scale);
  }
  return Rational(parse_bigint(text));
}

std::string to_string(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace zfp
