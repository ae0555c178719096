#include "bundlerev/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace bundlerev {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not a rational number: \"" + std::string(whole) + "\"");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("not a rational number: \"" + std::string(text) + "\"");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      throw std::invalid_argument("not a rational number: \"" + std::string(text) + "\"");
    std::string digits = std::string(int_part) + std::string(frac_part);
    if (digits.empty()) digits = "0";
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    Rational q(negative ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
  }

  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

DecimalText to_decimal(const Rational& q, int places) {
  DecimalText out;
  mpz_class num = abs(q.get_num());
  const mpz_class& den = q.get_den();
  mpz_class whole = num / den;
  mpz_class rem = num % den;
  if (q < 0) out.text = "-";
  out.text += whole.get_str();
  if (rem == 0) return out;
  out.text += '.';
  for (int i = 0; i < places && rem != 0; ++i) {
    rem *= 10;
    mpz_class digit = rem / den;
    rem %= den;
    out.text += digit.get_str();
  }
  if (rem != 0) {
    out.exact = false;
    out.text += "...";
  }
  return out;
}

std::string to_display(const Rational& q) { return to_string(q) + " (" + to_decimal(q).text + ")"; }

Rational from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value cannot be made rational");
  return Rational(v);
}

}  // namespace bundlerev
