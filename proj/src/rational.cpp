#include "refchoice/rational.hpp"

#include <cctype>

#include "refchoice/errors.hpp"

namespace refchoice {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits) || !all_digits(den)) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  Rational value(n, d);
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) { return value.get_str(10); }

}  // namespace refchoice
