#include "pforge/rational.hpp"

#include <cctype>

#include "pforge/error.hpp"

namespace pforge {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    fail("parse-error", "malformed rational '" + std::string(text) + "'");
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) fail("parse-error", "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace pforge
