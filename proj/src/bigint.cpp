#include "aobound/bigint.hpp"

#include <algorithm>
#include <cctype>

namespace aobound {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    body.remove_prefix(1);
  if (!all_digits(body))
    throw DomainError("not an integer: '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text))
    throw DomainError("not a rational: '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw DomainError("zero denominator: '" + std::string(text) + "'");
  return make_rational(num, den);
}

}  // namespace aobound
