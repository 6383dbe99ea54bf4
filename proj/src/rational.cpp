// SPDX-License-Identifier: Apache-2.0

#include "rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gqm {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_integer_token(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_token(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_integer(text));
  } else {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
      throw std::invalid_argument("signed denominator: '" + std::string(text) + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    q = Rational(num, den);
  }
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace gqm
