#include "logpair/rational.hpp"

#include <cctype>

#include "logpair/errors.hpp"

namespace logpair {

namespace {

bool is_signed_digits(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

  if (!is_signed_digits(num) || (slash != std::string_view::npos && !is_digits(den))) {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  }

  Integer p(strip_plus(num), 10);
  Integer q = 1;
  if (slash != std::string_view::npos) {
    q = Integer(std::string(den), 10);
    if (q == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str(10);
}

Rational ratio(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
  if (!is_integer(q)) throw InputError("expected an integer, got " + to_string(q));
  if (!q.get_num().fits_slong_p()) throw InputError("integer out of range: " + to_string(q));
  return q.get_num().get_si();
}

Rational sum(std::span<const Rational> values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace logpair
