#pragma once

#include "kleinian/error.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <string>
#include <string_view>

namespace kleinian {

// Expression templates off: values are stored in containers and captured by
// auto throughout, where lazy expressions would dangle.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// num/den for builtin integers. Rational(int, int) mangles a negative
/// denominator into an unsigned one, so go through Integer.
inline Rational ratio(long long num, long long den) {
  if (den == 0) throw DomainError("zero denominator");
  return Rational(Integer(num), Integer(den));
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_int(num)) throw DomainError("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(Integer(std::string(num)));
  const auto den = text.substr(slash + 1);
  if (!valid_int(den) || den.front() == '-' || den.front() == '+')
    throw DomainError("malformed rational '" + std::string(text) + "'");
  Integer d(std::string{den});
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(Integer(std::string(num)), d);
}

inline Integer floor(const Rational& q) {
  Integer quot, rem;
  divide_qr(numerator(q), denominator(q), quot, rem);
  if (rem < 0) --quot;
  return quot;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

} // namespace kleinian
