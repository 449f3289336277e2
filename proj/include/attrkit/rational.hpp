// Exact rational scalars and the conversions used at the floating-point boundary.
#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace attrkit {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

using QVector = std::vector<Rational>;
using DVector = std::vector<double>;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline DVector to_double(const QVector& v) {
  DVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_double(x));
  return out;
}

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Scalar conversion from the exact ring into the coefficient type T.
template <class T>
T from_rational(const Rational& q) {
  if constexpr (std::is_same_v<T, Rational>) {
    return q;
  } else if constexpr (std::is_same_v<T, double>) {
    return to_double(q);
  } else if constexpr (std::is_same_v<T, Complex>) {
    return Complex(to_double(q), 0.0);
  } else {
    static_assert(sizeof(T) == 0, "unsupported scalar type");
  }
}

/// "p/q" for non-integers, "p" for integers.
inline std::string to_string(const Rational& q) { return q.str(); }

namespace detail {

inline Integer parse_integer(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad integer literal '" + std::string(s) + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') {
      throw std::invalid_argument("bad integer literal '" + std::string(s) + "'");
    }
  }
  Integer v(std::string(s.substr(i)));
  return s[0] == '-' ? Integer(-v) : v;
}

inline Integer pow10(long e) {
  Integer p = 1;
  for (long k = 0; k < e; ++k) p *= 10;
  return p;
}

}  // namespace detail

/// Parses "p/q", an integer, or a decimal literal such as "-1.25e-3" exactly.
inline Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num = detail::parse_integer(std::string_view(s).substr(0, slash));
    Integer den = detail::parse_integer(std::string_view(s).substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(num, den);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    exponent = std::stol(s.substr(e + 1));
    s.resize(e);
  }
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char ch : s) {
    if (ch == '.') {
      if (seen_point) throw std::invalid_argument("bad decimal literal '" + std::string(text) + "'");
      seen_point = true;
    } else if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      if (seen_point) ++frac_digits;
    } else {
      throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
  Rational value{Integer(digits)};
  long shift = exponent - frac_digits;
  if (shift > 0) value *= Rational(detail::pow10(shift));
  if (shift < 0) value /= Rational(detail::pow10(-shift));
  return negative ? Rational(-value) : value;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace attrkit
