#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace gog {

// Edge labels and word exponents. Development indices multiply by edge
// labels on every step, so fixed-width integers overflow quickly.
using Integer = boost::multiprecision::cpp_int;

// Exact rationals for the running products q_1...q_i used by the
// centralizer membership walk.
using Rational = boost::multiprecision::cpp_rational;

inline bool divides(const Integer& d, const Integer& a) {
  return d != 0 && a % d == 0;
}

// Euclidean division with nonnegative remainder: a = q*m + r, 0 <= r < |m|.
inline std::pair<Integer, Integer> divmod_nonneg(const Integer& a, const Integer& m) {
  Integer q, r;
  boost::multiprecision::divide_qr(a, m, q, r);  // truncates toward zero
  if (r < 0) {
    if (m > 0) {
      q -= 1;
      r += m;
    } else {
      q += 1;
      r -= m;
    }
  }
  return {std::move(q), std::move(r)};
}

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline std::string to_string(const Integer& n) { return n.str(); }

}  // namespace gog
