#ifndef RHT_RATIONAL_HPP
#define RHT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "rht/errors.hpp"

namespace rht {

/* All scalar arithmetic in this library is exact; Rational is the only number type.
 * GMP keeps values canonical (lowest terms, positive denominator) after arithmetic. */
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/* Accepts "p", "p/q", optional leading sign. */
inline Rational parse_rational(const std::string& text) {
  try {
    Rational r(text);
    if (r.get_den() == 0) throw InputError("rational with zero denominator: " + text);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InputError("not a rational: " + text);
  }
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational pow_rational(const Rational& base, unsigned long e) {
  Rational out(1);
  for (unsigned long i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace rht

#endif
