#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hivelab {

using Int = std::int64_t;
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(Int num, Int den = 1) {
  Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

inline Rational to_rational(Int v) { return Rational(BigInt(static_cast<long>(v))); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(const std::string& text);

// Scalar helpers shared by the kernel templates so that the same source
// evaluates over exact rationals and over doubles.
inline Rational abs_value(const Rational& x) { return abs(x); }
inline double abs_value(double x) { return x < 0 ? -x : x; }

inline int sign_of(const Rational& x) { return sgn(x); }
inline int sign_of(double x) { return (x > 0) - (x < 0); }

inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(double x) { return x; }

template <class Scalar> Scalar scalar_from_int(Int v);
template <> inline Rational scalar_from_int<Rational>(Int v) { return to_rational(v); }
template <> inline double scalar_from_int<double>(Int v) { return static_cast<double>(v); }

template <class Scalar> Scalar scalar_fraction(Int num, Int den);
template <> inline Rational scalar_fraction<Rational>(Int num, Int den) {
  return make_rational(num, den);
}
template <> inline double scalar_fraction<double>(Int num, Int den) {
  return static_cast<double>(num) / static_cast<double>(den);
}

} // namespace hivelab
