#pragma once

#include <gmpxx.h>

#include <string>

#include "asq/errors.hpp"

namespace asq {

// All linear algebra in this library is exact; no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// Accepts "p" or "p/q".
inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) fail(errc::parse_error, "bad rational '" + s + "'");
  q.canonicalize();
  if (q.get_den() == 0) fail(errc::parse_error, "zero denominator in '" + s + "'");
  return q;
}

}  // namespace asq
