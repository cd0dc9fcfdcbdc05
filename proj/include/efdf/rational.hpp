#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace efdf {

// All time and work bookkeeping is exact rational arithmetic. Processor
// speeds like 1/2 take completion instants out of the integers, and
// deadline comparisons at boundaries must not depend on rounding, so
// every quantity is an mpq kept in canonical lowest-terms form.
using Rational = mpq_class;
using TimePoint = Rational;  // absolute simulation time, >= 0
using Duration = Rational;   // elapsed time or amount of work

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "7", "-7", "3/4" or a plain decimal such as "0.925".
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      mpz_class num(text.substr(0, slash));
      mpz_class den(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("rational: zero denominator");
      if (den < 0) throw std::invalid_argument("rational: negative denominator");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      std::size_t frac_len = text.size() - dot - 1;
      if (frac_len == 0 || digits.empty()) {
        throw std::invalid_argument("rational: malformed decimal");
      }
      mpz_class num(digits);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(mpz_class(text));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
}

// Canonical "num" or "num/den" text, the same forms parse_rational accepts.
inline std::string format_rational(const Rational& value) {
  return value.get_str();
}

}  // namespace efdf
