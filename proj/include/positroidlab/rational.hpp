#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "positroidlab/base.hpp"

namespace plab {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_of(long long v) { return Int(static_cast<long>(v)); }

inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p/q" or "p". Throws DomainError on garbage or zero denominator.
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(s));
    }
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw DomainError("rational with zero denominator: " + s);
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw DomainError("cannot parse rational: " + s);
  }
}

inline std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) throw DomainError("zero raised to nonpositive power");
  Rat b = e > 0 ? base : Rat(1) / base;
  long m = e > 0 ? e : -e;
  Rat acc(1);
  while (m > 0) {
    if (m & 1) acc *= b;
    b *= b;
    m >>= 1;
  }
  acc.canonicalize();
  return acc;
}

inline int rat_sign(const Rat& r) { return sgn(r); }

}  // namespace plab
