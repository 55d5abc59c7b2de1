#pragma once

#include <gmpxx.h>

#include <string>

#include "nilq/errors.hpp"

namespace nilq {

// All coefficients in the library are exact rationals. No floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Parses "p" or "p/q" with optional leading sign; q must be positive.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Int whole(s);
      return Rat(whole);
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den <= 0) throw InputError("rational denominator must be positive: " + s);
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InputError("malformed rational literal: " + s);
  }
}

}  // namespace nilq
