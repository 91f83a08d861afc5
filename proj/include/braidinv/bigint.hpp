#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "braidinv/errors.hpp"

namespace braidinv {

// All coefficient arithmetic is exact.  Word length ~40 in B_8 already pushes
// trace coefficients past 64 bits, so machine integers are not an option.
using Int = boost::multiprecision::cpp_int;

inline std::string int_str(const Int &v) { return v.str(); }

// Exact integer division; throws internal_error when the quotient is not
// exact.  Divisibility failures here always mean a bug, never bad input.
inline Int exact_div(const Int &num, long long den, const char *where) {
  if (den == 0) throw internal_error(std::string("division by zero in ") + where);
  if (num % den != 0)
    throw internal_error(std::string("exact division failed in ") + where + ": " +
                         num.str() + " is not divisible by " + std::to_string(den));
  return num / den;
}

inline bool ring_is_zero(const Int &v) { return v == 0; }
inline std::size_t ring_terms(const Int &v) { return v == 0 ? 0u : 1u; }
inline std::string ring_str(const Int &v) { return v.str(); }
inline bool ring_leading_negative(const Int &v) { return v < 0; }
inline Int ring_exact_div_int(const Int &v, long long m, const char *where) {
  return exact_div(v, m, where);
}

}  // namespace braidinv
