#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace vgraph {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(std::uint64_t n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline std::string to_string(const Integer& value) { return value.get_str(); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace vgraph
