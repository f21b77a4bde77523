#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cliquelab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(z, s), zero when z < s.
inline BigInt binomial_exact(std::uint64_t z, std::uint64_t s) {
  if (s > z) return 0;
  s = std::min(s, z - s);
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= s; ++i) {
    out *= z - s + i;
    out /= i;
  }
  return out;
}

/// C(z, s) in 64 bits, saturating at the maximum value.
inline std::uint64_t binomial_count(std::uint64_t z, std::uint64_t s) {
  const BigInt exact = binomial_exact(z, s);
  const BigInt cap = std::numeric_limits<std::uint64_t>::max();
  return exact > cap ? std::numeric_limits<std::uint64_t>::max()
                     : exact.convert_to<std::uint64_t>();
}

inline double binomial(std::uint64_t z, std::uint64_t s) {
  return binomial_exact(z, s).convert_to<double>();
}

inline BigInt ipow(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

inline std::string to_fraction_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace cliquelab
