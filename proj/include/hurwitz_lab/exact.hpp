#pragma once

// Exact integer and rational arithmetic used by every counting path.

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hurwitz_lab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& n) { return n.str(); }

// Always "p/q" in lowest terms, including integers ("2/1").
inline std::string to_fraction(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline BigInt factorial(int n) {
  BigInt result = 1;
  for (int k = 2; k <= n; ++k) result *= k;
  return result;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline BigInt power(const BigInt& base, int exponent) {
  BigInt result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

inline Rational power(const Rational& base, int exponent) {
  Rational result = 1;
  if (exponent >= 0) {
    for (int i = 0; i < exponent; ++i) result *= base;
  } else {
    for (int i = 0; i < -exponent; ++i) result /= base;
  }
  return result;
}

}  // namespace hurwitz_lab
