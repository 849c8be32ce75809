#ifndef POLARIS_NUMERIC_HPP
#define POLARIS_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace polaris {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an exact computation produces a value that can only come from a bug
/// (negative multiplicity, non-integral average, failed exact division, ...).
class ConsistencyFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  const BigInt& num = boost::multiprecision::numerator(v);
  const BigInt& den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw ConsistencyFault(std::string("inexact division in ") + what);
  return q;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// d! / (a_1! ... a_k!) with d = sum of the parts.
inline BigInt multinomial(std::span<const int> parts) {
  BigInt r = 1;
  int running = 0;
  for (int a : parts) {
    running += a;
    r *= binomial(running, a);
  }
  return r;
}

inline std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  return static_cast<std::int64_t>(v);
}

/// Parses "a" or "a/b" (optional sign) into an exact rational.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

/// Uniform-ish random rational with numerator in [-bound, bound] and denominator in [1, bound].
inline Rational random_rational(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  int a = num(rng);
  return Rational(a, den(rng));
}

}  // namespace polaris

#endif  // POLARIS_NUMERIC_HPP
