#ifndef QUATGRAPHS_NUMERIC_HPP
#define QUATGRAPHS_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#define QG_CHECK(cond, msg)                                               \
  do {                                                                    \
    if (!(cond)) throw std::runtime_error(std::string("internal: ") + (msg)); \
  } while (0)

#define QG_REQUIRE(cond, msg)                                             \
  do {                                                                    \
    if (!(cond)) throw std::invalid_argument(msg);                        \
  } while (0)

namespace quatgraphs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Floor of an exact rational.
inline Int rat_floor(const Rat& r) {
  Int n = num(r), d = den(r);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

// Largest x >= 0 with x^2 <= n.  n must be nonnegative.
Int isqrt(const Int& n);

// Exact integer square root; sets ok=false if n is not a perfect square.
Int exact_sqrt(const Int& n, bool& ok);

// Exact rational square root of a perfect-square rational.
Rat exact_sqrt_rat(const Rat& r, bool& ok);

// Exact nonnegative integer 4th root; ok=false if n is not a perfect 4th power.
Int exact_fourth_root(const Int& n, bool& ok);

bool is_prime(long long n);

// Prime factorization by trial division (small inputs only).
std::vector<long long> prime_factors(long long n);

// Bernoulli number B_n (B_1 = -1/2 convention).
Rat bernoulli(int n);

Rat binomial(int n, int k);

// floor(c + sqrt(r)) for rationals, r >= 0, computed exactly.
Int floor_plus_sqrt(const Rat& c, const Rat& r);

// ceil(c - sqrt(r)) for rationals, r >= 0, computed exactly.
Int ceil_minus_sqrt(const Rat& c, const Rat& r);

// Fixed-point decimal rendering of a rational, round-to-nearest.
std::string rat_to_decimal(const Rat& r, int digits);

}  // namespace quatgraphs

#endif
