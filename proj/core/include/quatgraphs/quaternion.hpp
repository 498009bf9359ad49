#ifndef QUATGRAPHS_QUATERNION_HPP
#define QUATGRAPHS_QUATERNION_HPP

#include "quatgraphs/linalg.hpp"
#include "quatgraphs/numeric.hpp"

#include <array>
#include <iosfwd>

namespace quatgraphs {

// Rational definite quaternion algebra with basis (1, i, j, k),
// i^2 = a, j^2 = b, k = ij = -ji.
struct QuaternionAlgebra {
  long long p = 0;  // the finite ramified prime
  long long a = 0;
  long long b = 0;
};

// Element in (1, i, j, k) coordinates over Q.
struct RatQuat {
  std::array<Rat, 4> c{};

  RatQuat() = default;
  explicit RatQuat(Rat w) { c[0] = std::move(w); }
  RatQuat(Rat w, Rat x, Rat y, Rat z) : c{std::move(w), std::move(x), std::move(y), std::move(z)} {}

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
  bool operator==(const RatQuat& o) const { return c == o.c; }
};

RatQuat q_add(const RatQuat& x, const RatQuat& y);
RatQuat q_sub(const RatQuat& x, const RatQuat& y);
RatQuat q_neg(const RatQuat& x);
RatQuat q_scale(const Rat& s, const RatQuat& x);
RatQuat q_mul(const RatQuat& x, const RatQuat& y, const QuaternionAlgebra& A);
RatQuat q_conj(const RatQuat& x);
Rat q_trd(const RatQuat& x);
Rat q_nrd(const RatQuat& x, const QuaternionAlgebra& A);
RatQuat q_inv(const RatQuat& x, const QuaternionAlgebra& A);

// 4x4 rational matrix of left multiplication by x on (1, i, j, k) coords.
RatMat left_mult_matrix(const RatQuat& x, const QuaternionAlgebra& A);

std::ostream& operator<<(std::ostream& os, const RatQuat& q);

// Local Hilbert symbol (a, b)_q; q = 0 encodes the infinite place.
int hilbert_symbol(long long a, long long b, long long q);

// Deterministic structure constants for the algebra ramified exactly at
// {p, infinity}:
//   p = 2            -> (-1, -1)
//   p = 3 mod 4      -> (-1, -p)
//   p = 5 mod 8      -> (-2, -p)
//   p = 1 mod 8      -> (-q, -p), q the least prime q = 3 mod 4 with (q|p) = -1
// Throws std::invalid_argument on composite p.
QuaternionAlgebra algebra_for_prime(long long p);

// Ramified exactly at {p, infinity}, certified by Hilbert symbols at all
// primes dividing 2abp and at infinity.
bool ramification_is_p_infinity(const QuaternionAlgebra& A);

}  // namespace quatgraphs

#endif
