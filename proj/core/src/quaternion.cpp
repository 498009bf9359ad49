#include "quatgraphs/quaternion.hpp"

#include <ostream>

namespace quatgraphs {

RatQuat q_add(const RatQuat& x, const RatQuat& y) {
  RatQuat r;
  for (int m = 0; m < 4; ++m) r.c[m] = x.c[m] + y.c[m];
  return r;
}

RatQuat q_sub(const RatQuat& x, const RatQuat& y) {
  RatQuat r;
  for (int m = 0; m < 4; ++m) r.c[m] = x.c[m] - y.c[m];
  return r;
}

RatQuat q_neg(const RatQuat& x) {
  RatQuat r;
  for (int m = 0; m < 4; ++m) r.c[m] = -x.c[m];
  return r;
}

RatQuat q_scale(const Rat& s, const RatQuat& x) {
  RatQuat r;
  for (int m = 0; m < 4; ++m) r.c[m] = s * x.c[m];
  return r;
}

RatQuat q_mul(const RatQuat& x, const RatQuat& y, const QuaternionAlgebra& A) {
  const Rat &x0 = x.c[0], &x1 = x.c[1], &x2 = x.c[2], &x3 = x.c[3];
  const Rat &y0 = y.c[0], &y1 = y.c[1], &y2 = y.c[2], &y3 = y.c[3];
  Rat a = A.a, b = A.b;
  // (x0 + x1 i + x2 j + x3 k)(y0 + y1 i + y2 j + y3 k) with
  // i^2 = a, j^2 = b, k^2 = -ab, ij = k, ji = -k, jk = -b i, kj = b i,
  // ki = -a j, ik = a j.
  RatQuat r;
  r.c[0] = x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3;
  r.c[1] = x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2;
  r.c[2] = x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1;
  r.c[3] = x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1;
  return r;
}

RatQuat q_conj(const RatQuat& x) {
  return RatQuat(x.c[0], -x.c[1], -x.c[2], -x.c[3]);
}

Rat q_trd(const RatQuat& x) { return 2 * x.c[0]; }

Rat q_nrd(const RatQuat& x, const QuaternionAlgebra& A) {
  Rat a = A.a, b = A.b;
  return x.c[0] * x.c[0] - a * x.c[1] * x.c[1] - b * x.c[2] * x.c[2] +
         a * b * x.c[3] * x.c[3];
}

RatQuat q_inv(const RatQuat& x, const QuaternionAlgebra& A) {
  Rat n = q_nrd(x, A);
  QG_CHECK(n != 0, "inverse of zero quaternion");
  return q_scale(Rat(1) / n, q_conj(x));
}

RatMat left_mult_matrix(const RatQuat& x, const QuaternionAlgebra& A) {
  RatMat m(4, std::vector<Rat>(4));
  RatQuat basis[4] = {RatQuat(Rat(1)), RatQuat(0, 1, 0, 0), RatQuat(0, 0, 1, 0),
                      RatQuat(0, 0, 0, 1)};
  for (int col = 0; col < 4; ++col) {
    RatQuat prod = q_mul(x, basis[col], A);
    for (int row = 0; row < 4; ++row) m[row][col] = prod.c[row];
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const RatQuat& q) {
  return os << "(" << q.c[0] << "," << q.c[1] << "," << q.c[2] << "," << q.c[3]
            << ")";
}

namespace {

int legendre(long long a, long long q) {
  a %= q;
  if (a < 0) a += q;
  if (a == 0) return 0;
  long long r = 1, base = a, e = (q - 1) / 2, mod = q;
  while (e) {
    if (e & 1) r = (__int128)r * base % mod;
    base = (__int128)base * base % mod;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

// u odd: epsilon(u) = (u-1)/2 mod 2, omega(u) = (u^2-1)/8 mod 2.
int eps2(long long u) { return (int)(((u - 1) / 2) & 1); }
int omega2(long long u) { return (int)(((u * u - 1) / 8) & 1); }

}  // namespace

int hilbert_symbol(long long a, long long b, long long q) {
  QG_REQUIRE(a != 0 && b != 0, "hilbert symbol needs nonzero arguments");
  if (q == 0) return (a < 0 && b < 0) ? -1 : 1;  // infinite place
  QG_REQUIRE(is_prime(q), "hilbert symbol place must be prime or infinity");
  long long alpha = 0, beta = 0;
  long long u = a, v = b;
  while (u % q == 0) {
    u /= q;
    ++alpha;
  }
  while (v % q == 0) {
    v /= q;
    ++beta;
  }
  if (q != 2) {
    int e = (int)((alpha * beta) & 1) * ((q - 1) / 2 % 2);
    int s = (e & 1) ? -1 : 1;
    if (beta & 1) s *= legendre(u, q);
    if (alpha & 1) s *= legendre(v, q);
    return s;
  }
  int e = eps2(u) * eps2(v) + (int)(alpha & 1) * omega2(v) +
          (int)(beta & 1) * omega2(u);
  return (e & 1) ? -1 : 1;
}

QuaternionAlgebra algebra_for_prime(long long p) {
  QG_REQUIRE(p >= 2 && is_prime(p), "p must be prime");
  QuaternionAlgebra A;
  A.p = p;
  if (p == 2) {
    A.a = -1;
    A.b = -1;
  } else if (p % 4 == 3) {
    A.a = -1;
    A.b = -p;
  } else if (p % 8 == 5) {
    A.a = -2;
    A.b = -p;
  } else {  // p = 1 mod 8
    long long q = 3;
    while (!(is_prime(q) && q % 4 == 3 && legendre(q, p) == -1)) q += 2;
    A.a = -q;
    A.b = -p;
  }
  QG_CHECK(ramification_is_p_infinity(A), "algebra table produced wrong ramification");
  return A;
}

bool ramification_is_p_infinity(const QuaternionAlgebra& A) {
  if (A.a >= 0 || A.b >= 0) return false;
  if (hilbert_symbol(A.a, A.b, 0) != -1) return false;
  std::vector<long long> places = prime_factors(2 * A.a * A.b * A.p);
  places.push_back(A.p);
  std::sort(places.begin(), places.end());
  places.erase(std::unique(places.begin(), places.end()), places.end());
  for (long long q : places) {
    int s = hilbert_symbol(A.a, A.b, q);
    if ((q == A.p) != (s == -1)) return false;
  }
  return true;
}

}  // namespace quatgraphs
