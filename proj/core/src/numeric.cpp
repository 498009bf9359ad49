#include "quatgraphs/numeric.hpp"

#include <algorithm>

namespace quatgraphs {

Int isqrt(const Int& n) {
  QG_CHECK(n >= 0, "isqrt of negative");
  if (n == 0) return 0;
  Int x = Int(1) << (unsigned)((boost::multiprecision::msb(n) / 2) + 1);
  // Newton iteration, monotone from above.
  for (;;) {
    Int y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return x;
}

Int exact_sqrt(const Int& n, bool& ok) {
  if (n < 0) {
    ok = false;
    return 0;
  }
  Int r = isqrt(n);
  ok = (r * r == n);
  return r;
}

Rat exact_sqrt_rat(const Rat& r, bool& ok) {
  if (r < 0) {
    ok = false;
    return 0;
  }
  bool okn = false, okd = false;
  Int sn = exact_sqrt(num(r), okn);
  Int sd = exact_sqrt(den(r), okd);
  ok = okn && okd;
  return ok ? Rat(sn, sd) : Rat(0);
}

Int exact_fourth_root(const Int& n, bool& ok) {
  bool ok2 = false;
  Int s = exact_sqrt(n, ok2);
  if (!ok2) {
    ok = false;
    return 0;
  }
  return exact_sqrt(s, ok);
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return (uint64_t)((__uint128_t)a * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs with the bases above.
  uint64_t d = (uint64_t)n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, (uint64_t)n);
    if (x == 1 || x == (uint64_t)n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, (uint64_t)n);
      if (x == (uint64_t)n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<long long> prime_factors(long long n) {
  QG_CHECK(n != 0, "factoring zero");
  if (n < 0) n = -n;
  std::vector<long long> out;
  for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Rat binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return Rat(r);
}

Rat bernoulli(int n) {
  QG_CHECK(n >= 0, "bernoulli index");
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
  static std::vector<Rat> table = {Rat(1)};
  for (int m = (int)table.size(); m <= n; ++m) {
    Rat s = 0;
    for (int j = 0; j < m; ++j) s += binomial(m + 1, j) * table[j];
    table.push_back(-s / Rat(m + 1));
  }
  return table[n];
}

namespace {

// true iff t <= sqrt(r), for t arbitrary rational and r >= 0.
bool le_sqrt(const Rat& t, const Rat& r) {
  if (t <= 0) return true;
  return t * t <= r;
}

}  // namespace

Int floor_plus_sqrt(const Rat& c, const Rat& r) {
  QG_CHECK(r >= 0, "floor_plus_sqrt negative radicand");
  // Start near the answer with exact arithmetic only.
  Int n = rat_floor(c) + isqrt(rat_floor(r)) + 2;
  // Largest n with n - c <= sqrt(r).
  while (!le_sqrt(Rat(n) - c, r)) --n;
  return n;
}

Int ceil_minus_sqrt(const Rat& c, const Rat& r) {
  QG_CHECK(r >= 0, "ceil_minus_sqrt negative radicand");
  Int n = rat_ceil(c) - isqrt(rat_floor(r)) - 2;
  // Smallest n with c - n <= sqrt(r).
  while (!le_sqrt(c - Rat(n), r)) ++n;
  return n;
}

std::string rat_to_decimal(const Rat& r, int digits) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rat scaled = r * Rat(scale);
  Int n = rat_floor(scaled);
  // round half up
  if (scaled - Rat(n) >= Rat(1, 2)) n += 1;
  bool neg = n < 0;
  if (neg) n = -n;
  Int ip = n / scale, fp = n % scale;
  std::string frac = fp.str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  std::string out = (neg ? "-" : "") + ip.str();
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace quatgraphs
