#include "quatgraphs/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace quatgraphs {

Rat QuadraticLattice::quad_value(const std::vector<long long>& v) const {
  Int s = 0;
  for (int i = 0; i < dim; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < dim; ++j) s += Int(v[i]) * v[j] * gram[i][j];
  }
  return scale * Rat(s, 2);
}

// All-integer LLL on the Gram matrix (delta = 3/4), maintaining the
// Gram-Schmidt minors d_i and the scaled coefficients lambda_{i,j} = d_{j+1}
// mu_{i,j} so that no rational arithmetic is needed.
IntMat lll_reduce(IntMat& gram) {
  const int d = (int)gram.size();
  IntMat u = int_identity(d);
  if (d <= 1) return u;

  std::vector<Int> dd(d + 1);  // dd[0] = 1, dd[i] = GSO minor of the first i
  std::vector<IntVec> lam(d, IntVec(d, 0));
  dd[0] = 1;

  auto gseval = [&]() {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j <= i; ++j) {
        Int t = gram[i][j];
        for (int k = 0; k < j; ++k)
          t = (dd[k + 1] * t - lam[i][k] * lam[j][k]) / dd[k];
        if (j < i)
          lam[i][j] = t;
        else {
          dd[i + 1] = t;
          QG_CHECK(t > 0, "gram not positive definite in LLL");
        }
      }
  };
  gseval();

  auto shear = [&](int k, int l, const Int& q) {
    // b_k -= q b_l, with lambda and gram updates
    if (q == 0) return;
    for (int r = 0; r < d; ++r) u[r][k] -= q * u[r][l];
    for (int r = 0; r < d; ++r) gram[r][k] -= q * gram[r][l];
    for (int c = 0; c < d; ++c) gram[k][c] -= q * gram[l][c];
    lam[k][l] -= q * dd[l + 1];
    for (int i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };
  auto redi = [&](int k, int l) {
    // |2 lambda| must not exceed d_{l+1}
    Int two = 2 * lam[k][l];
    if (two > dd[l + 1] || -two > dd[l + 1]) {
      // nearest integer to lambda / d
      Int num2 = 2 * lam[k][l] + dd[l + 1];
      Int den2 = 2 * dd[l + 1];
      Int q = num2 / den2;
      if (num2 < 0 && q * den2 != num2) --q;
      shear(k, l, q);
    }
  };
  auto swapk = [&](int k) {
    for (int r = 0; r < d; ++r) std::swap(u[r][k], u[r][k - 1]);
    for (int r = 0; r < d; ++r) std::swap(gram[r][k], gram[r][k - 1]);
    for (int c = 0; c < d; ++c) std::swap(gram[k][c], gram[k - 1][c]);
    for (int j = 0; j < k - 1; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    Int l = lam[k][k - 1];
    Int b = (dd[k - 1] * dd[k + 1] + l * l) / dd[k];
    for (int i = k + 1; i < d; ++i) {
      Int t = lam[i][k];
      lam[i][k] = (dd[k + 1] * lam[i][k - 1] - l * t) / dd[k];
      lam[i][k - 1] = (b * t + l * lam[i][k]) / dd[k + 1];
    }
    dd[k] = b;
  };

  int k = 1;
  while (k < d) {
    redi(k, k - 1);
    // Lovasz with delta = 3/4: swap iff 4(d_{k-1} d_{k+1} + lambda^2) < 3 d_k^2
    if (4 * (dd[k - 1] * dd[k + 1] + lam[k][k - 1] * lam[k][k - 1]) <
        3 * dd[k] * dd[k]) {
      swapk(k);
      k = std::max(k - 1, 1);
    } else {
      for (int l = k - 2; l >= 0; --l) redi(k, l);
      ++k;
    }
  }
  return u;
}

namespace {

// Exact enumeration with all per-node arithmetic over scaled integers.
// From the rational Cholesky q of the reduced Gram (Q in lattice units),
// each level i carries
//   w_i = den_i x_i + sum_{j>i} u_ij x_j     (u_ij = q_ij den_i, integer)
//   contribution to K * Q: w_i^2 F_i          (K a global common scale)
// so the recursion only needs integer multiply, divide, and isqrt.  The
// recursion runs over __int128 whenever a-priori bounds show it cannot
// overflow, and over cpp_int otherwise.

using i128 = __int128;

i128 isqrt128(i128 n) {
  if (n <= 0) return 0;
  unsigned __int128 un = (unsigned __int128)n;
  unsigned __int128 x;
  if (un <= (unsigned __int128)UINT64_MAX) {
    x = (unsigned __int128)(uint64_t)std::sqrt((double)(uint64_t)un) + 2;
  } else {
    x = (unsigned __int128)1 << 64;
  }
  for (;;) {
    unsigned __int128 y = (x + un / x) / 2;
    if (y >= x) break;
    x = y;
  }
  while (x * x > un) --x;
  return (i128)x;
}

template <class W>
struct Scalar;

template <>
struct Scalar<i128> {
  static i128 from(const Int& v) {
    bool neg = v < 0;
    Int a = neg ? Int(-v) : v;
    unsigned long long hi = (unsigned long long)(a >> 64);
    unsigned long long lo = (unsigned long long)(a & Int(0xffffffffffffffffull));
    i128 r = ((i128)hi << 64) | (i128)lo;
    return neg ? -r : r;
  }
  static Int back(i128 v) {
    bool neg = v < 0;
    unsigned __int128 a = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    Int r = Int((unsigned long long)(a >> 64));
    r <<= 64;
    r += Int((unsigned long long)a);
    return neg ? Int(-r) : r;
  }
  static i128 sqrt(i128 v) { return isqrt128(v); }
  static long long to_ll(i128 v) { return (long long)v; }
};

template <>
struct Scalar<Int> {
  static Int from(const Int& v) { return v; }
  static Int back(const Int& v) { return v; }
  static Int sqrt(const Int& v) { return isqrt(v); }
  static long long to_ll(const Int& v) { return (long long)v; }
};

template <class W>
W fdiv_w(W a, W b) {
  W q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Enumerator {
  int d;
  std::vector<IntVec> u;     // u[i][j] for j > i
  IntVec den;                // den_i
  IntVec f;                  // F_i = K q_ii / den_i^2
  Int target_scaled;         // floor(K * bound)
  Int kscale;                // K
  std::vector<ShortVector>* out;
  const IntMat* umat;  // reduced -> original coordinates
  Rat scale;
  bool fits128 = false;

  void init(const std::vector<std::vector<Rat>>& q, const Rat& bound) {
    den.assign(d, 1);
    u.assign(d, IntVec(d, 0));
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j)
        den[i] = boost::multiprecision::lcm(den[i], quatgraphs::den(q[i][j]));
      for (int j = i + 1; j < d; ++j) u[i][j] = num(q[i][j] * Rat(den[i]));
    }
    kscale = 1;
    for (int i = 0; i < d; ++i)
      kscale = boost::multiprecision::lcm(
          kscale, quatgraphs::den(q[i][i]) * den[i] * den[i]);
    f.assign(d, 0);
    for (int i = 0; i < d; ++i) {
      Rat s = q[i][i] * Rat(kscale) / (Rat(den[i]) * Rat(den[i]));
      QG_CHECK(quatgraphs::den(s) == 1, "enumerator scaling");
      f[i] = num(s);
    }
    target_scaled = rat_floor(bound * Rat(kscale));

    // A-priori magnitude bounds decide whether __int128 is safe:
    //   |w_i| <= wmax_i,  |x_i| <= (wmax_i + S_i)/den_i,  S_i = sum |u_ij| X_j.
    IntVec xbound(d, 0), sbound(d, 0);
    Int worst = 0;
    bool ok = target_scaled >= 0;
    for (int i = d - 1; i >= 0 && ok; --i) {
      Int wmax = isqrt(target_scaled / f[i]);
      Int s = 0;
      for (int j = i + 1; j < d; ++j) s += abs(u[i][j]) * xbound[j];
      sbound[i] = s;
      xbound[i] = (wmax + s) / den[i] + 1;
      Int wabs = den[i] * xbound[i] + s;
      worst = std::max(worst, wabs);
      if (wabs > (Int(1) << 62)) ok = false;
      if (wabs * wabs * f[i] > (Int(1) << 124)) ok = false;
    }
    fits128 = ok && target_scaled < (Int(1) << 124);
  }

  void run() {
    if (fits128)
      run_typed<i128>();
    else
      run_typed<Int>();
  }

  template <class W>
  struct State {
    std::vector<std::vector<W>> uw;
    std::vector<W> denw, fw;
    std::vector<long long> x;
    std::vector<std::vector<W>> sw;
    std::vector<W> rr;
  };

  template <class W>
  void run_typed() {
    State<W> st;
    st.uw.assign(d, std::vector<W>(d, W(0)));
    st.denw.resize(d);
    st.fw.resize(d);
    for (int i = 0; i < d; ++i) {
      st.denw[i] = Scalar<W>::from(den[i]);
      st.fw[i] = Scalar<W>::from(f[i]);
      for (int j = i + 1; j < d; ++j) st.uw[i][j] = Scalar<W>::from(u[i][j]);
    }
    st.x.assign(d, 0);
    st.sw.assign(d + 1, std::vector<W>(d, W(0)));
    st.rr.assign(d + 1, W(0));
    st.rr[d - 1] = Scalar<W>::from(target_scaled);
    descend<W>(st, d - 1);
  }

  template <class W>
  void descend(State<W>& st, int i) {
    const std::vector<W>& s_here = st.sw[i + 1];
    W wmax = Scalar<W>::sqrt(st.rr[i] / st.fw[i]);
    W lo = -fdiv_w<W>(wmax + s_here[i], st.denw[i]);
    W hi = fdiv_w<W>(wmax - s_here[i], st.denw[i]);
    for (W t = lo; t <= hi; ++t) {
      W w = st.denw[i] * t + s_here[i];
      W used = w * w * st.fw[i];
      if (used > st.rr[i]) continue;
      st.x[i] = Scalar<W>::to_ll(t);
      if (i == 0) {
        bool zero = true;
        for (int j = 0; j < d; ++j)
          if (st.x[j] != 0) {
            zero = false;
            break;
          }
        if (zero) continue;
        ShortVector sv;
        sv.coords.assign(d, 0);
        for (int r2 = 0; r2 < d; ++r2) {
          long long acc = 0;
          for (int j = 0; j < d; ++j)
            if (st.x[j] != 0) acc += (long long)(*umat)[r2][j] * st.x[j];
          sv.coords[r2] = acc;
        }
        // K * Q(v) = budget actually spent = target - (remaining - used).
        Int qk = target_scaled - Scalar<W>::back(st.rr[i] - used);
        sv.value = scale * Rat(qk, kscale);
        out->push_back(std::move(sv));
      } else {
        st.rr[i - 1] = st.rr[i] - used;
        std::vector<W>& s_next = st.sw[i];
        const std::vector<W>& s_par = st.sw[i + 1];
        for (int j = 0; j < i; ++j) s_next[j] = s_par[j] + st.uw[j][i] * t;
        descend<W>(st, i - 1);
      }
    }
    st.x[i] = 0;
  }
};

}  // namespace

std::vector<ShortVector> vectors_up_to(const QuadraticLattice& L, const Rat& bound) {
  std::vector<ShortVector> out;
  if (L.dim == 0 || bound <= 0) return out;
  QG_CHECK(L.scale > 0, "lattice scale must be positive");

  IntMat g = L.gram;
  IntMat u = lll_reduce(g);

  // Cholesky of g/2 (values of Q in units of scale).
  int d = L.dim;
  std::vector<std::vector<Rat>> q(d, std::vector<Rat>(d, 0));
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      Rat s = Rat(g[i][j], 2);
      for (int k = 0; k < i; ++k) s -= q[k][k] * q[k][i] * q[k][j];
      if (j == i) {
        QG_CHECK(s > 0, "gram not positive definite");
        q[i][i] = s;
      } else {
        q[i][j] = s / q[i][i];
      }
    }
  }

  Enumerator e;
  e.d = d;
  e.out = &out;
  e.umat = &u;
  e.scale = L.scale;
  e.init(q, bound / L.scale);
  e.run();

  std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
    return a.coords < b.coords;
  });
  return out;
}

std::vector<std::vector<long long>> short_vectors(const QuadraticLattice& L,
                                                  const Rat& target) {
  std::vector<std::vector<long long>> out;
  if (target < 0) return out;
  if (target == 0) return out;  // zero vector excluded by contract
  for (auto& sv : vectors_up_to(L, target)) {
    if (sv.value == target) out.push_back(sv.coords);
  }
  return out;
}

std::vector<long long> theta_prefix(const QuadraticLattice& L, int upto) {
  std::vector<long long> counts(upto, 0);
  for (auto& sv : vectors_up_to(L, Rat(upto))) {
    QG_CHECK(den(sv.value) == 1, "non-integral value in theta prefix");
    Int v = num(sv.value);
    if (v >= 1 && v <= upto) counts[(size_t)v - 1]++;
  }
  return counts;
}

std::string gram_bytes(const QuadraticLattice& L) {
  std::string s = num(L.scale).str() + "/" + den(L.scale).str() + ":";
  for (auto& row : L.gram) {
    for (auto& v : row) {
      s += v.str();
      s += ',';
    }
    s += ';';
  }
  return s;
}

}  // namespace quatgraphs
