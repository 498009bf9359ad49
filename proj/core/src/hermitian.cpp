#include "quatgraphs/hermitian.hpp"

#include <algorithm>

namespace quatgraphs {

OrderMat om_identity(const MaximalOrder& O, int g) {
  OrderMat m;
  m.order = &O;
  m.g = g;
  m.entries.assign((size_t)g * g, OrderElem{0, 0, 0, 0});
  for (int i = 0; i < g; ++i) m.at(i, i) = O.one_coords;
  return m;
}

OrderMat om_mul(const OrderMat& x, const OrderMat& y) {
  QG_CHECK(x.order == y.order && x.g == y.g, "matrix shape mismatch");
  const MaximalOrder& O = *x.order;
  OrderMat r;
  r.order = x.order;
  r.g = x.g;
  r.entries.assign((size_t)x.g * x.g, OrderElem{0, 0, 0, 0});
  for (int i = 0; i < x.g; ++i)
    for (int k = 0; k < x.g; ++k) {
      if (oe_is_zero(x.at(i, k))) continue;
      for (int j = 0; j < x.g; ++j)
        r.at(i, j) = oe_add(r.at(i, j), oe_mul(O, x.at(i, k), y.at(k, j)));
    }
  return r;
}

OrderMat om_dagger(const OrderMat& x) {
  const MaximalOrder& O = *x.order;
  OrderMat r;
  r.order = x.order;
  r.g = x.g;
  r.entries.assign((size_t)x.g * x.g, OrderElem{0, 0, 0, 0});
  for (int i = 0; i < x.g; ++i)
    for (int j = 0; j < x.g; ++j) r.at(j, i) = oe_conj(O, x.at(i, j));
  return r;
}

bool oe_scalar(const MaximalOrder& O, const OrderElem& x, long long* t) {
  // x scalar iff conj(x) = x, and then x = (trd x / 2) * 1.
  if (oe_conj(O, x) != x) return false;
  long long tr = oe_trd(O, x);
  if (tr % 2 != 0) return false;
  if (oe_scale(tr / 2, O.one_coords) != x) return false;
  if (t) *t = tr / 2;
  return true;
}

bool is_hermitian(const OrderMat& m) {
  const MaximalOrder& O = *m.order;
  for (int i = 0; i < m.g; ++i) {
    long long t;
    if (!oe_scalar(O, m.at(i, i), &t)) return false;
    for (int j = i + 1; j < m.g; ++j)
      if (m.at(j, i) != oe_conj(O, m.at(i, j))) return false;
  }
  return true;
}

HermitianForm make_hermitian(OrderMat m) {
  QG_REQUIRE(is_hermitian(m), "matrix is not hermitian over the order");
  return HermitianForm{std::move(m)};
}

HermitianForm identity_form(const MaximalOrder& O, int g) {
  return HermitianForm{om_identity(O, g)};
}

QuadraticLattice trace_gram(const HermitianForm& H) {
  const MaximalOrder& O = H.order();
  const int g = H.g();
  QuadraticLattice L;
  L.dim = 4 * g;
  L.gram.assign(L.dim, IntVec(L.dim, 0));
  // Basis of O^g: slot s gets order basis vector b_m; index = 4 s + m.
  OrderElem conj_basis[4];
  for (int m = 0; m < 4; ++m)
    for (int l = 0; l < 4; ++l) conj_basis[m][l] = O.conj_mat[m][l];
  OrderElem unit[4];
  for (int m = 0; m < 4; ++m) {
    unit[m] = {0, 0, 0, 0};
    unit[m][m] = 1;
  }
  for (int s = 0; s < g; ++s)
    for (int t = 0; t < g; ++t) {
      const OrderElem& h = H.mat.at(s, t);
      if (oe_is_zero(h)) continue;
      for (int m = 0; m < 4; ++m) {
        OrderElem left = oe_mul(O, conj_basis[m], h);
        for (int n = 0; n < 4; ++n) {
          long long v = oe_trd(O, oe_mul(O, left, unit[n]));
          L.gram[4 * s + m][4 * t + n] = v;
        }
      }
    }
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j)
      QG_CHECK(L.gram[i][j] == L.gram[j][i], "trace gram not symmetric");
  return L;
}

namespace {

using QuatRatMat = std::vector<std::vector<RatQuat>>;

QuatRatMat to_ambient_matrix(const OrderMat& M) {
  const MaximalOrder& O = *M.order;
  QuatRatMat a(M.g, std::vector<RatQuat>(M.g));
  for (int i = 0; i < M.g; ++i)
    for (int j = 0; j < M.g; ++j) a[i][j] = O.to_ambient(M.at(i, j));
  return a;
}

Rat regular_rep_det(const QuatRatMat& m, const QuaternionAlgebra& A) {
  int g = (int)m.size();
  RatMat big(4 * g, std::vector<Rat>(4 * g, 0));
  for (int s = 0; s < g; ++s)
    for (int t = 0; t < g; ++t) {
      RatMat block = left_mult_matrix(m[s][t], A);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) big[4 * s + r][4 * t + c] = block[r][c];
    }
  return rat_det(big);
}

// Recursive pivot expansion of the hermitian norm over the skew field:
// HNm(H) = a * HNm(C - col * (1/a) * row) pivoting on the scalar a = H[0][0].
// Usable only with strictly positive pivots, i.e. on the positive-definite
// domain; anything else falls back to the regular representation alone.
Rat moore_norm(const QuatRatMat& h, const QuaternionAlgebra& A, bool& usable) {
  int g = (int)h.size();
  if (g == 0) {
    usable = true;
    return 1;
  }
  const RatQuat& a = h[0][0];
  if (!(a.c[1] == 0 && a.c[2] == 0 && a.c[3] == 0) || a.c[0] <= 0) {
    usable = false;
    return 0;
  }
  Rat av = a.c[0];
  QuatRatMat s(g - 1, std::vector<RatQuat>(g - 1));
  for (int i = 1; i < g; ++i)
    for (int j = 1; j < g; ++j)
      s[i - 1][j - 1] =
          q_sub(h[i][j], q_scale(Rat(1) / av, q_mul(h[i][0], h[0][j], A)));
  Rat rest = moore_norm(s, A, usable);
  return av * rest;
}

}  // namespace

Int haupt_norm(const HermitianForm& H) {
  const QuaternionAlgebra& A = H.order().alg;
  QuatRatMat amb = to_ambient_matrix(H.mat);
  Rat d = regular_rep_det(amb, A);
  QG_REQUIRE(den(d) == 1 && d >= 0, "regular representation determinant not a nonnegative integer");
  bool ok = false;
  Int hn = exact_fourth_root(num(d), ok);
  QG_REQUIRE(ok, "determinant is not a perfect fourth power; input not hermitian over the order");
  if (H.g() <= 3) {
    bool usable = false;
    Rat mv = moore_norm(amb, A, usable);
    if (usable)
      QG_CHECK(mv == Rat(hn), "haupt norm algorithms disagree");
  }
  return hn;
}

Rat matrix_reduced_norm(const OrderMat& M) {
  const QuaternionAlgebra& A = M.order->alg;
  Rat d = regular_rep_det(to_ambient_matrix(M), A);
  bool ok = false;
  Rat s = exact_sqrt_rat(d, ok);
  QG_CHECK(ok, "regular representation determinant not a perfect square");
  return s;
}

bool is_positive_definite(const HermitianForm& H) {
  if (!is_hermitian(H.mat)) return false;
  QuadraticLattice L = trace_gram(H);
  for (const Int& minor : leading_minors(L.gram))
    if (minor <= 0) return false;
  return true;
}

HermitianForm transform(const HermitianForm& H, const OrderMat& U) {
  OrderMat r = om_mul(om_mul(om_dagger(U), H.mat), U);
  return make_hermitian(std::move(r));
}

OrderMat unimodular_inverse(const HermitianForm& H) {
  QG_REQUIRE(haupt_norm(H) == 1, "inverse requires haupt norm 1");
  const MaximalOrder& O = H.order();
  const QuaternionAlgebra& A = O.alg;
  int g = H.g();
  // Gauss-Jordan over the skew field.
  QuatRatMat m = to_ambient_matrix(H.mat);
  QuatRatMat inv(g, std::vector<RatQuat>(g));
  for (int i = 0; i < g; ++i) inv[i][i] = RatQuat(Rat(1));
  for (int col = 0; col < g; ++col) {
    int piv = -1;
    for (int r = col; r < g; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    QG_CHECK(piv >= 0, "singular hermitian matrix");
    std::swap(m[col], m[piv]);
    std::swap(inv[col], inv[piv]);
    RatQuat d = q_inv(m[col][col], A);
    for (int j = 0; j < g; ++j) {
      m[col][j] = q_mul(d, m[col][j], A);
      inv[col][j] = q_mul(d, inv[col][j], A);
    }
    for (int r = 0; r < g; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      RatQuat f = m[r][col];
      for (int j = 0; j < g; ++j) {
        m[r][j] = q_sub(m[r][j], q_mul(f, m[col][j], A));
        inv[r][j] = q_sub(inv[r][j], q_mul(f, inv[col][j], A));
      }
    }
  }
  OrderMat out;
  out.order = &O;
  out.g = g;
  out.entries.assign((size_t)g * g, OrderElem{0, 0, 0, 0});
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      OrderElem c;
      QG_CHECK(O.contains(inv[i][j], &c), "unimodular inverse left the order");
      out.at(i, j) = c;
    }
  // H * H^{-1} = Id, exact.
  QG_CHECK(om_mul(H.mat, out) == om_identity(O, g), "inverse verification failed");
  return out;
}

std::vector<OrderElem> herm_apply(const HermitianForm& H, const std::vector<OrderElem>& v) {
  const MaximalOrder& O = H.order();
  int g = H.g();
  std::vector<OrderElem> w(g, OrderElem{0, 0, 0, 0});
  for (int s = 0; s < g; ++s)
    for (int t = 0; t < g; ++t) {
      if (oe_is_zero(H.mat.at(s, t)) || oe_is_zero(v[t])) continue;
      w[s] = oe_add(w[s], oe_mul(O, H.mat.at(s, t), v[t]));
    }
  return w;
}

OrderElem herm_inner(const MaximalOrder& O, const std::vector<OrderElem>& u,
                     const std::vector<OrderElem>& w) {
  OrderElem r = {0, 0, 0, 0};
  for (size_t s = 0; s < u.size(); ++s) {
    if (oe_is_zero(u[s]) || oe_is_zero(w[s])) continue;
    r = oe_add(r, oe_mul(O, oe_conj(O, u[s]), w[s]));
  }
  return r;
}

long long herm_value(const HermitianForm& H, const std::vector<OrderElem>& v) {
  OrderElem x = herm_inner(H.order(), v, herm_apply(H, v));
  long long t = 0;
  QG_CHECK(oe_scalar(H.order(), x, &t), "v^dagger H v is not scalar");
  return t;
}

}  // namespace quatgraphs
