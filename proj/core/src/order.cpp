#include "quatgraphs/order.hpp"

#include <algorithm>

namespace quatgraphs {

RatQuat MaximalOrder::to_ambient(const OrderElem& x) const {
  RatQuat r;
  for (int m = 0; m < 4; ++m)
    if (x[m] != 0) r = q_add(r, q_scale(Rat(x[m]), basis[m]));
  return r;
}

std::array<Rat, 4> MaximalOrder::coords_of(const RatQuat& x) const {
  std::vector<Rat> v(x.c.begin(), x.c.end());
  std::vector<Rat> c = rat_apply(basis_mat_inv, v);
  return {c[0], c[1], c[2], c[3]};
}

bool MaximalOrder::contains(const RatQuat& x, OrderElem* coords) const {
  auto c = coords_of(x);
  for (int m = 0; m < 4; ++m)
    if (den(c[m]) != 1) return false;
  if (coords) {
    for (int m = 0; m < 4; ++m) (*coords)[m] = (long long)num(c[m]);
  }
  return true;
}

OrderElem oe_add(const OrderElem& x, const OrderElem& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}

OrderElem oe_sub(const OrderElem& x, const OrderElem& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}

OrderElem oe_neg(const OrderElem& x) { return {-x[0], -x[1], -x[2], -x[3]}; }

OrderElem oe_scale(long long s, const OrderElem& x) {
  return {s * x[0], s * x[1], s * x[2], s * x[3]};
}

OrderElem oe_mul(const MaximalOrder& O, const OrderElem& x, const OrderElem& y) {
  OrderElem r = {0, 0, 0, 0};
  for (int m = 0; m < 4; ++m) {
    if (x[m] == 0) continue;
    for (int n = 0; n < 4; ++n) {
      if (y[n] == 0) continue;
      long long f = x[m] * y[n];
      const long long* c = O.mult[m][n];
      r[0] += f * c[0];
      r[1] += f * c[1];
      r[2] += f * c[2];
      r[3] += f * c[3];
    }
  }
  return r;
}

OrderElem oe_conj(const MaximalOrder& O, const OrderElem& x) {
  OrderElem r = {0, 0, 0, 0};
  for (int m = 0; m < 4; ++m) {
    if (x[m] == 0) continue;
    for (int l = 0; l < 4; ++l) r[l] += x[m] * O.conj_mat[m][l];
  }
  return r;
}

long long oe_trd(const MaximalOrder& O, const OrderElem& x) {
  long long t = 0;
  for (int m = 0; m < 4; ++m) t += x[m] * O.trd_vec[m];
  return t;
}

long long oe_nrd(const MaximalOrder& O, const OrderElem& x) {
  long long s = 0;
  for (int m = 0; m < 4; ++m) {
    if (x[m] == 0) continue;
    for (int n = 0; n < 4; ++n) s += x[m] * x[n] * O.trace_gram[m][n];
  }
  QG_CHECK(s % 2 == 0, "odd norm doubling");
  return s / 2;
}

namespace {

RatMat basis_matrix(const std::array<RatQuat, 4>& basis) {
  RatMat m(4, std::vector<Rat>(4));
  for (int col = 0; col < 4; ++col)
    for (int row = 0; row < 4; ++row) m[row][col] = basis[col].c[row];
  return m;
}

Rat trace_pair(const RatQuat& x, const RatQuat& y, const QuaternionAlgebra& A) {
  return q_trd(q_mul(x, q_conj(y), A));
}

struct Lattice4 {
  // Columns of (1/denom) * coords span the lattice in ambient coordinates.
  IntMat coords;  // 4x4
  Int denom = 1;

  std::array<RatQuat, 4> to_basis() const {
    std::array<RatQuat, 4> b;
    for (int col = 0; col < 4; ++col) {
      for (int row = 0; row < 4; ++row)
        b[col].c[row] = Rat(coords[row][col], denom);
    }
    return b;
  }
};

Lattice4 canonicalize(const IntMat& gens, const Int& denom) {
  IntMat h = hnf_columns(gens);
  QG_CHECK(!h.empty() && h[0].size() == 4, "lattice rank not 4");
  Lattice4 l;
  l.coords = h;
  l.denom = denom;
  // Reduce the common denominator.
  Int g = denom;
  for (auto& row : l.coords)
    for (auto& v : row) g = boost::multiprecision::gcd(g, v);
  if (g > 1) {
    for (auto& row : l.coords)
      for (auto& v : row) v /= g;
    l.denom /= g;
  }
  return l;
}

bool lattice_contains(const Lattice4& L, const RatQuat& x, const RatMat& inv_cols) {
  std::vector<Rat> v(x.c.begin(), x.c.end());
  auto c = rat_apply(inv_cols, v);
  for (auto& e : c)
    if (den(e) != 1) return false;
  return true;
}

RatMat lattice_inverse(const Lattice4& L) {
  RatMat m(4, std::vector<Rat>(4));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[r][c] = Rat(L.coords[r][c], L.denom);
  return rat_inverse(m);
}

// Closes the lattice spanned by gens under multiplication.  Fails (returns
// false) if the span keeps growing past a sanity bound, which happens when a
// candidate generator is not integral over the order.
bool multiplicative_closure(const QuaternionAlgebra& A, Lattice4& L) {
  for (int round = 0; round < 16; ++round) {
    auto basis = L.to_basis();
    RatMat inv = lattice_inverse(L);
    std::vector<RatQuat> missing;
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        RatQuat prod = q_mul(basis[m], basis[n], A);
        if (!lattice_contains(L, prod, inv)) missing.push_back(prod);
      }
    if (missing.empty()) return true;
    // Adjoin the missing products and re-span.
    Int newden = L.denom;
    for (auto& q : missing)
      for (auto& c : q.c) newden = boost::multiprecision::lcm(newden, den(c));
    IntMat gens(4, IntVec());
    for (int col = 0; col < 4; ++col)
      for (int row = 0; row < 4; ++row)
        gens[row].push_back(L.coords[row][col] * (newden / L.denom));
    for (auto& q : missing)
      for (int row = 0; row < 4; ++row) {
        Rat scaled = q.c[row] * Rat(newden);
        QG_CHECK(den(scaled) == 1, "closure scaling");
        gens[row].push_back(num(scaled));
      }
    L = canonicalize(gens, newden);
    if (L.denom > Int(1) << 62) return false;
  }
  return false;
}

Int lattice_disc(const QuaternionAlgebra& A, const Lattice4& L, bool* integral_gram) {
  auto basis = L.to_basis();
  RatMat gram(4, std::vector<Rat>(4));
  bool intg = true;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      gram[m][n] = trace_pair(basis[m], basis[n], A);
      if (den(gram[m][n]) != 1) intg = false;
    }
  if (integral_gram) *integral_gram = intg;
  Rat d = rat_det(gram);
  if (d < 0) d = -d;
  bool ok = false;
  Rat s = exact_sqrt_rat(d, ok);
  QG_CHECK(ok, "trace-form determinant is not a perfect square");
  QG_CHECK(den(s) == 1, "fractional reduced discriminant");
  return num(s);
}

}  // namespace

Int reduced_discriminant(const QuaternionAlgebra& A, const std::array<RatQuat, 4>& basis) {
  RatMat gram(4, std::vector<Rat>(4));
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) gram[m][n] = trace_pair(basis[m], basis[n], A);
  Rat d = rat_det(gram);
  if (d < 0) d = -d;
  bool ok = false;
  Rat s = exact_sqrt_rat(d, ok);
  QG_CHECK(ok && den(s) == 1, "discriminant not a perfect square integer");
  return num(s);
}

MaximalOrder maximal_order(const QuaternionAlgebra& A) {
  QG_REQUIRE(A.p >= 2 && A.a < 0 && A.b < 0, "not a definite table algebra");

  Lattice4 L;
  L.coords = int_identity(4);
  L.denom = 1;

  Int disc = lattice_disc(A, L, nullptr);
  const Int target = A.p;

  while (disc != target) {
    QG_CHECK(disc % target == 0, "discriminant lost the ramified prime");
    Int excess = disc / target;
    long long q = prime_factors((long long)excess).front();

    bool improved = false;
    for (int e = 1; e <= 2 && !improved; ++e) {
      long long mod = 1;
      for (int i = 0; i < e; ++i) mod *= q;
      auto basis = L.to_basis();
      // Candidates x = (sum c_m b_m) / q^e, canonical lexicographic order.
      for (long long c0 = 0; c0 < mod && !improved; ++c0)
        for (long long c1 = 0; c1 < mod && !improved; ++c1)
          for (long long c2 = 0; c2 < mod && !improved; ++c2)
            for (long long c3 = 0; c3 < mod && !improved; ++c3) {
              if (c0 % q == 0 && c1 % q == 0 && c2 % q == 0 && c3 % q == 0)
                continue;
              RatQuat x;
              long long cs[4] = {c0, c1, c2, c3};
              for (int m = 0; m < 4; ++m)
                x = q_add(x, q_scale(Rat(cs[m], mod), basis[m]));
              if (den(q_trd(x)) != 1 || den(q_nrd(x, A)) != 1) continue;
              // Span O + Zx and close under multiplication.
              Int newden = L.denom * mod;
              IntMat gens(4, IntVec());
              for (int col = 0; col < 4; ++col)
                for (int row = 0; row < 4; ++row)
                  gens[row].push_back(L.coords[row][col] * mod);
              for (int row = 0; row < 4; ++row) {
                Rat scaled = x.c[row] * Rat(newden);
                QG_CHECK(den(scaled) == 1, "candidate scaling");
                gens[row].push_back(num(scaled));
              }
              Lattice4 trial = canonicalize(gens, newden);
              if (!multiplicative_closure(A, trial)) continue;
              bool gram_integral = false;
              Int trial_disc = lattice_disc(A, trial, &gram_integral);
              if (!gram_integral || trial_disc >= disc) continue;
              L = trial;
              disc = trial_disc;
              improved = true;
            }
    }
    QG_CHECK(improved, "order saturation stalled above the target discriminant");
  }

  return order_from_basis(A, L.to_basis());
}

MaximalOrder order_from_basis(const QuaternionAlgebra& A,
                              const std::array<RatQuat, 4>& basis) {
  MaximalOrder O;
  O.alg = A;
  O.basis = basis;
  O.basis_mat = basis_matrix(O.basis);
  O.basis_mat_inv = rat_inverse(O.basis_mat);

  // Integer tables.  Closure guarantees integrality of every entry.
  for (int m = 0; m < 4; ++m) {
    Rat t = q_trd(O.basis[m]);
    QG_CHECK(den(t) == 1, "non-integral reduced trace on basis");
    O.trd_vec[m] = (long long)num(t);
    OrderElem cc;
    QG_CHECK(O.contains(q_conj(O.basis[m]), &cc), "order not closed under conjugation");
    for (int l = 0; l < 4; ++l) O.conj_mat[m][l] = cc[l];
    for (int n = 0; n < 4; ++n) {
      OrderElem pc;
      QG_CHECK(O.contains(q_mul(O.basis[m], O.basis[n], A), &pc),
               "order not closed under multiplication");
      for (int l = 0; l < 4; ++l) O.mult[m][n][l] = pc[l];
      Rat g = trace_pair(O.basis[m], O.basis[n], A);
      QG_CHECK(den(g) == 1, "non-integral trace gram");
      O.trace_gram[m][n] = (long long)num(g);
    }
  }
  QG_CHECK(O.contains(RatQuat(Rat(1)), &O.one_coords), "1 not in order");
  return O;
}

}  // namespace quatgraphs
