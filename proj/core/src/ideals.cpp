#include "quatgraphs/ideals.hpp"

#include <algorithm>

namespace quatgraphs {

namespace {

RatMat coords_to_ratmat(const IntMat& coords, const Int& den) {
  RatMat m(4, std::vector<Rat>(4));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[r][c] = Rat(coords[r][c], den);
  return m;
}

// Coordinates (order basis) of the product x*y from integer coordinate
// vectors, via the order multiplication table.
IntVec coord_mul(const MaximalOrder& O, const IntVec& x, const IntVec& y) {
  IntVec r(4, 0);
  for (int m = 0; m < 4; ++m) {
    if (x[m] == 0) continue;
    for (int n = 0; n < 4; ++n) {
      if (y[n] == 0) continue;
      Int f = x[m] * y[n];
      for (int l = 0; l < 4; ++l) r[l] += f * O.mult[m][n][l];
    }
  }
  return r;
}

IntVec coord_conj(const MaximalOrder& O, const IntVec& x) {
  IntVec r(4, 0);
  for (int m = 0; m < 4; ++m) {
    if (x[m] == 0) continue;
    for (int l = 0; l < 4; ++l) r[l] += x[m] * O.conj_mat[m][l];
  }
  return r;
}

bool right_stable(const MaximalOrder& O, const IntMat& coords, const Int& dn) {
  RatMat inv = rat_inverse(coords_to_ratmat(coords, dn));
  for (int m = 0; m < 4; ++m) {
    IntVec bm(4, 0);
    bm[m] = 1;
    for (int j = 0; j < 4; ++j) {
      IntVec col(4);
      for (int r = 0; r < 4; ++r) col[r] = coords[r][j];
      IntVec prod = coord_mul(O, col, bm);
      std::vector<Rat> v(4);
      for (int r = 0; r < 4; ++r) v[r] = Rat(prod[r], dn);
      auto c = rat_apply(inv, v);
      for (auto& e : c)
        if (den(e) != 1) return false;
    }
  }
  return true;
}

}  // namespace

RatQuat IdealLattice::basis_ambient(int j) const {
  RatQuat r;
  for (int m = 0; m < 4; ++m)
    if (coords[m][j] != 0)
      r = q_add(r, q_scale(Rat(coords[m][j], den), order->basis[m]));
  return r;
}

std::string IdealLattice::key() const {
  std::string s = den.str() + ":";
  for (auto& row : coords)
    for (auto& v : row) {
      s += v.str();
      s += ',';
    }
  return s;
}

IdealLattice unit_ideal(const MaximalOrder& O) {
  IdealLattice I;
  I.order = &O;
  I.coords = int_identity(4);
  I.den = 1;
  I.norm = 1;
  return I;
}

IdealLattice make_ideal(const MaximalOrder& O, const IntMat& gens, const Int& gden,
                        bool require_right_stable) {
  IdealLattice I;
  I.order = &O;
  I.coords = hnf_columns(gens);
  QG_CHECK(I.coords.size() == 4 && I.coords[0].size() == 4, "ideal lattice not full rank");
  I.den = gden;
  // Reduce denominator against content.
  Int g = gden;
  for (auto& row : I.coords)
    for (auto& v : row) g = boost::multiprecision::gcd(g, v);
  if (g > 1) {
    for (auto& row : I.coords)
      for (auto& v : row) v /= g;
    I.den /= g;
  }
  if (require_right_stable)
    QG_CHECK(right_stable(O, I.coords, I.den),
             "lattice is not right-stable under the order");
  // Generalized index [O : I] is det(coords/den); norm is its square root.
  Rat idx = Rat(bareiss_det(I.coords)) / Rat(boost::multiprecision::pow(I.den, 4));
  if (idx < 0) idx = -idx;
  bool ok = false;
  I.norm = exact_sqrt_rat(idx, ok);
  QG_CHECK(ok, "ideal index is not a perfect square");
  return I;
}

IdealLattice ideal_product(const IdealLattice& I, const IdealLattice& J) {
  QG_CHECK(I.order == J.order, "ideal product across different orders");
  const MaximalOrder& O = *I.order;
  IntMat gens(4, IntVec());
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      IntVec u(4), v(4);
      for (int r = 0; r < 4; ++r) {
        u[r] = I.coords[r][a];
        v[r] = J.coords[r][b];
      }
      IntVec prod = coord_mul(O, u, v);
      for (int r = 0; r < 4; ++r) gens[r].push_back(prod[r]);
    }
  IdealLattice P = make_ideal(O, gens, I.den * J.den, /*require_right_stable=*/false);
  QG_CHECK(P.norm == I.norm * J.norm, "product norm mismatch");
  return P;
}

IdealLattice ideal_conjugate(const IdealLattice& I) {
  const MaximalOrder& O = *I.order;
  IntMat gens(4, IntVec());
  for (int j = 0; j < 4; ++j) {
    IntVec col(4);
    for (int r = 0; r < 4; ++r) col[r] = I.coords[r][j];
    IntVec cc = coord_conj(O, col);
    for (int r = 0; r < 4; ++r) gens[r].push_back(cc[r]);
  }
  IdealLattice C = make_ideal(O, gens, I.den, /*require_right_stable=*/false);
  QG_CHECK(C.norm == I.norm, "conjugate norm mismatch");
  return C;
}

IdealLattice primitive_part(const IdealLattice& I) {
  Int g = 0;
  for (auto& row : I.coords)
    for (auto& v : row) g = boost::multiprecision::gcd(g, v);
  QG_CHECK(g > 0, "zero lattice");
  IdealLattice P;
  P.order = I.order;
  P.coords = I.coords;
  for (auto& row : P.coords)
    for (auto& v : row) v /= g;
  P.den = 1;
  // Content of the basis matrix was g/den; norms scale by content squared.
  Rat c = Rat(g, I.den);
  P.norm = I.norm / (c * c);
  return P;
}

IdealLattice ideal_scale(const IdealLattice& I, const Rat& s) {
  QG_CHECK(s != 0, "scaling by zero");
  IdealLattice S;
  S.order = I.order;
  Int n = num(s) < 0 ? -num(s) : num(s);
  Int d = den(s);
  S.coords = I.coords;
  for (auto& row : S.coords)
    for (auto& v : row) v *= n;
  S.den = I.den * d;
  Int g = S.den;
  for (auto& row : S.coords)
    for (auto& v : row) g = boost::multiprecision::gcd(g, v);
  if (g > 1) {
    for (auto& row : S.coords)
      for (auto& v : row) v /= g;
    S.den /= g;
  }
  S.coords = hnf_columns(S.coords);
  S.norm = I.norm * s * s;
  return S;
}

bool ideal_equal(const IdealLattice& I, const IdealLattice& J) {
  return I.order == J.order && I.den == J.den && int_eq(I.coords, J.coords);
}

QuadraticLattice norm_form(const IdealLattice& I) {
  const MaximalOrder& O = *I.order;
  QuadraticLattice L;
  L.dim = 4;
  L.gram.assign(4, IntVec(4, 0));
  Int d2 = I.den * I.den;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Int s = 0;
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
          s += I.coords[m][a] * I.coords[n][b] * O.trace_gram[m][n];
      // B(x_a, x_b) = trd(x_a conj(x_b)) / norm
      Rat v = Rat(s) / (Rat(d2) * I.norm);
      QG_CHECK(den(v) == 1, "norm form is not integral");
      L.gram[a][b] = num(v);
    }
  L.scale = 1;
  return L;
}

std::shared_ptr<MaximalOrder> left_order(const IdealLattice& I) {
  const MaximalOrder& O = *I.order;
  const QuaternionAlgebra& A = O.alg;
  // {x : x I <= I} = intersection over basis vectors v of I * v^{-1},
  // computed in ambient coordinates.
  auto lattice_of = [&](int k) {
    RatQuat vk_inv = q_inv(I.basis_ambient(k), A);
    RatMat m(4, std::vector<Rat>(4));
    for (int j = 0; j < 4; ++j) {
      RatQuat w = q_mul(I.basis_ambient(j), vk_inv, A);
      for (int r = 0; r < 4; ++r) m[r][j] = w.c[r];
    }
    return m;
  };
  auto intersect = [](const RatMat& m1, const RatMat& m2) {
    Int d = 1;
    for (auto& row : m1)
      for (auto& v : row) d = boost::multiprecision::lcm(d, den(v));
    for (auto& row : m2)
      for (auto& v : row) d = boost::multiprecision::lcm(d, den(v));
    IntMat stacked(4, IntVec(8));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        Rat a = m1[r][c] * Rat(d);
        Rat b = m2[r][c] * Rat(d);
        QG_CHECK(den(a) == 1 && den(b) == 1, "intersection scaling");
        stacked[r][c] = num(a);
        stacked[r][c + 4] = -num(b);
      }
    IntMat ker = int_kernel(stacked);  // 8 x r
    QG_CHECK(!ker.empty() && ker[0].size() == 4, "lattice intersection rank defect");
    RatMat out(4, std::vector<Rat>(4, 0));
    for (int col = 0; col < 4; ++col)
      for (int r = 0; r < 4; ++r) {
        Rat acc = 0;
        for (int c = 0; c < 4; ++c) acc += m1[r][c] * Rat(ker[c][col]);
        out[r][col] = acc;
      }
    return out;
  };

  RatMat acc = lattice_of(0);
  for (int k = 1; k < 4; ++k) acc = intersect(acc, lattice_of(k));

  // Canonical HNF basis in ambient coordinates.
  Int d = 1;
  for (auto& row : acc)
    for (auto& v : row) d = boost::multiprecision::lcm(d, den(v));
  IntMat m(4, IntVec(4));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[r][c] = num(acc[r][c] * Rat(d));
  m = hnf_columns(m);
  std::array<RatQuat, 4> basis;
  for (int col = 0; col < 4; ++col)
    for (int r = 0; r < 4; ++r) basis[col].c[r] = Rat(m[r][col], d);
  auto out = std::make_shared<MaximalOrder>(order_from_basis(A, basis));
  QG_CHECK(reduced_discriminant(A, out->basis) == A.p,
           "left order is not maximal");
  return out;
}

bool ideal_equivalent(const IdealLattice& I, const IdealLattice& J) {
  IdealLattice L = ideal_product(I, ideal_conjugate(J));
  return !short_vectors(norm_form(L), Rat(1)).empty();
}

std::vector<RatQuat> order_units(const MaximalOrder& O) {
  QuadraticLattice L;
  L.dim = 4;
  L.gram.assign(4, IntVec(4));
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) L.gram[m][n] = O.trace_gram[m][n];
  std::vector<RatQuat> units;
  for (auto& v : short_vectors(L, Rat(1))) {
    OrderElem e = {v[0], v[1], v[2], v[3]};
    units.push_back(O.to_ambient(e));
  }
  return units;
}

namespace {

struct ModQ {
  const MaximalOrder* O;
  long long q;
  using E = std::array<long long, 4>;

  long long red(long long v) const {
    v %= q;
    return v < 0 ? v + q : v;
  }
  E reduce(const E& x) const { return {red(x[0]), red(x[1]), red(x[2]), red(x[3])}; }
  E add(const E& x, const E& y) const {
    return reduce({x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]});
  }
  E sub(const E& x, const E& y) const {
    return reduce({x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]});
  }
  E scale(long long s, const E& x) const {
    s = red(s);
    return reduce({s * x[0], s * x[1], s * x[2], s * x[3]});
  }
  E mul(const E& x, const E& y) const {
    E r = {0, 0, 0, 0};
    for (int m = 0; m < 4; ++m) {
      if (x[m] == 0) continue;
      for (int n = 0; n < 4; ++n) {
        if (y[n] == 0) continue;
        long long f = red(x[m] * y[n]);
        for (int l = 0; l < 4; ++l) r[l] += f * red(O->mult[m][n][l]);
      }
    }
    return reduce(r);
  }
  bool is_zero(const E& x) const {
    return x[0] == 0 && x[1] == 0 && x[2] == 0 && x[3] == 0;
  }
  E one() const { return reduce({O->one_coords[0], O->one_coords[1], O->one_coords[2], O->one_coords[3]}); }
  bool is_scalar(const E& x) const {
    for (long long t = 0; t < q; ++t)
      if (is_zero(sub(x, scale(t, one())))) return true;
    return false;
  }
  long long inv(long long a) const {
    a = red(a);
    QG_CHECK(a != 0, "inverse of zero mod q");
    for (long long b = 1; b < q; ++b)
      if (red(a * b) == 1) return b;
    QG_CHECK(false, "no inverse found");
    return 0;
  }
};

}  // namespace

std::vector<IdealLattice> ideal_neighbors(const IdealLattice& I, long long q) {
  const MaximalOrder& O = *I.order;
  QG_REQUIRE(is_prime(q) && q != O.alg.p, "neighbor prime must differ from p");
  QG_REQUIRE(I.den == 1, "neighbors expect a primitive integral ideal");

  ModQ F{&O, q};
  using E = ModQ::E;

  // Element with split minimal polynomial mod q, then a rank-1 idempotent.
  E idem = {0, 0, 0, 0};
  bool found = false;
  for (long long c0 = 0; c0 < q && !found; ++c0)
    for (long long c1 = 0; c1 < q && !found; ++c1)
      for (long long c2 = 0; c2 < q && !found; ++c2)
        for (long long c3 = 0; c3 < q && !found; ++c3) {
          E z = {c0, c1, c2, c3};
          if (F.is_scalar(z)) continue;
          OrderElem ze = {c0, c1, c2, c3};
          long long t = F.red(oe_trd(O, ze));
          long long n = F.red(oe_nrd(O, ze));
          long long r1, r2;
          if (q == 2) {
            // x^2 - t x + n has distinct roots mod 2 only as x(x+1).
            if (t != 1 || n != 0) continue;
            r1 = 1;
            r2 = 0;
          } else {
            long long disc = F.red(t * t - 4 * n);
            long long s = -1;
            for (long long cand = 1; cand < q; ++cand)
              if (F.red(cand * cand) == disc) {
                s = cand;
                break;
              }
            if (s < 0) continue;  // not split or double root
            long long half = F.inv(2);
            r1 = F.red((t + s) * half);
            r2 = F.red((t - s) * half);
          }
          if (r1 == r2) continue;
          E e = F.scale(F.inv(F.red(r1 - r2)), F.sub(z, F.scale(r2, F.one())));
          QG_CHECK(F.is_zero(F.sub(F.mul(e, e), e)), "idempotent construction failed");
          if (F.is_zero(e) || F.is_zero(F.sub(e, F.one()))) continue;
          idem = e;
          found = true;
        }
  QG_CHECK(found, "no splitting element mod q (is q = p?)");

  E f = F.sub(F.one(), idem);
  E basis_mod[4];
  for (int m = 0; m < 4; ++m) {
    basis_mod[m] = {0, 0, 0, 0};
    basis_mod[m][m] = 1;
  }
  // Matrix units: E12 in e*A*f, E21 in f*A*e with E12 E21 = e.
  E e12 = {0, 0, 0, 0};
  bool got12 = false;
  for (int m = 0; m < 4 && !got12; ++m) {
    E w = F.mul(F.mul(idem, basis_mod[m]), f);
    if (!F.is_zero(w)) {
      e12 = w;
      got12 = true;
    }
  }
  QG_CHECK(got12, "no off-diagonal unit e*A*f");
  E e21 = {0, 0, 0, 0};
  bool got21 = false;
  for (int m = 0; m < 4 && !got21; ++m) {
    E y = F.mul(F.mul(f, basis_mod[m]), idem);
    if (F.is_zero(y)) continue;
    E x = F.mul(e12, y);  // lies in e*A*e = F_q e
    long long lambda = -1;
    for (int l = 0; l < 4; ++l)
      if (idem[l] != 0) {
        lambda = F.red(x[l] * F.inv(idem[l]));
        break;
      }
    if (lambda <= 0) continue;
    if (!F.is_zero(F.sub(x, F.scale(lambda, idem)))) continue;
    e21 = F.scale(F.inv(lambda), y);
    got21 = true;
  }
  QG_CHECK(got21, "no complementary unit f*A*e");
  QG_CHECK(F.is_zero(F.sub(F.mul(e12, e21), idem)), "matrix unit identity e12 e21 = e");
  QG_CHECK(F.is_zero(F.sub(F.mul(e21, e12), f)), "matrix unit identity e21 e12 = f");

  // Local generator of I mod q: x with x*O + qI = I.
  Int det_i = bareiss_det(I.coords);
  if (det_i < 0) det_i = -det_i;
  IntVec gen(4, 0);
  bool have_gen = false;
  for (long long c0 = 0; c0 < q && !have_gen; ++c0)
    for (long long c1 = 0; c1 < q && !have_gen; ++c1)
      for (long long c2 = 0; c2 < q && !have_gen; ++c2)
        for (long long c3 = 0; c3 < q && !have_gen; ++c3) {
          if (c0 == 0 && c1 == 0 && c2 == 0 && c3 == 0) continue;
          IntVec x(4, 0);
          long long cs[4] = {c0, c1, c2, c3};
          for (int j = 0; j < 4; ++j)
            for (int r = 0; r < 4; ++r) x[r] += cs[j] * I.coords[r][j];
          // span{x b_m, q I} must equal I.
          IntMat gens(4, IntVec());
          for (int m = 0; m < 4; ++m) {
            IntVec bm(4, 0);
            bm[m] = 1;
            IntVec prod = coord_mul(O, x, bm);
            for (int r = 0; r < 4; ++r) gens[r].push_back(prod[r]);
          }
          for (int j = 0; j < 4; ++j)
            for (int r = 0; r < 4; ++r) gens[r].push_back(q * I.coords[r][j]);
          IntMat h = hnf_columns(gens);
          Int d = bareiss_det(h);
          if (d < 0) d = -d;
          if (d == det_i) {
            gen = x;
            have_gen = true;
          }
        }
  QG_CHECK(have_gen, "no local generator found");

  // Lines (u : w) in P^1(F_q).
  std::vector<std::pair<long long, long long>> lines;
  for (long long w = 0; w < q; ++w) lines.push_back({1, w});
  lines.push_back({0, 1});

  std::vector<IdealLattice> out;
  for (auto [u, w] : lines) {
    E l1 = F.add(F.scale(u, idem), F.scale(w, e21));
    E l2 = F.add(F.scale(u, e12), F.scale(w, f));
    IntMat gens(4, IntVec());
    for (const E& l : {l1, l2}) {
      IntVec lv = {l[0], l[1], l[2], l[3]};
      IntVec prod = coord_mul(O, gen, lv);
      for (int r = 0; r < 4; ++r) gens[r].push_back(prod[r]);
    }
    for (int j = 0; j < 4; ++j)
      for (int r = 0; r < 4; ++r) gens[r].push_back(q * I.coords[r][j]);
    IdealLattice J = make_ideal(O, gens, 1);
    QG_CHECK(J.norm == Rat(q) * I.norm, "neighbor norm is not q * norm(I)");
    out.push_back(primitive_part(J));
  }
  return out;
}

}  // namespace quatgraphs
