#include "quatgraphs/spectral.hpp"

#include <algorithm>

namespace quatgraphs {

namespace {

RatPoly trim(RatPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int degree(const RatPoly& p) { return (int)p.size() - 1; }

Rat eval(const RatPoly& p, const Rat& x) {
  Rat r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(Rat(Int(i)) * p[i]);
  return trim(d);
}

// Remainder of u by v (v nonzero).
RatPoly poly_rem(RatPoly u, const RatPoly& v) {
  QG_CHECK(!v.empty(), "division by zero polynomial");
  while ((int)u.size() >= (int)v.size() && !u.empty()) {
    Rat f = u.back() / v.back();
    size_t off = u.size() - v.size();
    for (size_t i = 0; i < v.size(); ++i) u[off + i] -= f * v[i];
    u = trim(std::move(u));
  }
  return u;
}

RatPoly make_monic(RatPoly p) {
  p = trim(std::move(p));
  if (p.empty()) return p;
  Rat lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    RatPoly r = poly_rem(a, b);
    a = std::move(b);
    b = make_monic(std::move(r));
  }
  return make_monic(std::move(a));
}

RatPoly poly_divide(const RatPoly& u, const RatPoly& v) {
  RatPoly rem = u, q(u.size(), Rat(0));
  QG_CHECK(!trim(v).empty(), "division by zero polynomial");
  while ((int)rem.size() >= (int)v.size() && !trim(rem).empty()) {
    rem = trim(std::move(rem));
    if ((int)rem.size() < (int)v.size()) break;
    Rat f = rem.back() / v.back();
    size_t off = rem.size() - v.size();
    q[off] = f;
    for (size_t i = 0; i < v.size(); ++i) rem[off + i] -= f * v[i];
  }
  QG_CHECK(trim(rem).empty(), "inexact polynomial division");
  return trim(std::move(q));
}

RatPoly squarefree_part(const RatPoly& f) {
  RatPoly g = poly_gcd(f, derivative(f));
  if (degree(g) <= 0) return make_monic(f);
  return make_monic(poly_divide(f, g));
}

int sign_of(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Scale by a positive rational only; Sturm chains must keep signs.
RatPoly normalize_positive(RatPoly p) {
  p = trim(std::move(p));
  if (p.empty()) return p;
  Rat lead = p.back();
  if (lead < 0) lead = -lead;
  for (auto& c : p) c /= lead;
  return p;
}

std::vector<RatPoly> sturm_chain(const RatPoly& f) {
  std::vector<RatPoly> chain;
  chain.push_back(normalize_positive(f));
  RatPoly d = derivative(chain.back());
  d = trim(std::move(d));
  if (d.empty()) return chain;
  chain.push_back(normalize_positive(std::move(d)));
  for (;;) {
    RatPoly r = poly_rem(chain[chain.size() - 2], chain.back());
    r = trim(std::move(r));
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(normalize_positive(std::move(r)));
  }
  return chain;
}

int variations_at(const std::vector<RatPoly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const RatPoly& p : chain) {
    int s = sign_of(eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int variations_at_infinity(const std::vector<RatPoly>& chain, int sign_dir) {
  // sign_dir = +1 for +inf, -1 for -inf.
  int var = 0, prev = 0;
  for (const RatPoly& p : chain) {
    if (p.empty()) continue;
    int s = sign_of(p.back());
    if (sign_dir < 0 && (degree(p) % 2 == 1)) s = -s;
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Distinct roots of squarefree monic f in the open interval (a, b), with
// f(a) != 0 and f(b) != 0.
long long open_interval_count(const RatPoly& f, const Rat& a, const Rat& b) {
  if (degree(f) <= 0) return 0;
  auto chain = sturm_chain(f);
  return variations_at(chain, a) - variations_at(chain, b);
}

// Divides out a rational root exactly once (root must be simple here).
RatPoly remove_root(const RatPoly& f, const Rat& r) {
  RatPoly lin = {-r, Rat(1)};
  return poly_divide(f, lin);
}

}  // namespace

long long sturm_count_interval(const RatPoly& f_in, const Rat& a, const Rat& b) {
  if (a >= b) return 0;
  RatPoly f = squarefree_part(trim(f_in));
  if (degree(f) <= 0) return 0;
  long long count = 0;
  if (eval(f, b) == 0) {
    ++count;  // (a, b] is closed on the right
    f = remove_root(f, b);
  }
  if (eval(f, a) == 0) f = remove_root(f, a);  // a itself is excluded
  if (degree(f) <= 0) return count;
  return count + open_interval_count(f, a, b);
}

long long sturm_count_interval_multiplicity(const RatPoly& f_in, const Rat& a,
                                            const Rat& b) {
  // Roots of multiplicity >= k are the roots of the k-th gcd iterate;
  // summing distinct counts over the chain weights each root by its
  // multiplicity.
  RatPoly f = make_monic(trim(f_in));
  long long total = 0;
  while (degree(f) >= 1) {
    total += sturm_count_interval(f, a, b);
    f = poly_gcd(f, derivative(f));
  }
  return total;
}

long long sturm_count_real(const RatPoly& f_in) {
  RatPoly f = squarefree_part(trim(f_in));
  if (degree(f) <= 0) return 0;
  auto chain = sturm_chain(f);
  return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

long long sturm_count_real_multiplicity(const RatPoly& f_in) {
  RatPoly f = make_monic(trim(f_in));
  long long total = 0;
  while (degree(f) >= 1) {
    total += sturm_count_real(f);
    f = poly_gcd(f, derivative(f));
  }
  return total;
}

IntPoly char_poly(const IntMat& m) {
  const int h = (int)m.size();
  // Interpolate det(t I - m) at t = 0..h.
  std::vector<Rat> values;
  for (int t = 0; t <= h; ++t) {
    IntMat a(h, IntVec(h));
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j) a[i][j] = (i == j ? Int(t) - m[i][j] : -m[i][j]);
    values.push_back(Rat(bareiss_det(a)));
  }
  RatPoly acc(h + 1, Rat(0));
  for (int t = 0; t <= h; ++t) {
    // Lagrange basis polynomial for node t.
    RatPoly basis = {Rat(1)};
    Rat denom = 1;
    for (int s = 0; s <= h; ++s) {
      if (s == t) continue;
      RatPoly next(basis.size() + 1, Rat(0));
      for (size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i];
        next[i] -= Rat(s) * basis[i];
      }
      basis = std::move(next);
      denom *= Rat(t - s);
    }
    Rat f = values[t] / denom;
    for (size_t i = 0; i < basis.size(); ++i) acc[i] += f * basis[i];
  }
  IntPoly out;
  for (const Rat& c : acc) {
    QG_CHECK(den(c) == 1, "characteristic polynomial has fractional coefficient");
    out.push_back(num(c));
  }
  QG_CHECK((int)out.size() == h + 1 && out.back() == 1,
           "characteristic polynomial is not monic of degree h");
  return out;
}

Int poly_eval(const IntPoly& p, const Int& x) {
  Int r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

IntPoly poly_divide_linear(const IntPoly& p, const Int& root) {
  QG_REQUIRE(p.size() >= 2, "degree too small");
  IntPoly q(p.size() - 1);
  Int carry = p.back();
  for (size_t i = p.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = p[i] + carry * root;
  }
  QG_REQUIRE(carry == 0, "linear factor does not divide");
  return q;
}

SpectralReport ramanujan_verdict(const BrandtMatrix& B) {
  const int h = B.h;
  SpectralReport rep;
  rep.g = B.g;
  rep.ell = B.n;
  rep.p = B.p;
  rep.h = h;

  // Weighted symmetry certifies a similarity to a symmetric matrix, hence
  // real eigenvalues; refuse to proceed without it.
  QG_REQUIRE((int)B.weights.size() == h, "missing weights");
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      QG_REQUIRE(Int(B.weights[j]) * B.entries[i][j] ==
                     Int(B.weights[i]) * B.entries[j][i],
                 "weighted symmetry fails; realness not certified");

  Int k = B.row_sum(0);
  for (int i = 1; i < h; ++i)
    QG_REQUIRE(B.row_sum(i) == k, "row sums are not constant");
  QG_CHECK(k > 0 && k <= Int(1) << 62, "degree out of range");
  rep.k = (long long)k;

  rep.charpoly = char_poly(B.entries);
  QG_CHECK(poly_eval(rep.charpoly, k) == 0, "trivial eigenvalue missing");

  IntPoly q = rep.charpoly;
  rep.trivial_multiplicity = 0;
  while (poly_eval(q, k) == 0 && q.size() >= 2) {
    q = poly_divide_linear(q, k);
    ++rep.trivial_multiplicity;
  }
  QG_CHECK(rep.trivial_multiplicity == 1,
           "trivial eigenvalue is not simple (graph disconnected?)");

  const int degq = (int)q.size() - 1;
  if (degq == 0) {
    rep.ramanujan = true;
    return rep;
  }

  RatPoly qr;
  for (const Int& c : q) qr.push_back(Rat(c));
  QG_CHECK(sturm_count_real_multiplicity(qr) == degq,
           "nontrivial spectrum is not totally real");

  // s(y) with s(x^2) = +- q(x) q(-x);
  RatPoly qneg = qr;
  for (size_t i = 1; i < qneg.size(); i += 2) qneg[i] = -qneg[i];
  RatPoly prod(qr.size() + qneg.size() - 1, Rat(0));
  for (size_t i = 0; i < qr.size(); ++i)
    for (size_t j = 0; j < qneg.size(); ++j) prod[i + j] += qr[i] * qneg[j];
  RatPoly s;
  for (size_t i = 0; i < prod.size(); ++i) {
    if (i % 2 == 0)
      s.push_back(prod[i]);
    else
      QG_CHECK(prod[i] == 0, "q(x)q(-x) has an odd coefficient");
  }
  s = trim(std::move(s));
  QG_CHECK((int)s.size() == degq + 1, "even part has wrong degree");

  const Rat bound = Rat(4) * (Rat(k) - 1);
  // All roots of s are squares of real eigenvalues, hence >= 0; the left
  // endpoint -1 makes the count effectively over [0, bound].
  long long inside = sturm_count_interval_multiplicity(s, Rat(-1), bound);
  rep.ramanujan = (inside == degq);

  // Certified enclosure of the largest nontrivial |lambda| = sqrt(max root).
  RatPoly sf = squarefree_part(s);
  Rat cauchy = 1;
  for (size_t i = 0; i + 1 < sf.size(); ++i) {
    Rat c = sf[i] / sf.back();
    if (c < 0) c = -c;
    if (c > cauchy) cauchy = c;
  }
  Rat lo = Rat(-1), hi = cauchy + 1;
  for (int iter = 0; iter < 80 && hi - lo > Rat(1, Int(1) << 48); ++iter) {
    Rat mid = (lo + hi) / 2;
    if (sturm_count_interval(sf, mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  Rat ylo = lo < 0 ? Rat(0) : lo;
  Rat yhi = hi;
  // Rational square-root enclosure.
  Int scale = Int(1) << 26;
  Int s2 = scale * scale;
  Rat slo = Rat(isqrt(rat_floor(ylo * Rat(s2))), scale);
  Rat shi = Rat(isqrt(rat_ceil(yhi * Rat(s2))) + 1, scale);
  rep.second_largest_lo = slo;
  rep.second_largest_hi = shi;
  return rep;
}

std::string spectral_csv_header() {
  return "g,l,p,h,k,ramanujan,second_largest_abs_lo,second_largest_abs_hi,charpoly";
}

std::string poly_to_string(const IntPoly& p) {
  std::string s;
  for (size_t i = p.size(); i-- > 0;) {
    if (!s.empty()) s += " ";
    s += p[i].str();
  }
  return s;
}

std::string spectral_csv_row(const SpectralReport& r) {
  std::string s;
  s += std::to_string(r.g) + "," + std::to_string(r.ell) + "," +
       std::to_string(r.p) + "," + std::to_string(r.h) + "," +
       std::to_string(r.k) + ",";
  s += r.ramanujan ? "true" : "false";
  s += "," + rat_to_decimal(r.second_largest_lo, 12);
  s += "," + rat_to_decimal(r.second_largest_hi, 12);
  s += ",";
  s += poly_to_string(r.charpoly);
  return s;
}

}  // namespace quatgraphs
