#ifndef QUATGRAPHS_SPECTRAL_HPP
#define QUATGRAPHS_SPECTRAL_HPP

#include "quatgraphs/brandt.hpp"

#include <string>
#include <vector>

namespace quatgraphs {

using IntPoly = std::vector<Int>;  // coefficients, low degree first
using RatPoly = std::vector<Rat>;

// Monic characteristic polynomial det(x I - m), exact, via integer
// determinant interpolation.
IntPoly char_poly(const IntMat& m);

Int poly_eval(const IntPoly& p, const Int& x);

// Exact division by (x - root); throws if the remainder is nonzero.
IntPoly poly_divide_linear(const IntPoly& p, const Int& root);

// Number of distinct real roots of f in (a, b], by Sturm chains with exact
// rational endpoints.
long long sturm_count_interval(const RatPoly& f, const Rat& a, const Rat& b);

// Same, counted with multiplicity (via the gcd chain of square-free parts).
long long sturm_count_interval_multiplicity(const RatPoly& f, const Rat& a,
                                            const Rat& b);

// Real roots over (-inf, inf).
long long sturm_count_real(const RatPoly& f);
long long sturm_count_real_multiplicity(const RatPoly& f);

struct SpectralReport {
  int g = 0;
  long long ell = 0;
  long long p = 0;
  int h = 0;
  long long k = 0;  // regular degree = trivial eigenvalue
  IntPoly charpoly;
  int trivial_multiplicity = 0;
  bool ramanujan = false;
  // Certified rational enclosure of the largest nontrivial |eigenvalue|
  // ([0, 0] when there is none).
  Rat second_largest_lo = 0;
  Rat second_largest_hi = 0;
};

// Exact Ramanujan decision: every root lambda of charpoly/(x - k) must
// satisfy lambda^2 <= 4(k - 1), decided by counting roots of the even part
// of q(x) q(-x) in [0, 4(k-1)] with Sturm sequences.  The boundary counts as
// Ramanujan.  Preconditions checked: weighted symmetry (realness
// certificate), constant row sums, simple trivial eigenvalue.
SpectralReport ramanujan_verdict(const BrandtMatrix& B);

std::string spectral_csv_header();
std::string spectral_csv_row(const SpectralReport& r);

// Human-readable polynomial, highest degree first.
std::string poly_to_string(const IntPoly& p);

}  // namespace quatgraphs

#endif
