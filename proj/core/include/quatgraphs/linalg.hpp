#ifndef QUATGRAPHS_LINALG_HPP
#define QUATGRAPHS_LINALG_HPP

#include "quatgraphs/numeric.hpp"

#include <vector>

namespace quatgraphs {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;
using IntVec = std::vector<Int>;

IntMat int_identity(int n);
IntMat int_mul(const IntMat& a, const IntMat& b);
bool int_eq(const IntMat& a, const IntMat& b);

// Exact determinant by fraction-free Gaussian elimination.
Int bareiss_det(IntMat a);
Rat rat_det(RatMat a);

// Leading principal minors det(a[0..k][0..k]) for k = 0..n-1.
std::vector<Int> leading_minors(const IntMat& a);

// Column-style Hermite normal form: returns H with the same column span as a
// over Z, H in lower-triangular echelon with positive pivots and entries to
// the right of each pivot reduced.  Zero columns are dropped.
IntMat hnf_columns(IntMat a);

// Kernel of the integer matrix a (as column vectors): basis of
// {x : a * x = 0} over Z.
IntMat int_kernel(const IntMat& a);

// Exact inverse of a nonsingular rational matrix.
RatMat rat_inverse(const RatMat& a);

RatMat rat_mul(const RatMat& a, const RatMat& b);
std::vector<Rat> rat_apply(const RatMat& a, const std::vector<Rat>& x);

}  // namespace quatgraphs

#endif
