#ifndef QUATGRAPHS_HERMITIAN_HPP
#define QUATGRAPHS_HERMITIAN_HPP

#include "quatgraphs/lattice.hpp"
#include "quatgraphs/order.hpp"

#include <vector>

namespace quatgraphs {

// g x g matrix over the order, entries in order-basis coordinates, row-major.
struct OrderMat {
  const MaximalOrder* order = nullptr;
  int g = 0;
  std::vector<OrderElem> entries;

  OrderElem& at(int i, int j) { return entries[(size_t)i * g + j]; }
  const OrderElem& at(int i, int j) const { return entries[(size_t)i * g + j]; }
  bool operator==(const OrderMat& o) const { return g == o.g && entries == o.entries; }
};

OrderMat om_identity(const MaximalOrder& O, int g);
OrderMat om_mul(const OrderMat& x, const OrderMat& y);
OrderMat om_dagger(const OrderMat& x);  // conjugate transpose

// Positive-definite hermitian matrix over the order.
struct HermitianForm {
  OrderMat mat;

  int g() const { return mat.g; }
  const MaximalOrder& order() const { return *mat.order; }
};

// Validates H = H^dagger with integral scalar diagonal; throws otherwise.
HermitianForm make_hermitian(OrderMat m);
HermitianForm identity_form(const MaximalOrder& O, int g);

bool is_hermitian(const OrderMat& m);

// Rank-4g lattice of the bilinear form B(u, v) = trd(u^dagger H v) on O^g.
QuadraticLattice trace_gram(const HermitianForm& H);

// Haupt norm.  Primary algorithm: fourth root of the determinant of the
// rational regular representation; cross-checked for g <= 3 against the
// recursive pivot expansion over the skew field.  Throws if the determinant
// is not the fourth power of a nonnegative integer, or if the two
// algorithms disagree.
Int haupt_norm(const HermitianForm& H);

// Reduced norm of an arbitrary g x g matrix over the order (square root of
// the regular-representation determinant; degree-2g polynomial).
Rat matrix_reduced_norm(const OrderMat& M);

bool is_positive_definite(const HermitianForm& H);

// U^dagger H U.
HermitianForm transform(const HermitianForm& H, const OrderMat& U);

// Inverse of a form with haupt norm 1 (a unit of the matrix ring); entries
// stay integral.  Throws if H is not unimodular.
OrderMat unimodular_inverse(const HermitianForm& H);

// H v for a coordinate column vector v in O^g.
std::vector<OrderElem> herm_apply(const HermitianForm& H, const std::vector<OrderElem>& v);

// sum_s conj(u_s) w_s.
OrderElem herm_inner(const MaximalOrder& O, const std::vector<OrderElem>& u,
                     const std::vector<OrderElem>& w);

// v^dagger H v as an integer (throws if not scalar).
long long herm_value(const HermitianForm& H, const std::vector<OrderElem>& v);

// True iff x is an integral scalar t*1; writes t.
bool oe_scalar(const MaximalOrder& O, const OrderElem& x, long long* t);

}  // namespace quatgraphs

#endif
