#ifndef QUATGRAPHS_ORDER_HPP
#define QUATGRAPHS_ORDER_HPP

#include "quatgraphs/quaternion.hpp"

#include <array>
#include <vector>

namespace quatgraphs {

// Coordinates of an order element with respect to the order basis.
using OrderElem = std::array<long long, 4>;

// A maximal order O in a definite quaternion algebra, with precomputed
// integer tables for fast arithmetic in order-basis coordinates:
//   basis         b_0..b_3 in (1,i,j,k) coordinates, canonical (HNF)
//   mult[m][n]    coordinates of b_m * b_n
//   conj_mat[m]   coordinates of conj(b_m)
//   trd_vec[m]    trd(b_m)
//   trace_gram    trd(b_m * conj(b_n))  (so nrd(x) = x^T G x / 2)
//   one_coords    coordinates of 1
struct MaximalOrder {
  QuaternionAlgebra alg;
  std::array<RatQuat, 4> basis;
  long long mult[4][4][4] = {};
  long long conj_mat[4][4] = {};
  long long trd_vec[4] = {};
  long long trace_gram[4][4] = {};
  OrderElem one_coords = {};
  RatMat basis_mat;      // columns = basis vectors, ambient coords
  RatMat basis_mat_inv;  // ambient -> order-basis coordinates

  RatQuat to_ambient(const OrderElem& x) const;
  // Exact order-basis coordinates of an ambient element (rational in general).
  std::array<Rat, 4> coords_of(const RatQuat& x) const;
  // True iff x lies in O; writes integer coordinates when it does.
  bool contains(const RatQuat& x, OrderElem* coords = nullptr) const;
};

OrderElem oe_add(const OrderElem& x, const OrderElem& y);
OrderElem oe_sub(const OrderElem& x, const OrderElem& y);
OrderElem oe_neg(const OrderElem& x);
OrderElem oe_scale(long long s, const OrderElem& x);
OrderElem oe_mul(const MaximalOrder& O, const OrderElem& x, const OrderElem& y);
OrderElem oe_conj(const MaximalOrder& O, const OrderElem& x);
long long oe_trd(const MaximalOrder& O, const OrderElem& x);
long long oe_nrd(const MaximalOrder& O, const OrderElem& x);
inline bool oe_is_zero(const OrderElem& x) {
  return x[0] == 0 && x[1] == 0 && x[2] == 0 && x[3] == 0;
}

// Builds the canonical maximal order of the algebra: starts from
// Z<1, i, j, k> and saturates at every prime whose square still divides the
// discriminant, until the reduced discriminant equals p.
MaximalOrder maximal_order(const QuaternionAlgebra& A);

// Builds the table set for an order with the given basis.  The basis must
// span a lattice containing 1 that is closed under multiplication; throws
// otherwise.
MaximalOrder order_from_basis(const QuaternionAlgebra& A,
                              const std::array<RatQuat, 4>& basis);

// |det(trd(b_m conj(b_n)))| = d^2 with d the reduced discriminant.
Int reduced_discriminant(const QuaternionAlgebra& A, const std::array<RatQuat, 4>& basis);

}  // namespace quatgraphs

#endif
