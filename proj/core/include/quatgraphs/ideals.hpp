#ifndef QUATGRAPHS_IDEALS_HPP
#define QUATGRAPHS_IDEALS_HPP

#include "quatgraphs/lattice.hpp"
#include "quatgraphs/order.hpp"

#include <memory>
#include <vector>

namespace quatgraphs {

// Full-rank lattice in the algebra, stable under right multiplication by O.
// Basis vector j is (1/den) * sum_m coords[m][j] b_m in order-basis
// coordinates, with coords in column HNF.
struct IdealLattice {
  const MaximalOrder* order = nullptr;
  IntMat coords;
  Int den = 1;
  Rat norm;  // reduced norm: positive generator of the norm ideal

  RatQuat basis_ambient(int j) const;
  std::string key() const;  // canonical bytes (coords, den)
};

IdealLattice unit_ideal(const MaximalOrder& O);

// Spans the columns of gens/gden and computes the reduced norm from the
// lattice index (must be a perfect square).  Verifies right O-stability
// unless told otherwise; products like I * conj(J) are right-stable under
// the left order of J rather than O and skip the check.
IdealLattice make_ideal(const MaximalOrder& O, const IntMat& gens, const Int& gden,
                        bool require_right_stable = true);

// I * J spanned by pairwise basis products.  Verifies that the computed
// norm equals norm(I) * norm(J).
IdealLattice ideal_product(const IdealLattice& I, const IdealLattice& J);

// {conj(x) : x in I}.
IdealLattice ideal_conjugate(const IdealLattice& I);

// Divides out the rational content, producing the primitive integral model.
IdealLattice primitive_part(const IdealLattice& I);

IdealLattice ideal_scale(const IdealLattice& I, const Rat& s);

bool ideal_equal(const IdealLattice& I, const IdealLattice& J);

// Normalized norm form Q(x) = nrd(x) / norm(I); integral of rank 4.
QuadraticLattice norm_form(const IdealLattice& I);

// {x : x I <= I}; a maximal order of the same discriminant.
std::shared_ptr<MaximalOrder> left_order(const IdealLattice& I);

// Theta test for right-ideal equivalence: I = alpha J for some alpha iff
// the normalized norm form of I * conj(J) represents 1.
bool ideal_equivalent(const IdealLattice& I, const IdealLattice& J);

// The q+1 subideals of index q^2 in I (q-neighbors), q a prime splitting
// the order (q != p).  I must be primitive integral.
std::vector<IdealLattice> ideal_neighbors(const IdealLattice& I, long long q);

// Norm-1 elements of an order (the unit group), ambient coordinates.
std::vector<RatQuat> order_units(const MaximalOrder& O);

}  // namespace quatgraphs

#endif
