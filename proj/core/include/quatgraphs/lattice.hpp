#ifndef QUATGRAPHS_LATTICE_HPP
#define QUATGRAPHS_LATTICE_HPP

#include "quatgraphs/linalg.hpp"

#include <string>
#include <vector>

namespace quatgraphs {

// Integral quadratic lattice.  gram is the symmetric bilinear matrix
// 2*Q on the diagonal convention: Q(v) = scale * (v^T gram v) / 2.
struct QuadraticLattice {
  int dim = 0;
  IntMat gram;
  Rat scale = 1;

  Rat quad_value(const std::vector<long long>& v) const;
};

// LLL reduction acting on the Gram matrix only.  Returns the transform U
// (unimodular, columns = reduced basis in old coordinates) and overwrites
// gram with U^T gram U.
IntMat lll_reduce(IntMat& gram);

struct ShortVector {
  std::vector<long long> coords;
  Rat value;  // Q(v)
};

// All nonzero v with Q(v) <= bound, both v and -v, sorted lexicographically
// by coordinates.
std::vector<ShortVector> vectors_up_to(const QuadraticLattice& L, const Rat& bound);

// Exactly the v with Q(v) = target (possibly empty), both signs, sorted.
std::vector<std::vector<long long>> short_vectors(const QuadraticLattice& L,
                                                  const Rat& target);

// Representation counts of Q = 1..upto (values must be integral in range).
std::vector<long long> theta_prefix(const QuadraticLattice& L, int upto);

// Canonical byte string of the Gram matrix (with scale), for hashing/sorting.
std::string gram_bytes(const QuadraticLattice& L);

}  // namespace quatgraphs

#endif
