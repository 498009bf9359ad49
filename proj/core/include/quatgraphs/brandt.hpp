#ifndef QUATGRAPHS_BRANDT_HPP
#define QUATGRAPHS_BRANDT_HPP

#include "quatgraphs/class_set.hpp"

#include <string>
#include <vector>

namespace quatgraphs {

// h x h integer matrix of n-isometry counts between classes, entry (i, j)
// divided by e_j; the division must be exact.
struct BrandtMatrix {
  int g = 0;
  long long p = 0;
  long long n = 0;
  int h = 0;
  IntMat entries;
  std::vector<long long> weights;  // e_j, shared with the class set

  Int row_sum(int i) const;
};

BrandtMatrix brandt(const ClassSet& classes, long long n);

// Entry (i, j) = 1/e_j; every row sums to mass(g, p).
RatMat brandt_zero(const ClassSet& classes);

// Constant row sum of B_g(ell) for prime ell != p: prod_{k=1..g} (ell^k + 1).
Int regular_degree(int g, long long ell);

struct IdentityCheck {
  std::string name;
  std::string detail;
  bool pass = false;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

// Checks, for the matrices B(n) with 1 <= n <= upto:
//   - B(1) is the identity,
//   - row sums are constant for every n coprime to p, with value
//     regular_degree(g, ell) at primes ell != p,
//   - weighted symmetry e_j B(n)_ij = e_i B(n)_ji for every n,
//   - B(m) B(n) = B(mn) for coprime m, n >= 2 with mn <= upto,
//   - all computed matrices commute pairwise.
// Failures become report entries, not exceptions.
IdentityReport verify_identities(const ClassSet& classes, long long upto);

std::string brandt_to_json(const BrandtMatrix& B);
BrandtMatrix brandt_from_json(const std::string& text);
std::string brandt_to_csv(const BrandtMatrix& B);

}  // namespace quatgraphs

#endif
