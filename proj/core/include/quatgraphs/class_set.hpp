#ifndef QUATGRAPHS_CLASS_SET_HPP
#define QUATGRAPHS_CLASS_SET_HPP

#include "quatgraphs/hermitian.hpp"
#include "quatgraphs/ideals.hpp"

#include <memory>
#include <string>
#include <vector>

namespace quatgraphs {

// Raised when the candidate bound is exhausted before the mass certificate
// is met (CLI exit code 3).
struct enumeration_ceiling_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact mass: (-1)^{g(g+1)/2} / 2^g * prod_k zeta(1-2k) * prod_k (p^k + (-1)^k)
// with zeta(1-2k) = -B_{2k} / (2k).  For g = 1 this is (p-1)/24.
Rat mass(int g, long long p);

// Vertex currency for the graphs: right-ideal classes for g = 1, classes of
// positive-definite haupt-norm-1 hermitian forms for g >= 2.  Completeness is
// certified by the exact identity  sum_j 1/e_j = mass(g, p).
struct ClassSet {
  int g = 0;
  long long p = 0;
  std::shared_ptr<const MaximalOrder> order;
  std::vector<IdealLattice> ideal_reps;                    // g = 1
  std::vector<std::shared_ptr<MaximalOrder>> left_orders;  // g = 1, per rep
  std::vector<HermitianForm> form_reps;                    // g >= 2
  std::vector<long long> aut_counts;                       // e_j
  Rat mass_value;

  int h() const { return (int)aut_counts.size(); }
};

// Complete right-ideal class representatives by breadth-first q-neighbor
// expansion at the smallest prime q != p; terminates on the mass certificate.
ClassSet right_ideal_classes(std::shared_ptr<const MaximalOrder> order);

// Complete representatives of haupt-norm-1 positive-definite classes for
// g in {2, 3}: bounded candidate generation, deduplicated by theta prefix and
// isometry search, mass-certified.  The diagonal bound doubles on exhaustion
// up to max_bound, then throws enumeration_ceiling_error.
ClassSet hermitian_class_reps(int g, std::shared_ptr<const MaximalOrder> order,
                              int max_bound = 64);

ClassSet compute_class_set(int g, long long p);

// Theta-series prefix of a representative (counts of the first `upto` values
// of the associated norm form); the cheap class invariant.
std::vector<long long> rep_theta(const ClassSet& cs, int index, int upto);

std::string class_set_to_json(const ClassSet& cs);
ClassSet class_set_from_json(const std::string& text);

// FNV-1a hash of the canonical JSON, used as a cache key.
std::string class_set_hash(const ClassSet& cs);

}  // namespace quatgraphs

#endif
