#ifndef QUATGRAPHS_ISOMETRY_HPP
#define QUATGRAPHS_ISOMETRY_HPP

#include "quatgraphs/hermitian.hpp"

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace quatgraphs {

// Backtracking search for the matrices M with M^dagger H_src M = n H_dst.
// Columns are chosen left to right from short-vector candidate lists of the
// source trace lattice; every partial choice must satisfy the full quaternion
// cross constraints v_l^dagger H_src v_k = n (H_dst)_{lk}, not merely their
// traces.  The engine caches candidate lists per diagonal target, so probing
// many destinations against one source pays for each enumeration once.
class IsometryEngine {
 public:
  explicit IsometryEngine(const HermitianForm& src);

  // Deterministic lexicographic order.
  std::vector<OrderMat> solutions(const HermitianForm& dst, long long n);
  long long count(const HermitianForm& dst, long long n);
  bool exists(const HermitianForm& dst, long long n);

  const HermitianForm& source() const { return src_; }

 private:
  struct Candidate {
    std::vector<OrderElem> col;
    std::vector<OrderElem> hcol;  // H_src * col
  };
  struct Search;

  const std::vector<Candidate>& candidates(long long target);
  void solve(const HermitianForm& dst, long long n, std::vector<OrderMat>* out,
             long long* count, bool stop_at_first);

  HermitianForm src_;
  QuadraticLattice gram_;
  std::map<long long, std::vector<Candidate>> by_target_;
};

std::vector<OrderMat> isometry_solutions(const HermitianForm& src,
                                         const HermitianForm& dst,
                                         long long n);
long long isometry_count(const HermitianForm& src, const HermitianForm& dst,
                         long long n);
bool isometry_exists(const HermitianForm& src, const HermitianForm& dst,
                     long long n);

// isometry_solutions(H, H, 1).
std::vector<OrderMat> automorphism_group(const HermitianForm& H);

template <class Elem>
struct Orbit {
  Elem representative;  // minimal element under the key ordering
  long long size = 0;
  long long stabilizer = 0;  // |left| * |right| / size
  std::vector<int> members;  // indices into the input element list
};

template <class Elem>
struct OrbitDecomposition {
  std::vector<Orbit<Elem>> orbits;
  std::vector<int> orbit_of;  // element index -> orbit index
};

// Orbits of `elements` under x -> l x r over all l in left, r in right.
// Throws if the action leaves the element set.  Pass a singleton identity
// on either side for a one-sided action.
template <class Elem, class Act, class KeyFn>
OrbitDecomposition<Elem> orbit_decomposition(const std::vector<Elem>& elements,
                                             const std::vector<Elem>& left,
                                             const std::vector<Elem>& right,
                                             Act act, KeyFn key) {
  OrbitDecomposition<Elem> out;
  const int n = (int)elements.size();
  out.orbit_of.assign(n, -1);
  std::unordered_map<std::string, int> index;
  index.reserve((size_t)n * 2);
  for (int i = 0; i < n; ++i) {
    auto r = index.emplace(key(elements[i]), i);
    QG_CHECK(r.second, "duplicate element in orbit decomposition");
  }
  const Elem* lid = left.empty() ? nullptr : &left[0];
  const Elem* rid = right.empty() ? nullptr : &right[0];
  QG_CHECK(lid && rid, "empty acting set");

  for (int seed = 0; seed < n; ++seed) {
    if (out.orbit_of[seed] >= 0) continue;
    int oid = (int)out.orbits.size();
    Orbit<Elem> orb;
    std::vector<int> frontier = {seed};
    out.orbit_of[seed] = oid;
    orb.members.push_back(seed);
    while (!frontier.empty()) {
      int cur = frontier.back();
      frontier.pop_back();
      auto touch = [&](const Elem& img) {
        auto it = index.find(key(img));
        QG_CHECK(it != index.end(), "action does not stabilize the element set");
        int idx = it->second;
        if (out.orbit_of[idx] < 0) {
          out.orbit_of[idx] = oid;
          orb.members.push_back(idx);
          frontier.push_back(idx);
        }
      };
      for (const Elem& l : left) touch(act(l, elements[cur], *rid));
      for (const Elem& r : right) touch(act(*lid, elements[cur], r));
    }
    orb.size = (long long)orb.members.size();
    long long total = (long long)left.size() * (long long)right.size();
    QG_CHECK(total % orb.size == 0, "orbit size does not divide group order");
    orb.stabilizer = total / orb.size;
    int best = orb.members[0];
    for (int m : orb.members)
      if (key(elements[m]) < key(elements[best])) best = m;
    orb.representative = elements[best];
    out.orbits.push_back(std::move(orb));
  }
  return out;
}

std::string order_mat_key(const OrderMat& m);

}  // namespace quatgraphs

#endif
