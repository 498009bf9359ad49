#include "quatgraphs/brandt.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>

using namespace quatgraphs;

namespace {

IntMat from_ll(std::vector<std::vector<long long>> rows) {
  IntMat m;
  for (auto& r : rows) m.push_back(IntVec(r.begin(), r.end()));
  return m;
}

// Equality up to one simultaneous row/column permutation.
bool perm_equal(const IntMat& a, const IntMat& b) {
  int h = (int)a.size();
  if ((int)b.size() != h) return false;
  std::vector<int> perm(h);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < h && ok; ++i)
      for (int j = 0; j < h && ok; ++j)
        if (a[i][j] != b[perm[i]][perm[j]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("one-class brandt values at p=7") {
  auto cs = compute_class_set(1, 7);
  CHECK(int_eq(brandt(cs, 2).entries, from_ll({{3}})));
  CHECK(int_eq(brandt(cs, 3).entries, from_ll({{4}})));
  CHECK(int_eq(brandt(cs, 1).entries, from_ll({{1}})));
}

TEST_CASE("two-class brandt values at p=11 match the golden data") {
  auto cs = compute_class_set(1, 11);
  CHECK(perm_equal(brandt(cs, 2).entries, from_ll({{1, 2}, {3, 0}})));
  CHECK(perm_equal(brandt(cs, 3).entries, from_ll({{2, 2}, {3, 1}})));
  CHECK(perm_equal(brandt(cs, 5).entries, from_ll({{4, 2}, {3, 3}})));
  CHECK(perm_equal(brandt(cs, 7).entries, from_ll({{4, 4}, {6, 2}})));
}

TEST_CASE("g=2 brandt at p=7") {
  auto cs = compute_class_set(2, 7);
  CHECK(perm_equal(brandt(cs, 2).entries, from_ll({{11, 4}, {6, 9}})));
}

TEST_CASE("brandt zero matrix") {
  auto cs = compute_class_set(2, 7);
  RatMat z = brandt_zero(cs);
  // column-constant entries 1/e_j
  for (int i = 0; i < cs.h(); ++i)
    for (int j = 0; j < cs.h(); ++j)
      CHECK(z[i][j] == Rat(1, cs.aut_counts[j]));
  // row sums equal the mass
  for (int i = 0; i < cs.h(); ++i) {
    Rat s = 0;
    for (int j = 0; j < cs.h(); ++j) s += z[i][j];
    CHECK(s == Rat(5, 96));
  }
}

TEST_CASE("regular degree formula") {
  CHECK(regular_degree(1, 2) == 3);
  CHECK(regular_degree(2, 2) == 15);
  CHECK(regular_degree(2, 3) == 40);
  CHECK(regular_degree(3, 2) == 135);
  CHECK(regular_degree(3, 3) == 1120);
}

TEST_CASE("identity suite passes for g=1") {
  for (long long p : {7, 11}) {
    auto cs = compute_class_set(1, p);
    IdentityReport rep = verify_identities(cs, 10);
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
    CHECK(rep.all_pass());
  }
}

TEST_CASE("identity suite passes for g=2 p=7") {
  auto cs = compute_class_set(2, 7);
  IdentityReport rep = verify_identities(cs, 6);
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("multiplicativity through direct computation of B(6)") {
  auto cs = compute_class_set(1, 11);
  BrandtMatrix b2 = brandt(cs, 2), b3 = brandt(cs, 3), b6 = brandt(cs, 6);
  CHECK(int_eq(int_mul(b2.entries, b3.entries), b6.entries));
  CHECK(int_eq(int_mul(b3.entries, b2.entries), b6.entries));
}

TEST_CASE("g=1 recursion at prime powers") {
  // B(l^k) = B(l^{k-1}) B(l) - l B(l^{k-2}); stated for g = 1 only.
  for (long long p : {7, 11}) {
    auto cs = compute_class_set(1, p);
    BrandtMatrix b1 = brandt(cs, 1), b2 = brandt(cs, 2), b4 = brandt(cs, 4),
                 b8 = brandt(cs, 8);
    IntMat lhs4 = b4.entries;
    IntMat rhs4 = int_mul(b2.entries, b2.entries);
    for (int i = 0; i < cs.h(); ++i)
      for (int j = 0; j < cs.h(); ++j) rhs4[i][j] -= 2 * b1.entries[i][j];
    CHECK(int_eq(lhs4, rhs4));
    IntMat rhs8 = int_mul(b4.entries, b2.entries);
    for (int i = 0; i < cs.h(); ++i)
      for (int j = 0; j < cs.h(); ++j) rhs8[i][j] -= 2 * b2.entries[i][j];
    CHECK(int_eq(b8.entries, rhs8));
  }
}

TEST_CASE("brandt json and csv round trip") {
  auto cs = compute_class_set(1, 11);
  BrandtMatrix B = brandt(cs, 3);
  BrandtMatrix back = brandt_from_json(brandt_to_json(B));
  CHECK(back.g == B.g);
  CHECK(back.p == B.p);
  CHECK(back.n == B.n);
  CHECK(int_eq(back.entries, B.entries));
  CHECK(back.weights == B.weights);
  std::string csv = brandt_to_csv(B);
  CHECK(csv.find(',') != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == B.h);
}
