#include "quatgraphs/order.hpp"

#include "doctest.h"

#include <random>

using namespace quatgraphs;

namespace {

RatQuat random_quat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  RatQuat q;
  for (int m = 0; m < 4; ++m) q.c[m] = Rat(num(rng), den(rng));
  return q;
}

}  // namespace

TEST_CASE("hilbert symbol basics") {
  CHECK(hilbert_symbol(-1, -1, 2) == -1);
  CHECK(hilbert_symbol(-1, -1, 5) == 1);
  CHECK(hilbert_symbol(-1, -1, 0) == -1);  // infinite place
  CHECK(hilbert_symbol(-1, -7, 7) == -1);
  CHECK(hilbert_symbol(-1, -7, 3) == 1);
  CHECK(hilbert_symbol(2, 3, 0) == 1);
}

TEST_CASE("algebra_for_prime produces the right ramification") {
  for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 73, 97}) {
    QuaternionAlgebra A = algebra_for_prime(p);
    CAPTURE(p);
    CHECK(A.a < 0);
    CHECK(A.b < 0);
    CHECK(ramification_is_p_infinity(A));
  }
  CHECK(algebra_for_prime(2).a == -1);
  CHECK(algebra_for_prime(2).b == -1);
  CHECK(algebra_for_prime(7).a == -1);   // 7 = 3 mod 4
  CHECK(algebra_for_prime(13).a == -2);  // 13 = 5 mod 8
  CHECK_THROWS_AS(algebra_for_prime(4), std::invalid_argument);
  CHECK_THROWS_AS(algebra_for_prime(1), std::invalid_argument);
}

TEST_CASE("quaternion product relations") {
  QuaternionAlgebra A = algebra_for_prime(2);
  RatQuat i(0, 1, 0, 0), j(0, 0, 1, 0), k(0, 0, 0, 1);
  CHECK(q_mul(i, j, A) == k);
  CHECK(q_mul(j, i, A) == q_neg(k));
  // x conj(x) = nrd(x) for x = 1+i+j+k in the Hamilton algebra: norm 4.
  RatQuat x(1, 1, 1, 1);
  CHECK(q_nrd(x, A) == 4);
  RatQuat prod = q_mul(x, q_conj(x), A);
  CHECK(prod == RatQuat(Rat(4)));
}

TEST_CASE("randomized algebra identities") {
  std::mt19937 rng(12345);
  for (long long p : {2, 7, 13, 17}) {
    QuaternionAlgebra A = algebra_for_prime(p);
    for (int iter = 0; iter < 50; ++iter) {
      RatQuat x = random_quat(rng), y = random_quat(rng), z = random_quat(rng);
      // associativity
      CHECK(q_mul(q_mul(x, y, A), z, A) == q_mul(x, q_mul(y, z, A), A));
      // anti-involution
      CHECK(q_conj(q_mul(x, y, A)) == q_mul(q_conj(y), q_conj(x), A));
      // norm multiplicative, trace = x + conj(x)
      CHECK(q_nrd(q_mul(x, y, A), A) == q_nrd(x, A) * q_nrd(y, A));
      CHECK(q_add(x, q_conj(x)) == RatQuat(q_trd(x)));
      // definiteness
      CHECK(q_nrd(x, A) >= 0);
      if (!x.is_zero()) CHECK(q_nrd(x, A) > 0);
    }
  }
}

TEST_CASE("maximal orders have reduced discriminant p") {
  for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 41, 73}) {
    CAPTURE(p);
    QuaternionAlgebra A = algebra_for_prime(p);
    MaximalOrder O = maximal_order(A);
    CHECK(reduced_discriminant(A, O.basis) == Int(p));
    // closure: products of basis elements have integral coordinates
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        OrderElem c;
        CHECK(O.contains(q_mul(O.basis[m], O.basis[n], A), &c));
      }
    // integral traces and norms
    for (int m = 0; m < 4; ++m) {
      CHECK(den(q_trd(O.basis[m])) == 1);
      CHECK(den(q_nrd(O.basis[m], A)) == 1);
    }
    CHECK(O.contains(RatQuat(Rat(1))));
  }
}

TEST_CASE("hurwitz-type order at p=2 contains (1+i+j+k)/2") {
  MaximalOrder O = maximal_order(algebra_for_prime(2));
  RatQuat half(Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2));
  CHECK(O.contains(half));
}

TEST_CASE("order element arithmetic matches ambient arithmetic") {
  std::mt19937 rng(99);
  for (long long p : {7, 13, 17}) {
    MaximalOrder O = maximal_order(algebra_for_prime(p));
    std::uniform_int_distribution<long long> coef(-5, 5);
    for (int iter = 0; iter < 30; ++iter) {
      OrderElem x = {coef(rng), coef(rng), coef(rng), coef(rng)};
      OrderElem y = {coef(rng), coef(rng), coef(rng), coef(rng)};
      RatQuat xa = O.to_ambient(x), ya = O.to_ambient(y);
      CHECK(O.to_ambient(oe_mul(O, x, y)) == q_mul(xa, ya, O.alg));
      CHECK(O.to_ambient(oe_conj(O, x)) == q_conj(xa));
      CHECK(Rat(oe_trd(O, x)) == q_trd(xa));
      CHECK(Rat(oe_nrd(O, x)) == q_nrd(xa, O.alg));
    }
  }
}
