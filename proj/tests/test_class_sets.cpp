#include "quatgraphs/class_set.hpp"

#include "quatgraphs/isometry.hpp"

#include "doctest.h"

using namespace quatgraphs;

TEST_CASE("mass values") {
  // g = 1: (p-1)/24
  CHECK(mass(1, 7) == Rat(1, 4));
  CHECK(mass(1, 11) == Rat(5, 12));
  CHECK(mass(1, 2) == Rat(1, 24));
  // g = 2 values from the zeta product with zeta(-1) = -1/12, zeta(-3) = 1/120:
  // (p-1)(p^2+1)/5760
  CHECK(mass(2, 7) == Rat(5, 96));
  CHECK(mass(2, 11) == Rat(61, 288));
  for (long long p : {3, 5, 7, 11, 13})
    CHECK(mass(2, p) == Rat((p - 1) * (p * p + 1), 5760));
  // g = 3: (p-1)(p^2+1)(p^3-1)/2903040 via bernoulli numbers B_2, B_4, B_6
  CHECK(bernoulli(2) == Rat(1, 6));
  CHECK(bernoulli(4) == Rat(-1, 30));
  CHECK(bernoulli(6) == Rat(1, 42));
  for (long long p : {3, 7, 11})
    CHECK(mass(3, p) ==
          Rat((p - 1) * (p * p + 1) * (p * p * p - 1), 2903040));
}

TEST_CASE("right ideal classes for small primes") {
  auto cs7 = compute_class_set(1, 7);
  CHECK(cs7.h() == 1);
  CHECK(cs7.mass_value == Rat(1, 4));
  CHECK(cs7.aut_counts == std::vector<long long>{4});

  auto cs11 = compute_class_set(1, 11);
  CHECK(cs11.h() == 2);
  // the two classes are inequivalent
  CHECK_FALSE(ideal_equivalent(cs11.ideal_reps[0], cs11.ideal_reps[1]));

  auto cs2 = compute_class_set(1, 2);
  CHECK(cs2.h() == 1);
  CHECK(cs2.aut_counts == std::vector<long long>{24});
}

TEST_CASE("mass certificate holds exactly for every class set") {
  for (auto [g, p] : std::vector<std::pair<int, long long>>{
           {1, 2}, {1, 7}, {1, 11}, {1, 13}, {2, 2}, {2, 3}, {2, 5}, {2, 7}}) {
    auto cs = compute_class_set(g, p);
    Rat acc = 0;
    for (long long e : cs.aut_counts) acc += Rat(1, e);
    CHECK(acc == mass(g, p));
    CHECK(acc == cs.mass_value);
  }
}

TEST_CASE("every unit count is even and at least 2") {
  // contains -1, so e_j >= 2 and the group has even order
  for (auto [g, p] : std::vector<std::pair<int, long long>>{{1, 11}, {2, 7}}) {
    auto cs = compute_class_set(g, p);
    for (long long e : cs.aut_counts) {
      CHECK(e >= 2);
      CHECK(e % 2 == 0);
    }
  }
}

TEST_CASE("left orders") {
  auto cs = compute_class_set(1, 11);
  const MaximalOrder& O = *cs.order;
  // left order of the unit ideal is the order itself
  IdealLattice unit = unit_ideal(O);
  auto lo = left_order(unit);
  CHECK(reduced_discriminant(O.alg, lo->basis) == Int(11));
  CHECK(int_eq(unit_ideal(*lo).coords, unit.coords));
  for (int m = 0; m < 4; ++m) CHECK(lo->basis[m] == O.basis[m]);

  // principal twist alpha O has left order alpha O alpha^{-1}; its
  // discriminant is still p and it is equivalent to O
  for (const auto& I : cs.ideal_reps) {
    auto loi = left_order(I);
    CHECK(reduced_discriminant(O.alg, loi->basis) == Int(11));
  }
}

TEST_CASE("ideal equivalence is reflexive and respects principal twists") {
  auto cs = compute_class_set(1, 11);
  const MaximalOrder& O = *cs.order;
  for (const auto& I : cs.ideal_reps) CHECK(ideal_equivalent(I, I));
  // alpha * O ~ O for integral alpha
  IdealLattice unit = unit_ideal(O);
  for (int m = 0; m < 4; ++m) {
    OrderElem alpha = {0, 0, 0, 0};
    alpha[m] = 1;
    alpha[(m + 1) % 4] = 2;
    IntMat gens(4, IntVec());
    for (int j = 0; j < 4; ++j) {
      OrderElem bj = {0, 0, 0, 0};
      bj[j] = 1;
      OrderElem prod = oe_mul(O, alpha, bj);
      for (int r = 0; r < 4; ++r) gens[r].push_back(prod[r]);
    }
    IdealLattice twisted = make_ideal(O, gens, 1);
    CHECK(ideal_equivalent(twisted, unit));
  }
}

TEST_CASE("ideal norms divide element norms") {
  auto cs = compute_class_set(1, 11);
  for (const auto& I : cs.ideal_reps) {
    QuadraticLattice F = norm_form(I);
    for (auto& sv : vectors_up_to(F, Rat(6))) {
      CHECK(den(sv.value) == 1);
      CHECK(sv.value >= 1);
    }
  }
}

TEST_CASE("hermitian class sets for g=2") {
  auto cs7 = compute_class_set(2, 7);
  CHECK(cs7.h() == 2);
  // identity form is present
  bool has_id = false;
  for (const auto& H : cs7.form_reps)
    if (H.mat == om_identity(*cs7.order, 2)) has_id = true;
  CHECK(has_id);
  // representatives pairwise inequivalent and of haupt norm one
  for (const auto& H : cs7.form_reps) {
    CHECK(haupt_norm(H) == 1);
    CHECK(is_positive_definite(H));
  }
  CHECK_FALSE(isometry_exists(cs7.form_reps[0], cs7.form_reps[1], 1));
  // aut counts equal automorphism group orders
  for (int i = 0; i < cs7.h(); ++i)
    CHECK((long long)automorphism_group(cs7.form_reps[i]).size() ==
          cs7.aut_counts[i]);

  CHECK(compute_class_set(2, 2).h() == 1);
  CHECK(compute_class_set(2, 3).h() == 1);
  CHECK(compute_class_set(2, 5).h() == 2);
}

TEST_CASE("theta prefixes separate or isometry decides") {
  auto cs = compute_class_set(2, 11);
  REQUIRE(cs.h() == 5);
  for (int i = 0; i < cs.h(); ++i)
    for (int j = i + 1; j < cs.h(); ++j) {
      if (rep_theta(cs, i, 8) == rep_theta(cs, j, 8))
        CHECK_FALSE(isometry_exists(cs.form_reps[i], cs.form_reps[j], 1));
    }
}

TEST_CASE("class set json round trip") {
  for (auto [g, p] : std::vector<std::pair<int, long long>>{{1, 11}, {2, 7}}) {
    auto cs = compute_class_set(g, p);
    std::string text = class_set_to_json(cs);
    ClassSet back = class_set_from_json(text);
    CHECK(back.g == cs.g);
    CHECK(back.p == cs.p);
    CHECK(back.h() == cs.h());
    CHECK(back.aut_counts == cs.aut_counts);
    CHECK(back.mass_value == cs.mass_value);
    CHECK(class_set_to_json(back) == text);
  }
}

TEST_CASE("corrupted class set json is rejected") {
  auto cs = compute_class_set(1, 7);
  std::string text = class_set_to_json(cs);
  CHECK_THROWS(class_set_from_json(text + "garbage"));
  std::string wrong = text;
  auto pos = wrong.find("\"h\": 1");
  REQUIRE(pos != std::string::npos);
  wrong.replace(pos, 6, "\"h\": 2");
  CHECK_THROWS(class_set_from_json(wrong));
}
