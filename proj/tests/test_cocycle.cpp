#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "smcg/cocycle.hpp"
#include "smcg/random.hpp"

using namespace smcg;
using test::covec;
using test::vec;

namespace {
QuadraticRefinement q(const char *bits) { return QuadraticRefinement::parse(bits); }

// Fixed refinements are exactly the orbits of size one.
bool fixed_by_orbit_oracle(const QuadraticRefinement &psi) { return oracle::orbit(psi).size() == 1; }
} // namespace

TEST_SUITE("cocycles") {

TEST_CASE("coboundary examples") {
  const auto t = transvection(vec({1, 0}));
  CHECK(coboundary_at(covec({0, 1}), t).is_zero());
  CHECK(coboundary_at(covec({1, 0}), t) == covec({0, 1}));
  CHECK(coboundary_at(covec({5, -3}, 24), SymplecticMatrix::identity(Rank(1))).is_zero());
}

TEST_CASE("coboundaries satisfy the cocycle law") {
  Rng rng(31);
  for (int r = 1; r <= 4; ++r)
    for (std::uint64_t m : {0, 4, 24, 240}) {
      const auto s = Cocycle::coboundary(random_covector(Rank(r), Modulus(m), rng));
      for (int k = 0; k < 30; ++k) {
        const auto a = random_word(Rank(r), 20, rng), b = random_word(Rank(r), 20, rng);
        CHECK(check_cocycle_law(s, a, b));
      }
    }
}

TEST_CASE("principal cocycle vanishes at Id and -Id") {
  for (int r = 1; r <= 3; ++r)
    for (const auto &psi : enumerate_refinements(Rank(r))) {
      REQUIRE(principal_at(psi, SymplecticMatrix::identity(Rank(r))).is_zero());
      REQUIRE(principal_at(psi, neg_identity(Rank(r))).is_zero());
    }
}

TEST_CASE("principal cocycle of the fixed rank 1 refinement is zero") {
  Rng rng(2);
  for (int k = 0; k < 200; ++k) CHECK(principal_at(q("11"), random_word(Rank(1), 20, rng)).is_zero());
  CHECK_FALSE(principal_at(q("00"), transvection(vec({1, 0}))).is_zero());
}

TEST_CASE("principal cocycle law on random samples") {
  Rng rng(1234);
  for (int k = 0; k < 1000; ++k) {
    const Rank rk(1 + static_cast<int>(rng.below(4)));
    const QuadraticRefinement psi(rk, rng.next() & low_mask(rk.dim()));
    const auto a = random_word(rk, 20, rng), b = random_word(rk, 20, rng);
    REQUIRE(check_cocycle_law(Cocycle::principal(psi), a, b));
    // bitwise form: s(AB) = s(A) . B + s(B)
    const auto lhs = principal_at(psi, a * b);
    const auto rhs = act(principal_at(psi, a), reduce_mod2(b)) + principal_at(psi, b);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("tabulated non-cocycle is rejected") {
  const auto t = transvection(vec({1, 0}));
  std::map<SymplecticMatrix, Covector> values;
  values.emplace(t, covec({1, 0}, 4));
  values.emplace(t * t, covec({0, 0}, 4));
  const auto s = Cocycle::tabulated(Rank(1), Modulus(4), values);
  CHECK_FALSE(check_cocycle_law(s, t, t));
  CHECK_THROWS_AS(s(neg_identity(Rank(1))), InvalidArgument);
  CHECK_THROWS_AS(Cocycle::tabulated(Rank(1), Modulus(8), values), InvalidModulus);
  CHECK(s.rank() == Rank(1));
  CHECK(s.modulus() == Modulus(4));
}

TEST_CASE("coboundary witness") {
  const auto w11 = principal_coboundary_witness(q("11"));
  REQUIRE(w11.has_value());
  CHECK(w11->shift.is_zero());
  const auto w00 = principal_coboundary_witness(q("00"));
  REQUIRE(w00.has_value());
  CHECK(w00->shift == BitCovector(Rank(1), 0b11));
  for (const auto &psi : enumerate_refinements(Rank(1))) {
    const auto w = principal_coboundary_witness(psi);
    REQUIRE(w.has_value());
    CHECK(fixed_by_orbit_oracle(qtranslate(psi, w->shift)));
  }
  for (int r = 2; r <= 4; ++r) CHECK_FALSE(principal_coboundary_witness(QuadraticRefinement::zero(Rank(r))).has_value());
  CHECK_THROWS_AS(principal_coboundary_witness(QuadraticRefinement::zero(Rank(9))), RankTooLarge);
}

TEST_CASE("fixed_by_all_transvections matches the orbit oracle") {
  for (int r = 1; r <= 2; ++r)
    for (const auto &psi : enumerate_refinements(Rank(r))) CHECK(fixed_by_all_transvections(psi) == fixed_by_orbit_oracle(psi));
  int fixed = 0;
  for (const auto &psi : enumerate_refinements(Rank(3))) fixed += fixed_by_all_transvections(psi);
  CHECK(fixed == 0);
}

TEST_CASE("minus identity constraint") {
  Rng rng(77);
  for (std::uint64_t m : {0, 4, 24, 240})
    for (int r = 1; r <= 3; ++r) {
      const auto s = Cocycle::coboundary(random_covector(Rank(r), Modulus(m), rng));
      for (int k = 0; k < 30; ++k) CHECK(minus_id_constraint(s, random_word(Rank(r), 20, rng)));
    }
  for (const auto &psi : enumerate_refinements(Rank(2)))
    CHECK(minus_id_constraint(Cocycle::principal(psi), random_word(Rank(2), 20, rng)));
  CHECK_THROWS_AS(minus_id_constraint(Cocycle::coboundary(covec({1, 1}, 3)), neg_identity(Rank(1))), InvalidModulus);
}

TEST_CASE("coboundaries add") {
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    const Rank rk(1 + static_cast<int>(rng.below(3)));
    const auto x = random_covector(rk, Modulus(24), rng), y = random_covector(rk, Modulus(24), rng);
    const auto a = random_word(rk, 20, rng);
    CHECK(coboundary_at(x + y, a) == coboundary_at(x, a) + coboundary_at(y, a));
  }
}

TEST_CASE("translating the refinement shifts its cocycle by a coboundary") {
  Rng rng(6);
  for (int k = 0; k < 300; ++k) {
    const Rank rk(1 + static_cast<int>(rng.below(3)));
    const QuadraticRefinement psi(rk, rng.next() & low_mask(rk.dim()));
    const auto y = random_bit_covector(rk, rng);
    const auto a = random_word(rk, 20, rng);
    const auto shifted = principal_at(qtranslate(psi, y), a);
    const auto expected = principal_at(psi, a) + reduce_mod2(coboundary_at(y.lift(Modulus(0)), a));
    CHECK(shifted == expected);
  }
}

}
