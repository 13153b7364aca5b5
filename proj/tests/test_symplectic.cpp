#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "smcg/random.hpp"
#include "smcg/symplectic.hpp"

using namespace smcg;
using test::covec;
using test::mat;
using test::sp;
using test::vec;

TEST_SUITE("symplectic_core") {

TEST_CASE("phi on basis vectors") {
  const Rank r2(2);
  CHECK(phi(Vector::u(Rank(1), 0), Vector::v(Rank(1), 0)) == 1);
  CHECK(phi(Vector::v(Rank(1), 0), Vector::u(Rank(1), 0)) == -1);
  CHECK(phi(Vector::u(r2, 0), Vector::u(r2, 1)) == 0);
  CHECK(phi(Vector::u(r2, 0), Vector::v(r2, 1)) == 0);
  CHECK_THROWS_AS(phi(vec({1, 0}), vec({1, 0, 0, 0})), RankMismatch);
}

TEST_CASE("phi is antisymmetric, bilinear and matches the Gram oracle") {
  Rng rng(11);
  for (int r = 1; r <= 4; ++r) {
    const Rank rk(r);
    for (int k = 0; k < 200; ++k) {
      auto draw = [&] {
        std::vector<Integer> c(rk.dim());
        for (auto &x : c) x = static_cast<long>(rng.between(-50, 50));
        return Vector(std::move(c));
      };
      const auto a = draw(), b = draw(), c = draw();
      const Integer s = static_cast<long>(rng.between(-9, 9));
      CHECK(phi(a, b) == -phi(b, a));
      CHECK(phi(a + s * b, c) == phi(a, c) + s * phi(b, c));
      CHECK(phi(a, b) == oracle::phi(a, b));
    }
  }
}

TEST_CASE("transvection examples") {
  CHECK(transvection(vec({0, 0})) == SymplecticMatrix::identity(Rank(1)));
  CHECK(transvection(vec({1, 0})).entries() == mat({{1, 1}, {0, 1}}));
  CHECK(transvection(vec({1, 1})).entries() == mat({{0, 1}, {-1, 2}}));
}

TEST_CASE("transvection matches its defining formula and squares correctly") {
  Rng rng(5);
  for (int r = 1; r <= 4; ++r) {
    const Rank rk(r);
    for (int k = 0; k < 100; ++k) {
      std::vector<Integer> vc(rk.dim()), wc(rk.dim());
      for (auto &x : vc) x = static_cast<long>(rng.between(-5, 5));
      for (auto &x : wc) x = static_cast<long>(rng.between(-20, 20));
      const Vector v(vc), w(wc);
      const auto t = transvection(v);
      CHECK(is_symplectic(t.entries()));
      CHECK(t * w == w + oracle::phi(v, w) * v);
      CHECK((t * t) * w == w + Integer(2) * oracle::phi(v, w) * v);
    }
  }
}

TEST_CASE("is_symplectic") {
  CHECK(is_symplectic(IntMatrix::identity(4)));
  CHECK_FALSE(is_symplectic(mat({{0, 1}, {1, 0}})));
  CHECK(is_symplectic(mat({{0, 1}, {-1, 0}})));
  CHECK_THROWS_AS(is_symplectic(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), InvalidArgument);
  CHECK_THROWS_AS(is_symplectic(IntMatrix(2, 4)), InvalidArgument);
  CHECK_THROWS_AS(SymplecticMatrix(mat({{0, 1}, {1, 0}})), NotSymplectic);
}

TEST_CASE("covector action examples") {
  const auto t = transvection(vec({1, 0}));
  const auto x = covec({3, -7});
  CHECK(act(x, SymplecticMatrix::identity(Rank(1))) == x);
  // v_1^* . T_{u_1}: A u_1 = u_1 gives 0, A v_1 = u_1 + v_1 gives 1.
  CHECK(act(covec({0, 1}), t) == covec({0, 1}));
  CHECK(act(covec({0, 1}), t) == oracle::act(covec({0, 1}), t));
  CHECK(act(covec({1, 0}), t) == covec({1, 1}));
}

TEST_CASE("right action law and agreement with evaluation on columns") {
  Rng rng(99);
  for (int r = 1; r <= 4; ++r) {
    const Rank rk(r);
    for (std::uint64_t m : {0, 2, 24}) {
      for (int k = 0; k < 50; ++k) {
        const auto x = random_covector(rk, Modulus(m), rng);
        const auto a = random_word(rk, 20, rng), b = random_word(rk, 20, rng);
        CHECK(act(act(x, a), b) == act(x, a * b));
        CHECK(act(x, a) == oracle::act(x, a));
      }
    }
  }
}

TEST_CASE("reduce_covector") {
  CHECK(reduce(covec({4, 6}), Modulus(24)) == covec({4, 6}, 24));
  const auto red = reduce(covec({26, -2}), Modulus(24));
  CHECK(red.coords()[0] == 2);
  CHECK(red.coords()[1] == 22);
  CHECK(reduce(covec({5, 7}, 24), Modulus(12)) == covec({5, 7}, 12));
  CHECK_THROWS_AS(reduce(covec({1, 1}, 24), Modulus(5)), InvalidModulus);
  CHECK_THROWS_AS(reduce(covec({1, 1}, 24), Modulus(0)), InvalidModulus);

  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const Rank rk(1 + static_cast<int>(rng.below(3)));
    const auto x = random_covector(rk, Modulus(0), rng);
    const auto a = random_word(rk, 20, rng);
    CHECK(reduce(act(x, a), Modulus(24)) == act(reduce(x, Modulus(24)), a));
    CHECK(reduce_mod2(act(x, a)) == act(reduce_mod2(x), reduce_mod2(a)));
  }
}

TEST_CASE("covector invariants") {
  const auto x = covec({-1, 25}, 24);
  CHECK(x.coords()[0] == 23);
  CHECK(x.coords()[1] == 1);
  CHECK_THROWS_AS(covec({1, 2}, 4) + covec({1, 2}, 8), InvalidModulus);
  CHECK_THROWS_AS(covec({1, 2}) + covec({1, 2, 3, 4}), RankMismatch);
  CHECK_THROWS_AS(reduce_mod2(covec({1, 2}, 3)), InvalidModulus);
}

TEST_CASE("neg_identity") {
  const auto n = neg_identity(Rank(1));
  CHECK(n.entries() == mat({{-1, 0}, {0, -1}}));
  CHECK(n * n == SymplecticMatrix::identity(Rank(1)));
  CHECK(is_symplectic(neg_identity(Rank(3)).entries()));
}

TEST_CASE("random_symplectic") {
  CHECK(random_symplectic(Rank(3), 0, 17) == SymplecticMatrix::identity(Rank(3)));
  CHECK(random_symplectic(Rank(3), 25, 17) == random_symplectic(Rank(3), 25, 17));
  CHECK_FALSE(random_symplectic(Rank(3), 25, 17) == random_symplectic(Rank(3), 25, 18));
  for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK(is_symplectic(random_symplectic(Rank(2), 30, seed).entries()));
}

TEST_CASE("long words stay exact beyond 64 bits") {
  // Powers of a hyperbolic element grow exponentially.
  const auto h = sp({{2, 1}, {1, 1}});
  SymplecticMatrix a = SymplecticMatrix::identity(Rank(1));
  for (int k = 0; k < 60; ++k) a = a * h;
  CHECK_FALSE(fits_int64(a(0, 0)));
  CHECK(is_symplectic(a.entries()));
  CHECK(a * a.inverse() == SymplecticMatrix::identity(Rank(1)));
}

TEST_CASE("symplectic inverse") {
  Rng rng(8);
  for (int r = 1; r <= 4; ++r)
    for (int k = 0; k < 50; ++k) {
      const auto a = random_word(Rank(r), 20, rng);
      CHECK(a * a.inverse() == SymplecticMatrix::identity(Rank(r)));
      CHECK(a.inverse() * a == SymplecticMatrix::identity(Rank(r)));
    }
}

TEST_CASE("mod 2 reduction") {
  Rng rng(21);
  for (int r = 1; r <= 4; ++r)
    for (int k = 0; k < 50; ++k) {
      const auto a = random_word(Rank(r), 20, rng), b = random_word(Rank(r), 20, rng);
      CHECK(reduce_mod2(a * b) == reduce_mod2(a) * reduce_mod2(b));
      CHECK(is_symplectic(reduce_mod2(a)));
    }
  for (std::uint64_t v = 0; v < 16; ++v) {
    const BitVector bv(Rank(2), v);
    CHECK(is_symplectic(bit_transvection(bv)));
    for (std::uint64_t w = 0; w < 16; ++w)
      CHECK(phi_bar(bv, BitVector(Rank(2), w)) == oracle::phi_bar_bits(v, w, 4));
  }
  CHECK_FALSE(is_symplectic(BitMatrix(Rank(1), {0b01, 0b01})));
  CHECK_THROWS_AS(BitVector(Rank(1), 0b100), InvalidArgument);
  CHECK_THROWS_AS(BitVector(Rank(33), 0), RankTooLarge);
}

TEST_CASE("rank validation") {
  CHECK_THROWS_AS(Rank(0), InvalidArgument);
  CHECK_THROWS_AS(Vector(test::ints({1, 2, 3})), InvalidArgument);
}

}
