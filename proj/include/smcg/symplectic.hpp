#pragma once

// Exact linear algebra for the standard hyperbolic form on Z^{2r}.
//
// Basis order is (u_1, v_1, ..., u_r, v_r) with phi(u_i, v_i) = +1, so
// coordinate 2i is u_{i+1} and coordinate 2i+1 is v_{i+1}. Matrices act on
// column vectors from the left; covectors are rows acted on from the right,
// (x . A)(w) = x(A w).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "smcg/error.hpp"
#include "smcg/integer.hpp"

namespace smcg {

// Number of hyperbolic summands; the lattice has dimension 2r.
class Rank {
public:
  explicit Rank(int r);
  int value() const { return r_; }
  std::size_t dim() const { return 2 * static_cast<std::size_t>(r_); }
  friend bool operator==(Rank, Rank) = default;

private:
  int r_;
};

// Coefficient modulus of a covector. 0 stands for the integers.
class Modulus {
public:
  constexpr Modulus() = default;
  constexpr explicit Modulus(std::uint64_t m) : m_(m) {}

  constexpr std::uint64_t value() const { return m_; }
  constexpr bool is_integral() const { return m_ == 0; }
  constexpr bool admits_mod2() const { return m_ % 2 == 0; }

  // Reduction Z_m -> Z_target is defined iff target | m (anything reduces
  // from Z; nothing but Z reduces to Z).
  bool reduces_to(Modulus target) const;
  Integer normalize(const Integer &a) const;

  friend constexpr auto operator<=>(Modulus, Modulus) = default;

private:
  std::uint64_t m_ = 0;
};

class Vector {
public:
  explicit Vector(std::vector<Integer> coords);
  static Vector zero(Rank r);
  static Vector basis(Rank r, std::size_t k);
  static Vector u(Rank r, std::size_t i) { return basis(r, 2 * i); }
  static Vector v(Rank r, std::size_t i) { return basis(r, 2 * i + 1); }

  Rank rank() const { return Rank(static_cast<int>(coords_.size() / 2)); }
  std::size_t dim() const { return coords_.size(); }
  const Integer &operator[](std::size_t k) const { return coords_[k]; }
  std::span<const Integer> coords() const { return coords_; }

  Vector operator+(const Vector &o) const;
  Vector operator-(const Vector &o) const;
  Vector operator-() const;
  friend Vector operator*(const Integer &c, const Vector &v);
  friend bool operator==(const Vector &, const Vector &) = default;

private:
  std::vector<Integer> coords_;
};

class IntMatrix;
class SymplecticMatrix;
class BitCovector;

class Covector {
public:
  // Coordinates are reduced into [0, m) when m > 0.
  Covector(std::vector<Integer> coords, Modulus m);
  static Covector zero(Rank r, Modulus m);
  static Covector dual_basis(Rank r, std::size_t k, Modulus m);

  Rank rank() const { return Rank(static_cast<int>(coords_.size() / 2)); }
  std::size_t dim() const { return coords_.size(); }
  Modulus modulus() const { return m_; }
  const Integer &operator[](std::size_t k) const { return coords_[k]; }
  std::span<const Integer> coords() const { return coords_; }
  bool is_zero() const;

  // x(w), reduced by the modulus.
  Integer operator()(const Vector &w) const;

  Covector operator+(const Covector &o) const;
  Covector operator-(const Covector &o) const;
  Covector operator-() const;
  friend Covector operator*(const Integer &c, const Covector &x);
  friend bool operator==(const Covector &, const Covector &) = default;

private:
  std::vector<Integer> coords_;
  Modulus m_;
};

class IntMatrix {
public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> row_major);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>> &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Integer &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Integer &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix &o) const;
  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;
  friend std::strong_ordering operator<=>(const IntMatrix &a, const IntMatrix &b);

private:
  std::size_t rows_, cols_;
  std::vector<Integer> data_;
};

// Gram matrix of phi_r: block diagonal with blocks [[0, 1], [-1, 0]].
IntMatrix gram_matrix(Rank r);

// True iff M^T J M = J. Throws InvalidArgument unless M is square of even
// positive dimension.
bool is_symplectic(const IntMatrix &m);

// An integer matrix known to preserve phi_r.
class SymplecticMatrix {
public:
  // Throws NotSymplectic.
  explicit SymplecticMatrix(IntMatrix m);
  static SymplecticMatrix identity(Rank r);

  Rank rank() const { return Rank(static_cast<int>(m_.rows() / 2)); }
  std::size_t dim() const { return m_.rows(); }
  const IntMatrix &entries() const { return m_; }
  const Integer &operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  SymplecticMatrix operator*(const SymplecticMatrix &o) const;
  Vector operator*(const Vector &w) const;
  // A^{-1} = -J A^T J.
  SymplecticMatrix inverse() const;

  friend bool operator==(const SymplecticMatrix &, const SymplecticMatrix &) = default;
  friend std::strong_ordering operator<=>(const SymplecticMatrix &a, const SymplecticMatrix &b) {
    return a.m_ <=> b.m_;
  }

private:
  struct Trusted {};
  SymplecticMatrix(IntMatrix m, Trusted) : m_(std::move(m)) {}
  IntMatrix m_;
};

Integer phi(const Vector &v, const Vector &w);

// T_v(w) = w + phi(v, w) v.
SymplecticMatrix transvection(const Vector &v);
SymplecticMatrix neg_identity(Rank r);

// Product of word_length transvections T_v, v drawn from
// {u_i, v_i, u_i + v_j, u_i - v_j}, deterministic in seed.
SymplecticMatrix random_symplectic(Rank r, std::size_t word_length, std::uint64_t seed);

// x . A, i.e. the row vector x times A.
Covector act(const Covector &x, const SymplecticMatrix &a);

// Coordinatewise reduction into Z_target. Throws InvalidModulus unless
// x.modulus().reduces_to(target).
Covector reduce(const Covector &x, Modulus target);

// ---------------------------------------------------------------------------
// Mod 2 objects. Coordinate k lives in bit k, so 2r <= 64.

inline constexpr int kMaxBitRank = 32;

class BitVector {
public:
  BitVector(Rank r, std::uint64_t bits);
  Rank rank() const { return Rank(r_); }
  std::uint64_t bits() const { return bits_; }
  bool operator[](std::size_t k) const { return (bits_ >> k) & 1u; }
  BitVector operator+(const BitVector &o) const;
  friend bool operator==(const BitVector &, const BitVector &) = default;

private:
  int r_;
  std::uint64_t bits_;
};

class BitCovector {
public:
  BitCovector(Rank r, std::uint64_t bits);
  static BitCovector zero(Rank r) { return BitCovector(r, 0); }
  Rank rank() const { return Rank(r_); }
  std::uint64_t bits() const { return bits_; }
  bool operator[](std::size_t k) const { return (bits_ >> k) & 1u; }
  bool operator()(const BitVector &w) const;
  bool is_zero() const { return bits_ == 0; }
  BitCovector operator+(const BitCovector &o) const;
  // Integer lift with coordinates in {0, 1}, reduced into the given modulus.
  Covector lift(Modulus m) const;
  friend bool operator==(const BitCovector &, const BitCovector &) = default;

private:
  int r_;
  std::uint64_t bits_;
};

class BitMatrix {
public:
  // columns[k] is the image of the k-th basis vector.
  BitMatrix(Rank r, std::vector<std::uint64_t> columns);
  static BitMatrix identity(Rank r);

  Rank rank() const { return Rank(r_); }
  std::uint64_t column(std::size_t k) const { return cols_[k]; }
  bool operator()(std::size_t i, std::size_t j) const { return (cols_[j] >> i) & 1u; }

  BitVector operator*(const BitVector &w) const;
  BitMatrix operator*(const BitMatrix &o) const;
  friend bool operator==(const BitMatrix &, const BitMatrix &) = default;

private:
  int r_;
  std::vector<std::uint64_t> cols_;
};

std::uint64_t low_mask(std::size_t bits);
// Mask of the u-coordinates (even bit positions) among the low 2r bits.
std::uint64_t u_mask(Rank r);
// Swaps each (u_i, v_i) bit pair: the mod 2 covector phi(w, -) is swap_pairs(w).
inline std::uint64_t swap_pairs(std::uint64_t w) {
  constexpr std::uint64_t even = 0x5555555555555555ULL;
  return ((w & even) << 1) | ((w >> 1) & even);
}
inline bool parity(std::uint64_t w) { return (__builtin_popcountll(w) & 1) != 0; }

bool phi_bar(const BitVector &v, const BitVector &w);
BitMatrix bit_transvection(const BitVector &v);
bool is_symplectic(const BitMatrix &m);

BitVector reduce_mod2(const Vector &v);
BitCovector reduce_mod2(const Covector &x); // needs an even (or zero) modulus
BitMatrix reduce_mod2(const SymplecticMatrix &a);
BitCovector act(const BitCovector &x, const BitMatrix &a);

void require_same_rank(Rank a, Rank b, const char *what);

} // namespace smcg
