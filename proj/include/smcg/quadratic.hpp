#pragma once

// Quadratic refinements psi: F_2^{2r} -> F_2 of the mod 2 form,
//   psi(v + w) = psi(v) + psi(w) + phi_bar(v, w).
// A refinement is pinned down by its values on the basis, so it is stored
// as 2r bits (bit k = psi(e_k)). The set of refinements is a torsor under
// the mod 2 dual, and Sp acts on the right by precomposition.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "smcg/symplectic.hpp"

namespace smcg {

inline constexpr int kMaxEnumerationRank = 12;
inline constexpr int kMaxDecompositionRank = 8;

class QuadraticRefinement {
public:
  QuadraticRefinement(Rank r, std::uint64_t basis_values);
  static QuadraticRefinement zero(Rank r) { return QuadraticRefinement(r, 0); }
  // "0110" lists psi(u_1), psi(v_1), psi(u_2), psi(v_2).
  static QuadraticRefinement parse(std::string_view bits);

  Rank rank() const { return Rank(r_); }
  std::uint64_t basis_values() const { return bits_; }
  bool basis_value(std::size_t k) const { return (bits_ >> k) & 1u; }
  bool operator()(const BitVector &v) const;
  std::string to_string() const;

  friend bool operator==(const QuadraticRefinement &, const QuadraticRefinement &) = default;
  // Lexicographic on (psi(u_1), psi(v_1), ...).
  friend std::strong_ordering operator<=>(const QuadraticRefinement &a, const QuadraticRefinement &b);

private:
  int r_;
  std::uint64_t bits_;
};

// Position of a 2r-bit pattern in lexicographic order of its coordinate tuple.
std::uint64_t lex_index(std::uint64_t bits, std::size_t dim);
std::uint64_t from_lex_index(std::uint64_t index, std::size_t dim);

// sum_i a_i psi(u_i) + b_i psi(v_i) + a_i b_i over F_2.
inline bool qeval_bits(std::uint64_t psi, std::uint64_t v, std::uint64_t umask) {
  return parity((v & psi) ^ (v & (v >> 1) & umask));
}

bool qeval(const QuadraticRefinement &psi, const BitVector &v);

// psi . A = psi o A. Throws NotSymplectic if a is not symplectic mod 2.
QuadraticRefinement qact(const QuadraticRefinement &psi, const BitMatrix &a);
QuadraticRefinement qact(const QuadraticRefinement &psi, const SymplecticMatrix &a);
// psi . T_v in closed form: psi + (1 + psi(v)) phi_bar(v, -).
QuadraticRefinement qact_transvection(const QuadraticRefinement &psi, const BitVector &v);

QuadraticRefinement qtranslate(const QuadraticRefinement &psi, const BitCovector &x);
// The x with psi1 = psi0 + x.
BitCovector qdifference(const QuadraticRefinement &psi1, const QuadraticRefinement &psi0);

// sum_i psi(u_i) psi(v_i).
bool arf(const QuadraticRefinement &psi);

// Sizes 2^{2r-1} + 2^{r-1} (Arf 0) and 2^{2r-1} - 2^{r-1} (Arf 1).
std::uint64_t arf_class_size(Rank r, bool arf_value);

// All 2^{2r} refinements in lexicographic order.
std::vector<QuadraticRefinement> enumerate_refinements(Rank r);

// Closure of {psi} under all mod 2 transvections T_v, v != 0; sorted.
std::vector<QuadraticRefinement> orbit_of(const QuadraticRefinement &psi);

struct Orbit {
  bool arf;
  std::uint64_t size;
  QuadraticRefinement representative; // lexicographically least member
  bool arf_constant;                  // every member shares the label
};

struct OrbitReport {
  Rank rank;
  std::vector<Orbit> orbits; // ordered by representative
};

OrbitReport orbit_decomposition(Rank r);

} // namespace smcg
