#pragma once

// The Jacobi group Gamma(phi, C) = H*_c x| Sp(2r, Z) with
//   (x, A) . (y, B) = (x . B + y, AB),
// its subgroups Gamma(psi, C) = {(x, A) : x mod 2 = s(psi)(A)}, and the
// extension 0 -> 2H*_c -> Gamma(psi, C) -> Sp(2r, Z) -> 1.

#include <cstdint>
#include <optional>

#include "smcg/cocycle.hpp"
#include "smcg/quadratic.hpp"
#include "smcg/random.hpp"
#include "smcg/symplectic.hpp"

namespace smcg {

class JacobiElement {
public:
  JacobiElement(Covector x, SymplecticMatrix a);
  static JacobiElement identity(Rank r, Modulus m);

  Rank rank() const { return a_.rank(); }
  Modulus modulus() const { return x_.modulus(); }
  const Covector &x() const { return x_; }
  const SymplecticMatrix &matrix() const { return a_; }

  friend bool operator==(const JacobiElement &, const JacobiElement &) = default;

private:
  Covector x_;
  SymplecticMatrix a_;
};

JacobiElement jmul(const JacobiElement &g, const JacobiElement &h);
inline JacobiElement operator*(const JacobiElement &g, const JacobiElement &h) { return jmul(g, h); }
// (-x . A^{-1}, A^{-1}).
JacobiElement jinv(const JacobiElement &g);

// x mod 2 == s(psi)(A). Throws InvalidModulus for odd moduli.
bool gamma_psi_member(const JacobiElement &g, const QuadraticRefinement &psi);

// (x, Id) for x with every coordinate even.
JacobiElement include_fiber(const Covector &x);
SymplecticMatrix project(const JacobiElement &g);
JacobiElement reduce_modulus(const JacobiElement &g, Modulus target);
// (y, Id) g (y, Id)^{-1} = (y . A + x - y, A); carries Gamma(psi, C) onto
// Gamma(psi + y mod 2, C).
JacobiElement reframe(const JacobiElement &g, const Covector &y);

// The rank 1 refinement with psi(u_1) = psi(v_1) = 1, the unique fixed one.
QuadraticRefinement arf_one_form();
// A -> (0, A), a section into Gamma(arf_one_form(), C).
JacobiElement section_r1(const SymplecticMatrix &a, Modulus m);

// Arf 1 form for rank 1, the zero form otherwise.
QuadraticRefinement default_base(Rank r);

class ExtensionModel {
public:
  // m must be 0 or even.
  ExtensionModel(Rank r, Modulus m, QuadraticRefinement base);
  static ExtensionModel with_default_base(Rank r, Modulus m) { return ExtensionModel(r, m, default_base(r)); }

  Rank rank() const { return r_; }
  Modulus modulus() const { return m_; }
  const QuadraticRefinement &base() const { return base_; }

  JacobiElement identity() const { return JacobiElement::identity(r_, m_); }
  bool contains(const JacobiElement &g) const;
  // (s(psi)(A) lifted to {0,1}-coordinates, A): a member over A.
  JacobiElement canonical_lift(const SymplecticMatrix &a) const;
  // canonical_lift(A) times a random fiber element.
  JacobiElement random_member(Rng &rng, std::size_t max_word_length = 20) const;

private:
  Rank r_;
  Modulus m_;
  QuadraticRefinement base_;
};

struct SplittingVerdict {
  bool splits;
  Rank rank;
  Modulus modulus;
  QuadraticRefinement base;
  // Integer lift x of the coboundary witness; the section is A -> (x . A - x, A).
  std::optional<Covector> section_lift;
  std::uint64_t candidates_checked; // shifts searched for a fixed refinement
  std::uint64_t fixed_found;

  // Throws InvalidArgument when the extension does not split.
  JacobiElement section(const SymplecticMatrix &a) const;
};

// Requires m = 0 or 4 | m and r <= 8.
SplittingVerdict splits(const ExtensionModel &model);
SplittingVerdict splits(Rank r, Modulus m);

} // namespace smcg
