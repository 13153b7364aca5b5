#pragma once

// Algebraic models of the mapping class groups of #_r S^p x S^p, p = 3, 7.
//
// Smooth flavor: Gamma(psi_F) over Z, with fiber 2H* the image of the
// Dehn twists. Homotopy flavor: its reduction modulo m_h, by default
// m_h = 2c with c = |S pi_{2p}(S^p)| (12 or 120), so that the kernel of the
// quotient on the fiber is 2cH* and the fiber is (Z_c)^{2r}.

#include <cstdint>
#include <optional>

#include "smcg/jacobi.hpp"

namespace smcg {

class ManifoldParams {
public:
  // Throws InvalidArgument unless p is 3 or 7.
  ManifoldParams(int p, Rank r);
  int p() const { return p_; }
  Rank rank() const { return r_; }
  // Order of the stable stem S pi_{2p}(S^p).
  std::uint64_t c() const { return p_ == 3 ? 12 : 120; }

private:
  int p_;
  Rank r_;
};

enum class Flavor { Smooth, Homotopy };

struct MCGModel {
  ManifoldParams params;
  Flavor flavor;
  ExtensionModel extension;

  Modulus modulus() const { return extension.modulus(); }
  bool contains(const JacobiElement &g) const { return extension.contains(g); }
  JacobiElement identity() const { return extension.identity(); }
};

// Base refinement psi_F: the zero form.
MCGModel aut_model(int p, Rank r);
// Modulus override must be 0 or divisible by 4.
MCGModel homotopy_model(int p, Rank r, std::optional<Modulus> modulus = std::nullopt);

enum class TwistKind { U, V };

// Twist about the sphere representing u_i (kind U: x(v_i) = alpha) or v_i
// (kind V: x(u_i) = alpha); i is 1-based, alpha even.
JacobiElement dehn_twist(const MCGModel &model, std::size_t i, TwistKind kind, const Integer &alpha);

// The quotient Aut(M_r) -> E(M_r): reduction of a smooth member into the
// homotopy model.
JacobiElement to_homotopy(const MCGModel &smooth, const MCGModel &homotopy, const JacobiElement &g);

struct PontryaginRow {
  int j;
  Integer a;         // (3 - (-1)^j) / 2
  Integer c;         // 2 for j = 1, 2; else 1
  Integer factorial; // (2j - 1)!
  Integer coefficient;
};

PontryaginRow pontryagin_row(int j);
// a_j c_j (2j - 1)!, taking the + sign.
Integer pontryagin_coefficient(int j);

struct SplittingTheoremVerdict {
  bool smooth;
  bool homotopy;
  SplittingVerdict smooth_detail;
  SplittingVerdict homotopy_detail;
};

// Throws Error if the two flavors disagree.
SplittingTheoremVerdict splitting_theorem_verdict(int p, Rank r, std::optional<Modulus> modulus = std::nullopt);

} // namespace smcg
