#pragma once

// 1-cocycles s: Sp(2r, Z) -> H*_m, s(AB) = s(A) . B + s(B).

#include <map>
#include <optional>
#include <variant>

#include "smcg/quadratic.hpp"
#include "smcg/symplectic.hpp"

namespace smcg {

// s(x)(A) = x . A - x.
Covector coboundary_at(const Covector &x, const SymplecticMatrix &a);

// s(psi)(A) = psi . A - psi, with values in H*_2.
BitCovector principal_at(const QuadraticRefinement &psi, const SymplecticMatrix &a);

class Cocycle {
public:
  struct Coboundary {
    Covector x;
  };
  struct Principal {
    QuadraticRefinement psi;
  };
  // A finite table of values. No consistency is implied; it exists so that
  // law checks have something to reject.
  struct Tabulated {
    Rank rank;
    Modulus modulus;
    std::map<SymplecticMatrix, Covector> values;
  };

  static Cocycle coboundary(Covector x) { return Cocycle(Coboundary{std::move(x)}); }
  static Cocycle principal(QuadraticRefinement psi) { return Cocycle(Principal{psi}); }
  static Cocycle tabulated(Rank r, Modulus m, std::map<SymplecticMatrix, Covector> values);

  Rank rank() const;
  Modulus modulus() const;
  // Throws InvalidArgument for a matrix missing from a table.
  Covector operator()(const SymplecticMatrix &a) const;

  const std::variant<Coboundary, Principal, Tabulated> &rule() const { return rule_; }

private:
  template <class T> explicit Cocycle(T rule) : rule_(std::move(rule)) {}
  std::variant<Coboundary, Principal, Tabulated> rule_;
};

bool check_cocycle_law(const Cocycle &s, const SymplecticMatrix &a, const SymplecticMatrix &b);

// 2 s(A) = -(s(-Id) . A - s(-Id)), which every cocycle into a module where
// -Id acts by -1 satisfies. Needs modulus 0 or even.
bool minus_id_constraint(const Cocycle &s, const SymplecticMatrix &a);

struct CoboundaryWitness {
  BitCovector shift; // psi + shift is fixed by the whole group
};

// True iff every mod 2 transvection fixes psi, i.e. psi(v) = 1 for all v != 0.
bool fixed_by_all_transvections(const QuadraticRefinement &psi);

// Least shift (lexicographic) making psi + shift a fixed refinement, which
// exists iff [s(psi)] = 0. Rank at most 8.
std::optional<CoboundaryWitness> principal_coboundary_witness(const QuadraticRefinement &psi);

} // namespace smcg
