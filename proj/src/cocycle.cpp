#include "smcg/cocycle.hpp"

namespace smcg {

Covector coboundary_at(const Covector &x, const SymplecticMatrix &a) { return act(x, a) - x; }

BitCovector principal_at(const QuadraticRefinement &psi, const SymplecticMatrix &a) {
  return qdifference(qact(psi, a), psi);
}

Cocycle Cocycle::tabulated(Rank r, Modulus m, std::map<SymplecticMatrix, Covector> values) {
  for (const auto &[a, x] : values) {
    require_same_rank(r, a.rank(), "tabulated cocycle key");
    require_same_rank(r, x.rank(), "tabulated cocycle value");
    if (x.modulus() != m) throw InvalidModulus("tabulated cocycle value has the wrong modulus");
  }
  return Cocycle(Tabulated{r, m, std::move(values)});
}

Rank Cocycle::rank() const {
  return std::visit(
      [](const auto &s) -> Rank {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Coboundary>)
          return s.x.rank();
        else if constexpr (std::is_same_v<T, Principal>)
          return s.psi.rank();
        else
          return s.rank;
      },
      rule_);
}

Modulus Cocycle::modulus() const {
  return std::visit(
      [](const auto &s) -> Modulus {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Coboundary>)
          return s.x.modulus();
        else if constexpr (std::is_same_v<T, Principal>)
          return Modulus(2);
        else
          return s.modulus;
      },
      rule_);
}

Covector Cocycle::operator()(const SymplecticMatrix &a) const {
  return std::visit(
      [&](const auto &s) -> Covector {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Coboundary>) {
          return coboundary_at(s.x, a);
        } else if constexpr (std::is_same_v<T, Principal>) {
          return principal_at(s.psi, a).lift(Modulus(2));
        } else {
          auto it = s.values.find(a);
          if (it == s.values.end()) throw InvalidArgument("tabulated cocycle has no value at this matrix");
          return it->second;
        }
      },
      rule_);
}

bool check_cocycle_law(const Cocycle &s, const SymplecticMatrix &a, const SymplecticMatrix &b) {
  return s(a * b) == act(s(a), b) + s(b);
}

bool minus_id_constraint(const Cocycle &s, const SymplecticMatrix &a) {
  if (!s.modulus().admits_mod2())
    throw InvalidModulus("minus_id_constraint needs modulus 0 or even");
  const Covector at_neg = s(neg_identity(a.rank()));
  return Integer(2) * s(a) == -(act(at_neg, a) - at_neg);
}

bool fixed_by_all_transvections(const QuadraticRefinement &psi) {
  const std::uint64_t n = 1ULL << psi.rank().dim();
  const std::uint64_t umask = u_mask(psi.rank());
  for (std::uint64_t v = 1; v < n; ++v)
    if (!qeval_bits(psi.basis_values(), v, umask)) return false;
  return true;
}

std::optional<CoboundaryWitness> principal_coboundary_witness(const QuadraticRefinement &psi) {
  const Rank r = psi.rank();
  if (r.value() > kMaxDecompositionRank)
    throw RankTooLarge("principal_coboundary_witness supports rank at most 8");
  const std::size_t dim = r.dim();
  for (std::uint64_t i = 0; i < (1ULL << dim); ++i) {
    const BitCovector shift(r, from_lex_index(i, dim));
    if (fixed_by_all_transvections(qtranslate(psi, shift))) return CoboundaryWitness{shift};
  }
  return std::nullopt;
}

} // namespace smcg
