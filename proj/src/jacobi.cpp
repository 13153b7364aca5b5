#include "smcg/jacobi.hpp"

namespace smcg {

JacobiElement::JacobiElement(Covector x, SymplecticMatrix a) : x_(std::move(x)), a_(std::move(a)) {
  require_same_rank(x_.rank(), a_.rank(), "Jacobi element");
}

JacobiElement JacobiElement::identity(Rank r, Modulus m) {
  return JacobiElement(Covector::zero(r, m), SymplecticMatrix::identity(r));
}

JacobiElement jmul(const JacobiElement &g, const JacobiElement &h) {
  require_same_rank(g.rank(), h.rank(), "jmul");
  if (g.modulus() != h.modulus()) throw InvalidModulus("jmul: moduli differ");
  return JacobiElement(act(g.x(), h.matrix()) + h.x(), g.matrix() * h.matrix());
}

JacobiElement jinv(const JacobiElement &g) {
  SymplecticMatrix inv = g.matrix().inverse();
  Covector y = -act(g.x(), inv);
  return JacobiElement(std::move(y), std::move(inv));
}

bool gamma_psi_member(const JacobiElement &g, const QuadraticRefinement &psi) {
  require_same_rank(g.rank(), psi.rank(), "gamma_psi_member");
  return reduce_mod2(g.x()) == principal_at(psi, g.matrix());
}

JacobiElement include_fiber(const Covector &x) {
  if (!x.modulus().admits_mod2()) throw InvalidModulus("fiber 2H*_m needs modulus 0 or even");
  for (const auto &c : x.coords())
    if (!is_even(c)) throw InvalidArgument("fiber element must have even coordinates");
  return JacobiElement(x, SymplecticMatrix::identity(x.rank()));
}

SymplecticMatrix project(const JacobiElement &g) { return g.matrix(); }

JacobiElement reduce_modulus(const JacobiElement &g, Modulus target) {
  return JacobiElement(reduce(g.x(), target), g.matrix());
}

JacobiElement reframe(const JacobiElement &g, const Covector &y) {
  require_same_rank(g.rank(), y.rank(), "reframe");
  if (g.modulus() != y.modulus()) throw InvalidModulus("reframe: moduli differ");
  return JacobiElement(act(y, g.matrix()) + g.x() - y, g.matrix());
}

QuadraticRefinement arf_one_form() { return QuadraticRefinement(Rank(1), 0b11); }

JacobiElement section_r1(const SymplecticMatrix &a, Modulus m) {
  if (a.rank().value() != 1) throw InvalidArgument("section_r1 needs rank 1");
  return JacobiElement(Covector::zero(a.rank(), m), a);
}

QuadraticRefinement default_base(Rank r) { return r.value() == 1 ? arf_one_form() : QuadraticRefinement::zero(r); }

ExtensionModel::ExtensionModel(Rank r, Modulus m, QuadraticRefinement base) : r_(r), m_(m), base_(base) {
  require_same_rank(r, base.rank(), "extension model base");
  if (!m.admits_mod2()) throw InvalidModulus("extension model needs modulus 0 or even");
}

bool ExtensionModel::contains(const JacobiElement &g) const {
  return g.rank() == r_ && g.modulus() == m_ && gamma_psi_member(g, base_);
}

JacobiElement ExtensionModel::canonical_lift(const SymplecticMatrix &a) const {
  return JacobiElement(principal_at(base_, a).lift(m_), a);
}

JacobiElement ExtensionModel::random_member(Rng &rng, std::size_t max_word_length) const {
  return canonical_lift(random_word(r_, max_word_length, rng)) * include_fiber(random_even_covector(r_, m_, rng));
}

JacobiElement SplittingVerdict::section(const SymplecticMatrix &a) const {
  if (!section_lift) throw InvalidArgument("extension does not split; no section");
  return JacobiElement(coboundary_at(*section_lift, a), a);
}

SplittingVerdict splits(const ExtensionModel &model) {
  const Modulus m = model.modulus();
  if (!m.is_integral() && m.value() % 4 != 0)
    throw InvalidModulus("splitting criterion needs modulus 0 or divisible by 4, got " + std::to_string(m.value()));
  const Rank r = model.rank();
  auto witness = principal_coboundary_witness(model.base());

  // Full scan of the torsor for the certificate: how many refinements are fixed.
  std::uint64_t fixed = 0;
  const std::uint64_t total = 1ULL << r.dim();
  for (std::uint64_t bits = 0; bits < total; ++bits)
    if (fixed_by_all_transvections(QuadraticRefinement(r, bits))) ++fixed;

  SplittingVerdict v{witness.has_value(), r, m, model.base(), std::nullopt, total, fixed};
  if (witness) v.section_lift = witness->shift.lift(m);
  return v;
}

SplittingVerdict splits(Rank r, Modulus m) {
  if (r.value() > kMaxDecompositionRank) throw RankTooLarge("splits supports rank at most 8");
  return splits(ExtensionModel::with_default_base(r, m));
}

} // namespace smcg
