#include "smcg/mcg.hpp"

namespace smcg {

ManifoldParams::ManifoldParams(int p, Rank r) : p_(p), r_(r) {
  if (p != 3 && p != 7) throw InvalidArgument("p must be 3 or 7, got " + std::to_string(p));
}

MCGModel aut_model(int p, Rank r) {
  return MCGModel{ManifoldParams(p, r), Flavor::Smooth, ExtensionModel(r, Modulus(0), QuadraticRefinement::zero(r))};
}

MCGModel homotopy_model(int p, Rank r, std::optional<Modulus> modulus) {
  ManifoldParams params(p, r);
  const Modulus m = modulus.value_or(Modulus(2 * params.c()));
  if (!m.is_integral() && m.value() % 4 != 0)
    throw InvalidModulus("homotopy modulus must be 0 or divisible by 4, got " + std::to_string(m.value()));
  return MCGModel{params, Flavor::Homotopy, ExtensionModel(r, m, QuadraticRefinement::zero(r))};
}

JacobiElement dehn_twist(const MCGModel &model, std::size_t i, TwistKind kind, const Integer &alpha) {
  const Rank r = model.params.rank();
  if (i < 1 || i > static_cast<std::size_t>(r.value()))
    throw InvalidArgument("twist index must lie in [1, r]");
  if (!is_even(alpha)) throw InvalidArgument("twist parameter must be even");
  std::vector<Integer> x(r.dim());
  x[kind == TwistKind::U ? 2 * (i - 1) + 1 : 2 * (i - 1)] = alpha;
  return include_fiber(Covector(std::move(x), model.modulus()));
}

JacobiElement to_homotopy(const MCGModel &smooth, const MCGModel &homotopy, const JacobiElement &g) {
  if (smooth.flavor != Flavor::Smooth || homotopy.flavor != Flavor::Homotopy)
    throw InvalidArgument("to_homotopy maps a smooth model to a homotopy model");
  if (smooth.extension.base() != homotopy.extension.base())
    throw InvalidArgument("to_homotopy: models have different base refinements");
  if (!smooth.contains(g)) throw InvalidArgument("to_homotopy: element is not in the smooth model");
  return reduce_modulus(g, homotopy.modulus());
}

PontryaginRow pontryagin_row(int j) {
  if (j < 1) throw InvalidArgument("pontryagin coefficient index must be at least 1");
  PontryaginRow row{j, j % 2 == 1 ? 2 : 1, j <= 2 ? 2 : 1, 1, 0};
  mpz_fac_ui(row.factorial.get_mpz_t(), static_cast<unsigned long>(2 * j - 1));
  row.coefficient = row.a * row.c * row.factorial;
  return row;
}

Integer pontryagin_coefficient(int j) { return pontryagin_row(j).coefficient; }

SplittingTheoremVerdict splitting_theorem_verdict(int p, Rank r, std::optional<Modulus> modulus) {
  const MCGModel homotopy = homotopy_model(p, r, modulus);
  SplittingVerdict smooth_v = splits(r, Modulus(0));
  SplittingVerdict homotopy_v = splits(r, homotopy.modulus());
  if (smooth_v.splits != homotopy_v.splits) throw Error("smooth and homotopy splitting verdicts disagree");
  return SplittingTheoremVerdict{smooth_v.splits, homotopy_v.splits, std::move(smooth_v), std::move(homotopy_v)};
}

} // namespace smcg
