#include <array>
#include <set>

#include "smcg/cli.hpp"
#include "smcg/cocycle.hpp"
#include "smcg/jacobi.hpp"
#include "smcg/random.hpp"

namespace smcg::cli {

namespace {

constexpr std::array<std::uint64_t, 4> kModuli{0, 4, 24, 240};
constexpr std::size_t kMaxWord = 20;
constexpr int kExhaustiveRank = 3;

void tally(SuiteResult &s, bool ok) {
  ++s.checks;
  if (ok) ++s.passed;
}

QuadraticRefinement random_refinement(Rank r, Rng &rng) { return QuadraticRefinement(r, rng.next() & low_mask(r.dim())); }

SuiteResult cocycle_law(Rank r, std::uint64_t samples, Rng &rng, bool negative_control) {
  SuiteResult s{"cocycle_law"};
  for (std::uint64_t k = 0; k < samples; ++k) {
    const auto a = random_word(r, kMaxWord, rng);
    const auto b = random_word(r, kMaxWord, rng);
    tally(s, check_cocycle_law(Cocycle::principal(random_refinement(r, rng)), a, b));
    const Modulus m(kModuli[k % kModuli.size()]);
    tally(s, check_cocycle_law(Cocycle::coboundary(random_covector(r, m, rng)), a, b));
  }
  if (negative_control) {
    // s(T) = e_0 and s(T^2) = 0 cannot both hold for a cocycle unless
    // e_0 . T + e_0 = 0, which fails over Z.
    const auto t = transvection(Vector::u(r, 0));
    std::map<SymplecticMatrix, Covector> table{{t, Covector::dual_basis(r, 0, Modulus(0))},
                                               {t * t, Covector::zero(r, Modulus(0))}};
    tally(s, check_cocycle_law(Cocycle::tabulated(r, Modulus(0), std::move(table)), t, t));
  }
  return s;
}

SuiteResult torsor(Rank r, std::uint64_t samples, Rng &rng) {
  SuiteResult s{"torsor"};
  if (r.value() <= kExhaustiveRank) {
    const auto all = enumerate_refinements(r);
    const std::uint64_t n = all.size();
    std::set<std::uint64_t> image;
    for (std::uint64_t bits = 0; bits < n; ++bits)
      image.insert(qtranslate(QuadraticRefinement::zero(r), BitCovector(r, bits)).basis_values());
    tally(s, image.size() == n);
    for (const auto &psi : all)
      for (std::uint64_t bits = 0; bits < n; ++bits) {
        const BitCovector x(r, bits);
        tally(s, qdifference(qtranslate(psi, x), psi) == x);
      }
  } else {
    for (std::uint64_t k = 0; k < samples; ++k) {
      const auto psi = random_refinement(r, rng);
      const auto x = random_bit_covector(r, rng);
      tally(s, qdifference(qtranslate(psi, x), psi) == x && qtranslate(qtranslate(psi, x), x) == psi);
    }
  }
  return s;
}

SuiteResult additivity(Rank r, std::uint64_t samples, Rng &rng) {
  SuiteResult s{"additivity"};
  for (std::uint64_t k = 0; k < samples; ++k) {
    const auto psi = random_refinement(r, rng);
    const auto x = random_bit_covector(r, rng);
    const auto a = random_word(r, kMaxWord, rng);
    const BitCovector cob = reduce_mod2(coboundary_at(x.lift(Modulus(2)), a));
    tally(s, principal_at(qtranslate(psi, x), a) == principal_at(psi, a) + cob);
  }
  return s;
}

SuiteResult minus_id(Rank r, std::uint64_t samples, Rng &rng) {
  SuiteResult s{"minus_id"};
  const auto neg = neg_identity(r);
  if (r.value() <= kExhaustiveRank) {
    for (const auto &psi : enumerate_refinements(r)) tally(s, principal_at(psi, neg).is_zero());
  } else {
    for (std::uint64_t k = 0; k < samples; ++k) tally(s, principal_at(random_refinement(r, rng), neg).is_zero());
  }
  for (std::uint64_t k = 0; k < samples; ++k) {
    const Modulus m(kModuli[k % kModuli.size()]);
    tally(s, minus_id_constraint(Cocycle::coboundary(random_covector(r, m, rng)), random_word(r, kMaxWord, rng)));
  }
  return s;
}

SuiteResult group_axioms(Rank r, std::uint64_t samples, Rng &rng) {
  SuiteResult s{"group_axioms"};
  for (std::uint64_t k = 0; k < samples; ++k) {
    const ExtensionModel model(r, Modulus(kModuli[k % kModuli.size()]), random_refinement(r, rng));
    const auto g = model.random_member(rng), h = model.random_member(rng), f = model.random_member(rng);
    const auto e = model.identity();
    const bool ok = (g * h) * f == g * (h * f) && g * e == g && e * g == g && g * jinv(g) == e && jinv(g) * g == e &&
                    model.contains(g * h) && model.contains(jinv(g));
    tally(s, ok);
  }
  return s;
}

SuiteResult reframing(Rank r, std::uint64_t samples, Rng &rng) {
  SuiteResult s{"reframe"};
  for (std::uint64_t k = 0; k < samples; ++k) {
    const Modulus m(kModuli[k % kModuli.size()]);
    const ExtensionModel model(r, m, random_refinement(r, rng));
    const auto g = model.random_member(rng), h = model.random_member(rng);
    const auto y = random_covector(r, m, rng);
    const ExtensionModel target(r, m, qtranslate(model.base(), reduce_mod2(y)));
    const bool ok = target.contains(reframe(g, y)) && reframe(g * h, y) == reframe(g, y) * reframe(h, y) &&
                    reframe(reframe(g, y), -y) == g;
    tally(s, ok);
  }
  return s;
}

SuiteResult section(Rank r, std::uint64_t samples, Rng &rng) {
  SuiteResult s{"section"};
  for (std::size_t mi = 0; mi < kModuli.size(); ++mi) {
    const Modulus m(kModuli[mi]);
    const auto model = ExtensionModel::with_default_base(r, m);
    const auto verdict = splits(model);
    if (r.value() != 1) {
      tally(s, !verdict.splits && verdict.fixed_found == 0 && verdict.candidates_checked == (1ULL << r.dim()));
      continue;
    }
    tally(s, verdict.splits);
    if (!verdict.splits) continue;
    for (std::uint64_t k = mi; k < samples; k += kModuli.size()) {
      const auto a = random_word(r, kMaxWord, rng), b = random_word(r, kMaxWord, rng);
      const auto sa = verdict.section(a);
      tally(s, verdict.section(a * b) == sa * verdict.section(b) && project(sa) == a && model.contains(sa));
    }
  }
  return s;
}

} // namespace

std::vector<SuiteResult> run_verification(Rank r, std::uint64_t samples, std::uint64_t seed, bool negative_control) {
  Rng rng(seed);
  std::vector<SuiteResult> out;
  out.push_back(cocycle_law(r, samples, rng, negative_control));
  out.push_back(torsor(r, samples, rng));
  out.push_back(additivity(r, samples, rng));
  out.push_back(minus_id(r, samples, rng));
  out.push_back(group_axioms(r, samples, rng));
  out.push_back(reframing(r, samples, rng));
  out.push_back(section(r, samples, rng));
  return out;
}

} // namespace smcg::cli
