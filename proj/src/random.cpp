#include "smcg/random.hpp"

namespace smcg {

SymplecticMatrix random_word(Rank r, std::size_t max_length, Rng &rng) {
  return random_symplectic(r, static_cast<std::size_t>(rng.below(max_length + 1)), rng);
}

Covector random_covector(Rank r, Modulus m, Rng &rng, std::int64_t bound) {
  std::vector<Integer> c(r.dim());
  for (auto &x : c) {
    if (m.is_integral())
      x = static_cast<long>(rng.between(-bound, bound));
    else
      x = static_cast<unsigned long>(rng.below(m.value()));
  }
  return Covector(std::move(c), m);
}

Covector random_even_covector(Rank r, Modulus m, Rng &rng, std::int64_t bound) {
  if (!m.admits_mod2()) throw InvalidModulus("even covectors need an even modulus or Z");
  std::vector<Integer> c(r.dim());
  for (auto &x : c) {
    if (m.is_integral())
      x = 2 * static_cast<long>(rng.between(-bound / 2, bound / 2));
    else
      x = 2 * static_cast<unsigned long>(rng.below(m.value() / 2));
  }
  return Covector(std::move(c), m);
}

BitCovector random_bit_covector(Rank r, Rng &rng) { return BitCovector(r, rng.next() & low_mask(r.dim())); }

} // namespace smcg
