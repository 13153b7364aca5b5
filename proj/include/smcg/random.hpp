#pragma once

#include <cstdint>
#include <random>

#include "smcg/integer.hpp"
#include "smcg/symplectic.hpp"

namespace smcg {

// Seeded generator with platform-independent draws (std distributions are
// implementation-defined, so reports would not be byte-stable).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform-ish in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

private:
  std::mt19937_64 engine_;
};

SymplecticMatrix random_symplectic(Rank r, std::size_t word_length, Rng &rng);
// Word length drawn uniformly from [0, max_length].
SymplecticMatrix random_word(Rank r, std::size_t max_length, Rng &rng);
// Residues in [0, m) for m > 0, integers in [-bound, bound] for Z.
Covector random_covector(Rank r, Modulus m, Rng &rng, std::int64_t bound = 1000);
// As random_covector, but every coordinate is even.
Covector random_even_covector(Rank r, Modulus m, Rng &rng, std::int64_t bound = 1000);
BitCovector random_bit_covector(Rank r, Rng &rng);

} // namespace smcg
