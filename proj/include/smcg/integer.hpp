#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace smcg {

// All homology/cohomology arithmetic is exact; entries of long transvection
// words overflow 64 bits quickly.
using Integer = mpz_class;

// Least non-negative residue of a mod m (m > 0).
inline Integer mod_floor(const Integer &a, const Integer &m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline std::string to_string(const Integer &a) { return a.get_str(10); }

// Throws std::invalid_argument on anything other than an optionally signed
// decimal literal.
Integer parse_integer(std::string_view text);

inline bool fits_int64(const Integer &a) {
  return mpz_fits_slong_p(a.get_mpz_t()) != 0 && sizeof(long) == 8;
}

inline std::int64_t to_int64(const Integer &a) { return a.get_si(); }

inline bool is_even(const Integer &a) { return mpz_even_p(a.get_mpz_t()) != 0; }

} // namespace smcg
