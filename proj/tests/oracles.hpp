#pragma once

// Brute-force reference computations used only by the tests. Each follows a
// definition directly and avoids the closed forms used in src/.

#include <cstdint>
#include <set>
#include <vector>

#include "smcg/quadratic.hpp"
#include "smcg/symplectic.hpp"

namespace oracle {

using smcg::Integer;

// phi(e_i, e_j) from the hyperbolic convention phi(u_k, v_k) = 1.
inline int phi_basis(std::size_t i, std::size_t j) {
  if (i / 2 != j / 2 || i == j) return 0;
  return i % 2 == 0 ? 1 : -1;
}

inline Integer phi(const smcg::Vector &v, const smcg::Vector &w) {
  Integer s = 0;
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j) s += v[i] * w[j] * phi_basis(i, j);
  return s;
}

inline smcg::Vector column(const smcg::SymplecticMatrix &a, std::size_t j) {
  std::vector<Integer> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a(i, j);
  return smcg::Vector(std::move(c));
}

// (x . A)(e_j) = x(A e_j).
inline smcg::Covector act(const smcg::Covector &x, const smcg::SymplecticMatrix &a) {
  std::vector<Integer> c(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) c[j] = x(column(a, j));
  return smcg::Covector(std::move(c), x.modulus());
}

inline bool phi_bar_bits(std::uint64_t v, std::uint64_t w, std::size_t dim) {
  int s = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (((v >> i) & 1) && ((w >> j) & 1)) s += phi_basis(i, j);
  return (s % 2 + 2) % 2 == 1;
}

// Builds psi(v) by adding basis vectors one at a time with the refinement
// identity psi(w + e_k) = psi(w) + psi(e_k) + phi_bar(w, e_k).
inline bool qeval(std::uint64_t psi_bits, std::uint64_t v, std::size_t dim) {
  bool value = false;
  std::uint64_t w = 0;
  for (std::size_t k = 0; k < dim; ++k) {
    if (!((v >> k) & 1)) continue;
    const std::uint64_t e = 1ULL << k;
    value = value ^ ((psi_bits >> k) & 1) ^ phi_bar_bits(w, e, dim);
    w |= e;
  }
  return value;
}

// Arf invariant as the majority value of psi.
inline bool arf_by_majority(const smcg::QuadraticRefinement &psi) {
  const std::size_t dim = psi.rank().dim();
  std::uint64_t ones = 0;
  for (std::uint64_t v = 0; v < (1ULL << dim); ++v) ones += qeval(psi.basis_values(), v, dim);
  return 2 * ones > (1ULL << dim);
}

// psi . A via qeval on each image column.
inline std::uint64_t qact_bits(std::uint64_t psi, const smcg::BitMatrix &a) {
  const std::size_t dim = a.rank().dim();
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < dim; ++k)
    if (qeval(psi, a.column(k), dim)) out |= 1ULL << k;
  return out;
}

// Orbit closure using matrix transvections and the generic action.
inline std::set<std::uint64_t> orbit(const smcg::QuadraticRefinement &psi) {
  const smcg::Rank r = psi.rank();
  std::vector<smcg::BitMatrix> gens;
  for (std::uint64_t v = 1; v < (1ULL << r.dim()); ++v) gens.push_back(smcg::bit_transvection(smcg::BitVector(r, v)));
  std::set<std::uint64_t> seen{psi.basis_values()};
  std::vector<std::uint64_t> stack{psi.basis_values()};
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (const auto &g : gens) {
      auto n = qact_bits(q, g);
      if (seen.insert(n).second) stack.push_back(n);
    }
  }
  return seen;
}

// Smallest n > 0 with n * step = 0 in Z_m.
inline std::uint64_t additive_order(std::uint64_t step, std::uint64_t m) {
  std::uint64_t n = 1, acc = step % m;
  while (acc != 0) {
    acc = (acc + step) % m;
    ++n;
  }
  return n;
}

} // namespace oracle
