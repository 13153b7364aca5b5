#pragma once

#include <initializer_list>
#include <vector>

#include "smcg/symplectic.hpp"

namespace test {

inline std::vector<smcg::Integer> ints(std::initializer_list<long> xs) {
  std::vector<smcg::Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline smcg::Vector vec(std::initializer_list<long> xs) { return smcg::Vector(ints(xs)); }

inline smcg::Covector covec(std::initializer_list<long> xs, std::uint64_t m = 0) {
  return smcg::Covector(ints(xs), smcg::Modulus(m));
}

inline smcg::IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<smcg::Integer>> out;
  for (auto row : rows) out.push_back(ints(row));
  return smcg::IntMatrix::from_rows(out);
}

inline smcg::SymplecticMatrix sp(std::initializer_list<std::initializer_list<long>> rows) {
  return smcg::SymplecticMatrix(mat(rows));
}

} // namespace test
