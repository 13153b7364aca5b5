#include "smcg/quadratic.hpp"

#include <algorithm>

namespace smcg {

namespace {

void guard(Rank r, int limit, const char *what) {
  if (r.value() > limit)
    throw RankTooLarge(std::string(what) + " supports rank at most " + std::to_string(limit) + ", got " +
                       std::to_string(r.value()));
}

// Breadth-first closure of start under every T_v, v != 0, over a table of
// 2^{2r} slots. Slots already carrying a label are never revisited, so the
// same table can be shared across orbits; labelled counts its marked slots.
// Returns the member masks.
std::vector<std::uint64_t> bfs_closure(Rank r, std::uint64_t start, std::vector<std::uint8_t> &seen,
                                       std::uint64_t &labelled) {
  const std::uint64_t n = 1ULL << r.dim();
  const std::uint64_t umask = u_mask(r);
  std::vector<std::uint64_t> members{start};
  seen[start] = 1;
  ++labelled;
  // Once every slot is labelled nothing new can be reached.
  for (std::size_t head = 0; head < members.size() && labelled < n; ++head) {
    const std::uint64_t q = members[head];
    for (std::uint64_t v = 1; v < n; ++v) {
      // T_v fixes q when q(v) = 1 and translates it by phi_bar(v, -) otherwise.
      if (qeval_bits(q, v, umask)) continue;
      const std::uint64_t next = q ^ swap_pairs(v);
      if (!seen[next]) {
        seen[next] = 1;
        ++labelled;
        members.push_back(next);
      }
    }
  }
  return members;
}

} // namespace

QuadraticRefinement::QuadraticRefinement(Rank r, std::uint64_t basis_values) : r_(r.value()), bits_(basis_values) {
  if (r.value() > kMaxBitRank) throw RankTooLarge("quadratic refinements support rank at most 32");
  if (basis_values & ~low_mask(r.dim())) throw InvalidArgument("refinement has basis values beyond 2r");
}

QuadraticRefinement QuadraticRefinement::parse(std::string_view bits) {
  if (bits.empty() || bits.size() % 2 != 0) throw InvalidArgument("refinement bit string must have even positive length");
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1')
      mask |= 1ULL << k;
    else if (bits[k] != '0')
      throw InvalidArgument("refinement bit string may only contain 0 and 1");
  }
  return QuadraticRefinement(Rank(static_cast<int>(bits.size() / 2)), mask);
}

bool QuadraticRefinement::operator()(const BitVector &v) const { return qeval(*this, v); }

std::string QuadraticRefinement::to_string() const {
  std::string s(rank().dim(), '0');
  for (std::size_t k = 0; k < s.size(); ++k)
    if (basis_value(k)) s[k] = '1';
  return s;
}

std::strong_ordering operator<=>(const QuadraticRefinement &a, const QuadraticRefinement &b) {
  if (auto c = a.r_ <=> b.r_; c != 0) return c;
  const std::size_t dim = a.rank().dim();
  return lex_index(a.bits_, dim) <=> lex_index(b.bits_, dim);
}

std::uint64_t lex_index(std::uint64_t bits, std::size_t dim) {
  std::uint64_t key = 0;
  for (std::size_t k = 0; k < dim; ++k)
    if ((bits >> k) & 1u) key |= 1ULL << (dim - 1 - k);
  return key;
}

std::uint64_t from_lex_index(std::uint64_t index, std::size_t dim) { return lex_index(index, dim); }

bool qeval(const QuadraticRefinement &psi, const BitVector &v) {
  require_same_rank(psi.rank(), v.rank(), "qeval");
  return qeval_bits(psi.basis_values(), v.bits(), u_mask(psi.rank()));
}

QuadraticRefinement qact(const QuadraticRefinement &psi, const BitMatrix &a) {
  require_same_rank(psi.rank(), a.rank(), "qact");
  if (!is_symplectic(a)) throw NotSymplectic("qact: matrix is not symplectic mod 2");
  const std::uint64_t umask = u_mask(psi.rank());
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < psi.rank().dim(); ++k)
    if (qeval_bits(psi.basis_values(), a.column(k), umask)) out |= 1ULL << k;
  return QuadraticRefinement(psi.rank(), out);
}

QuadraticRefinement qact(const QuadraticRefinement &psi, const SymplecticMatrix &a) {
  return qact(psi, reduce_mod2(a));
}

QuadraticRefinement qact_transvection(const QuadraticRefinement &psi, const BitVector &v) {
  require_same_rank(psi.rank(), v.rank(), "qact_transvection");
  if (qeval(psi, v)) return psi;
  return QuadraticRefinement(psi.rank(), psi.basis_values() ^ swap_pairs(v.bits()));
}

QuadraticRefinement qtranslate(const QuadraticRefinement &psi, const BitCovector &x) {
  require_same_rank(psi.rank(), x.rank(), "qtranslate");
  return QuadraticRefinement(psi.rank(), psi.basis_values() ^ x.bits());
}

BitCovector qdifference(const QuadraticRefinement &psi1, const QuadraticRefinement &psi0) {
  require_same_rank(psi1.rank(), psi0.rank(), "qdifference");
  return BitCovector(psi1.rank(), psi1.basis_values() ^ psi0.basis_values());
}

bool arf(const QuadraticRefinement &psi) {
  const std::uint64_t b = psi.basis_values();
  return parity(b & (b >> 1) & u_mask(psi.rank()));
}

std::uint64_t arf_class_size(Rank r, bool arf_value) {
  const std::uint64_t big = 1ULL << (2 * r.value() - 1);
  const std::uint64_t small = 1ULL << (r.value() - 1);
  return arf_value ? big - small : big + small;
}

std::vector<QuadraticRefinement> enumerate_refinements(Rank r) {
  guard(r, kMaxEnumerationRank, "enumerate_refinements");
  const std::uint64_t n = 1ULL << r.dim();
  std::vector<QuadraticRefinement> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.emplace_back(r, from_lex_index(i, r.dim()));
  return out;
}

std::vector<QuadraticRefinement> orbit_of(const QuadraticRefinement &psi) {
  const Rank r = psi.rank();
  guard(r, kMaxEnumerationRank, "orbit_of");
  std::vector<std::uint8_t> seen(1ULL << r.dim(), 0);
  std::uint64_t labelled = 0;
  std::vector<QuadraticRefinement> out;
  for (auto m : bfs_closure(r, psi.basis_values(), seen, labelled)) out.emplace_back(r, m);
  std::sort(out.begin(), out.end());
  return out;
}

OrbitReport orbit_decomposition(Rank r) {
  guard(r, kMaxDecompositionRank, "orbit_decomposition");
  const std::size_t dim = r.dim();
  const std::uint64_t n = 1ULL << dim;
  std::vector<std::uint8_t> seen(n, 0);
  std::uint64_t labelled = 0;
  OrbitReport report{r, {}};
  // Scanning in lexicographic order makes each new start the least member.
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t start = from_lex_index(i, dim);
    if (seen[start]) continue;
    auto members = bfs_closure(r, start, seen, labelled);
    const QuadraticRefinement rep(r, start);
    const bool label = arf(rep);
    const bool constant =
        std::all_of(members.begin(), members.end(), [&](std::uint64_t m) { return arf(QuadraticRefinement(r, m)) == label; });
    report.orbits.push_back(Orbit{label, members.size(), rep, constant});
  }
  return report;
}

} // namespace smcg
