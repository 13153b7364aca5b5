#include "smcg/symplectic.hpp"

#include <algorithm>
#include <string>

#include "smcg/random.hpp"

namespace smcg {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start || !std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

void require_same_rank(Rank a, Rank b, const char *what) {
  if (a != b)
    throw RankMismatch(std::string(what) + ": rank " + std::to_string(a.value()) + " vs " +
                       std::to_string(b.value()));
}

Rank::Rank(int r) : r_(r) {
  if (r < 1) throw InvalidArgument("rank must be at least 1, got " + std::to_string(r));
}

bool Modulus::reduces_to(Modulus target) const {
  if (target.is_integral()) return is_integral();
  return is_integral() || m_ % target.m_ == 0;
}

Integer Modulus::normalize(const Integer &a) const {
  if (is_integral()) return a;
  return mod_floor(a, Integer(static_cast<unsigned long>(m_)));
}

// --- Vector -----------------------------------------------------------------

Vector::Vector(std::vector<Integer> coords) : coords_(std::move(coords)) {
  if (coords_.empty() || coords_.size() % 2 != 0)
    throw InvalidArgument("vector length must be a positive even number");
}

Vector Vector::zero(Rank r) { return Vector(std::vector<Integer>(r.dim())); }

Vector Vector::basis(Rank r, std::size_t k) {
  if (k >= r.dim()) throw InvalidArgument("basis index out of range");
  std::vector<Integer> c(r.dim());
  c[k] = 1;
  return Vector(std::move(c));
}

Vector Vector::operator+(const Vector &o) const {
  require_same_rank(rank(), o.rank(), "vector sum");
  std::vector<Integer> c(dim());
  for (std::size_t k = 0; k < dim(); ++k) c[k] = coords_[k] + o.coords_[k];
  return Vector(std::move(c));
}

Vector Vector::operator-(const Vector &o) const { return *this + (-o); }

Vector Vector::operator-() const {
  std::vector<Integer> c(dim());
  for (std::size_t k = 0; k < dim(); ++k) c[k] = -coords_[k];
  return Vector(std::move(c));
}

Vector operator*(const Integer &s, const Vector &v) {
  std::vector<Integer> c(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) c[k] = s * v.coords_[k];
  return Vector(std::move(c));
}

// --- Covector ---------------------------------------------------------------

Covector::Covector(std::vector<Integer> coords, Modulus m) : coords_(std::move(coords)), m_(m) {
  if (coords_.empty() || coords_.size() % 2 != 0)
    throw InvalidArgument("covector length must be a positive even number");
  if (!m_.is_integral())
    for (auto &c : coords_) c = m_.normalize(c);
}

Covector Covector::zero(Rank r, Modulus m) { return Covector(std::vector<Integer>(r.dim()), m); }

Covector Covector::dual_basis(Rank r, std::size_t k, Modulus m) {
  if (k >= r.dim()) throw InvalidArgument("basis index out of range");
  std::vector<Integer> c(r.dim());
  c[k] = 1;
  return Covector(std::move(c), m);
}

bool Covector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer &c) { return c == 0; });
}

Integer Covector::operator()(const Vector &w) const {
  require_same_rank(rank(), w.rank(), "covector evaluation");
  Integer s = 0;
  for (std::size_t k = 0; k < dim(); ++k) s += coords_[k] * w[k];
  return m_.normalize(s);
}

Covector Covector::operator+(const Covector &o) const {
  require_same_rank(rank(), o.rank(), "covector sum");
  if (m_ != o.m_) throw InvalidModulus("covector sum: moduli differ");
  std::vector<Integer> c(dim());
  for (std::size_t k = 0; k < dim(); ++k) c[k] = coords_[k] + o.coords_[k];
  return Covector(std::move(c), m_);
}

Covector Covector::operator-(const Covector &o) const { return *this + (-o); }

Covector Covector::operator-() const {
  std::vector<Integer> c(dim());
  for (std::size_t k = 0; k < dim(); ++k) c[k] = -coords_[k];
  return Covector(std::move(c), m_);
}

Covector operator*(const Integer &s, const Covector &x) {
  std::vector<Integer> c(x.dim());
  for (std::size_t k = 0; k < x.dim(); ++k) c[k] = s * x.coords_[k];
  return Covector(std::move(c), x.m_);
}

// --- IntMatrix --------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) throw InvalidArgument("matrix data size does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>> &rows) {
  std::size_t n = rows.size();
  std::size_t c = n ? rows[0].size() : 0;
  std::vector<Integer> data;
  data.reserve(n * c);
  for (const auto &row : rows) {
    if (row.size() != c) throw InvalidArgument("ragged matrix rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return IntMatrix(n, c, std::move(data));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix &o) const {
  if (cols_ != o.rows_) throw InvalidArgument("matrix product shape mismatch");
  IntMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer &a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
    }
  return p;
}

std::strong_ordering operator<=>(const IntMatrix &a, const IntMatrix &b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (std::size_t k = 0; k < a.data_.size(); ++k) {
    int c = cmp(a.data_[k], b.data_[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

IntMatrix gram_matrix(Rank r) {
  IntMatrix j(r.dim(), r.dim());
  for (std::size_t i = 0; i < r.dim(); i += 2) {
    j(i, i + 1) = 1;
    j(i + 1, i) = -1;
  }
  return j;
}

bool is_symplectic(const IntMatrix &m) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0)
    throw InvalidArgument("symplectic test needs a square matrix of even positive dimension");
  IntMatrix j = gram_matrix(Rank(static_cast<int>(m.rows() / 2)));
  return m.transpose() * j * m == j;
}

// --- SymplecticMatrix -------------------------------------------------------

SymplecticMatrix::SymplecticMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!is_symplectic(m_)) throw NotSymplectic("matrix does not preserve the symplectic form");
}

SymplecticMatrix SymplecticMatrix::identity(Rank r) { return SymplecticMatrix(IntMatrix::identity(r.dim()), Trusted{}); }

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix &o) const {
  require_same_rank(rank(), o.rank(), "matrix product");
  return SymplecticMatrix(m_ * o.m_, Trusted{});
}

Vector SymplecticMatrix::operator*(const Vector &w) const {
  require_same_rank(rank(), w.rank(), "matrix action");
  std::vector<Integer> c(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t k = 0; k < dim(); ++k) c[i] += m_(i, k) * w[k];
  return Vector(std::move(c));
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  // J^{-1} = -J, so A^T J A = J gives (-J A^T J) A = Id.
  IntMatrix j = gram_matrix(rank());
  IntMatrix inv = j * m_.transpose() * j;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t k = 0; k < dim(); ++k) inv(i, k) = -inv(i, k);
  return SymplecticMatrix(std::move(inv), Trusted{});
}

Integer phi(const Vector &v, const Vector &w) {
  require_same_rank(v.rank(), w.rank(), "phi");
  Integer s = 0;
  for (std::size_t k = 0; k < v.dim(); k += 2) s += v[k] * w[k + 1] - v[k + 1] * w[k];
  return s;
}

SymplecticMatrix transvection(const Vector &v) {
  // Column j is T_v(e_j) = e_j + phi(v, e_j) v.
  std::size_t n = v.dim();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    // phi(v, e_j): -v_{j+1} for a u-slot, +v_{j-1} for a v-slot.
    Integer c = (j % 2 == 0) ? Integer(-v[j + 1]) : v[j - 1];
    if (c == 0) continue;
    for (std::size_t i = 0; i < n; ++i) m(i, j) += c * v[i];
  }
  return SymplecticMatrix(std::move(m));
}

SymplecticMatrix neg_identity(Rank r) {
  IntMatrix m(r.dim(), r.dim());
  for (std::size_t i = 0; i < r.dim(); ++i) m(i, i) = -1;
  return SymplecticMatrix(std::move(m));
}

SymplecticMatrix random_symplectic(Rank r, std::size_t word_length, Rng &rng) {
  const std::size_t n = static_cast<std::size_t>(r.value());
  // Candidates: u_i, v_i (2n of them), then u_i + v_j, u_i - v_j (2n^2).
  const std::uint64_t candidates = 2 * n + 2 * n * n;
  SymplecticMatrix a = SymplecticMatrix::identity(r);
  for (std::size_t step = 0; step < word_length; ++step) {
    std::uint64_t pick = rng.below(candidates);
    std::vector<Integer> c(r.dim());
    if (pick < 2 * n) {
      c[pick] = 1;
    } else {
      pick -= 2 * n;
      std::size_t sign = pick % 2, rest = pick / 2;
      std::size_t i = rest / n, j = rest % n;
      c[2 * i] = 1;
      c[2 * j + 1] += sign ? -1 : 1;
    }
    a = a * transvection(Vector(std::move(c)));
  }
  return a;
}

SymplecticMatrix random_symplectic(Rank r, std::size_t word_length, std::uint64_t seed) {
  Rng rng(seed);
  return random_symplectic(r, word_length, rng);
}

Covector act(const Covector &x, const SymplecticMatrix &a) {
  require_same_rank(x.rank(), a.rank(), "covector action");
  std::vector<Integer> c(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j)
    for (std::size_t k = 0; k < x.dim(); ++k) c[j] += x[k] * a(k, j);
  return Covector(std::move(c), x.modulus());
}

Covector reduce(const Covector &x, Modulus target) {
  if (!x.modulus().reduces_to(target))
    throw InvalidModulus("cannot reduce modulus " + std::to_string(x.modulus().value()) + " to " +
                         std::to_string(target.value()));
  return Covector(std::vector<Integer>(x.coords().begin(), x.coords().end()), target);
}

// --- mod 2 ------------------------------------------------------------------

std::uint64_t low_mask(std::size_t bits) { return bits >= 64 ? ~0ULL : ((1ULL << bits) - 1); }

std::uint64_t u_mask(Rank r) { return 0x5555555555555555ULL & low_mask(r.dim()); }

namespace {
int checked_bit_rank(Rank r) {
  if (r.value() > kMaxBitRank) throw RankTooLarge("mod 2 objects support rank at most 32");
  return r.value();
}
} // namespace

BitVector::BitVector(Rank r, std::uint64_t bits) : r_(checked_bit_rank(r)), bits_(bits) {
  if (bits & ~low_mask(r.dim())) throw InvalidArgument("bit vector has bits beyond 2r");
}

BitVector BitVector::operator+(const BitVector &o) const {
  require_same_rank(rank(), o.rank(), "bit vector sum");
  return BitVector(rank(), bits_ ^ o.bits_);
}

BitCovector::BitCovector(Rank r, std::uint64_t bits) : r_(checked_bit_rank(r)), bits_(bits) {
  if (bits & ~low_mask(r.dim())) throw InvalidArgument("bit covector has bits beyond 2r");
}

bool BitCovector::operator()(const BitVector &w) const {
  require_same_rank(rank(), w.rank(), "bit covector evaluation");
  return parity(bits_ & w.bits());
}

BitCovector BitCovector::operator+(const BitCovector &o) const {
  require_same_rank(rank(), o.rank(), "bit covector sum");
  return BitCovector(rank(), bits_ ^ o.bits_);
}

Covector BitCovector::lift(Modulus m) const {
  std::vector<Integer> c(rank().dim());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = (*this)[k] ? 1 : 0;
  return Covector(std::move(c), m);
}

BitMatrix::BitMatrix(Rank r, std::vector<std::uint64_t> columns) : r_(checked_bit_rank(r)), cols_(std::move(columns)) {
  if (cols_.size() != r.dim()) throw InvalidArgument("bit matrix needs 2r columns");
  for (auto c : cols_)
    if (c & ~low_mask(r.dim())) throw InvalidArgument("bit matrix column has bits beyond 2r");
}

BitMatrix BitMatrix::identity(Rank r) {
  std::vector<std::uint64_t> c(r.dim());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = 1ULL << k;
  return BitMatrix(r, std::move(c));
}

BitVector BitMatrix::operator*(const BitVector &w) const {
  require_same_rank(rank(), w.rank(), "bit matrix action");
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < cols_.size(); ++k)
    if (w[k]) out ^= cols_[k];
  return BitVector(rank(), out);
}

BitMatrix BitMatrix::operator*(const BitMatrix &o) const {
  require_same_rank(rank(), o.rank(), "bit matrix product");
  std::vector<std::uint64_t> c(cols_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = ((*this) * BitVector(rank(), o.cols_[k])).bits();
  return BitMatrix(rank(), std::move(c));
}

bool phi_bar(const BitVector &v, const BitVector &w) {
  require_same_rank(v.rank(), w.rank(), "phi_bar");
  return parity(v.bits() & swap_pairs(w.bits()));
}

BitMatrix bit_transvection(const BitVector &v) {
  std::vector<std::uint64_t> c(v.rank().dim());
  for (std::size_t k = 0; k < c.size(); ++k) {
    std::uint64_t e = 1ULL << k;
    c[k] = parity(v.bits() & swap_pairs(e)) ? (e ^ v.bits()) : e;
  }
  return BitMatrix(v.rank(), std::move(c));
}

bool is_symplectic(const BitMatrix &m) {
  const std::size_t n = m.rank().dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool expected = (i ^ 1) == j;
      if (parity(m.column(i) & swap_pairs(m.column(j))) != expected) return false;
    }
  return true;
}

BitVector reduce_mod2(const Vector &v) {
  std::uint64_t b = 0;
  for (std::size_t k = 0; k < v.dim(); ++k)
    if (!is_even(v[k])) b |= 1ULL << k;
  return BitVector(v.rank(), b);
}

BitCovector reduce_mod2(const Covector &x) {
  if (!x.modulus().admits_mod2())
    throw InvalidModulus("mod 2 reduction needs an even modulus or Z, got " + std::to_string(x.modulus().value()));
  std::uint64_t b = 0;
  for (std::size_t k = 0; k < x.dim(); ++k)
    if (!is_even(x[k])) b |= 1ULL << k;
  return BitCovector(x.rank(), b);
}

BitMatrix reduce_mod2(const SymplecticMatrix &a) {
  std::vector<std::uint64_t> c(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!is_even(a(i, j))) c[j] |= 1ULL << i;
  return BitMatrix(a.rank(), std::move(c));
}

BitCovector act(const BitCovector &x, const BitMatrix &a) {
  require_same_rank(x.rank(), a.rank(), "bit covector action");
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < a.rank().dim(); ++j)
    if (parity(x.bits() & a.column(j))) out |= 1ULL << j;
  return BitCovector(x.rank(), out);
}

} // namespace smcg
