#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rsconcat {

/// Binary vector (u | v) of length 2n: the X part u and the Z part v of a
/// Pauli operator on n qubits. Each half is packed into its own run of
/// 64-bit words so that per-qubit operations are word-parallel.
class SymplecticVector {
 public:
  SymplecticVector() = default;
  explicit SymplecticVector(std::size_t n) : n_(n), half_(words_for(n)), words_(2 * half_, 0) {}

  std::size_t qubits() const { return n_; }

  bool u(std::size_t p) const { return bit(p); }
  bool v(std::size_t p) const { return bit(half_ * 64 + p); }
  void set_u(std::size_t p, bool value = true) { set(p, value); }
  void set_v(std::size_t p, bool value = true) { set(half_ * 64 + p, value); }
  void flip_u(std::size_t p) { words_[p / 64] ^= std::uint64_t{1} << (p % 64); }
  void flip_v(std::size_t p) { flip_u(half_ * 64 + p); }

  /// Bit at logical column c in [0, 2n): u occupies [0, n), v occupies [n, 2n).
  bool column(std::size_t c) const { return c < n_ ? u(c) : v(c - n_); }
  void flip_column(std::size_t c) { c < n_ ? flip_u(c) : flip_v(c - n_); }

  /// Bits u[offset, offset+len) packed into the low bits of the result; len <= 64.
  std::uint64_t u_bits(std::size_t offset, std::size_t len) const { return extract(offset, len); }
  std::uint64_t v_bits(std::size_t offset, std::size_t len) const {
    return extract(half_ * 64 + offset, len);
  }

  SymplecticVector& operator^=(const SymplecticVector& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend SymplecticVector operator^(SymplecticVector a, const SymplecticVector& b) {
    a ^= b;
    return a;
  }
  friend bool operator==(const SymplecticVector&, const SymplecticVector&) = default;

  bool is_zero() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Number of qubits p with (u_p, v_p) != (0, 0).
  std::size_t weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < half_; ++i) w += std::popcount(words_[i] | words_[half_ + i]);
    return w;
  }

  /// Parity of u.v' + v.u'.
  int product(const SymplecticVector& o) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < half_; ++i)
      acc ^= (words_[i] & o.words_[half_ + i]) ^ (words_[half_ + i] & o.words_[i]);
    return std::popcount(acc) & 1;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::size_t words_per_half() const { return half_; }

  /// "<u-bits>|<v-bits>" with bit p at string index p.
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument on malformed input.
  static SymplecticVector parse(std::string_view text);

 private:
  static std::size_t words_for(std::size_t n) { return (n + 63) / 64; }
  bool bit(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value) {
    const auto mask = std::uint64_t{1} << (i % 64);
    if (value)
      words_[i / 64] |= mask;
    else
      words_[i / 64] &= ~mask;
  }
  std::uint64_t extract(std::size_t offset, std::size_t len) const;

  std::size_t n_ = 0;
  std::size_t half_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row space generator over GF(2); all rows act on the same n qubits.
struct BinaryMatrix {
  std::size_t n = 0;
  std::vector<SymplecticVector> rows;

  std::size_t size() const { return rows.size(); }
  bool empty() const { return rows.empty(); }
};

/// Reduced row echelon form with leftmost pivots; columns are ordered
/// u_0..u_{n-1}, v_0..v_{n-1}.
struct RowReduction {
  std::size_t rank = 0;
  BinaryMatrix reduced;
  std::vector<std::size_t> pivots;  // logical column of each reduced row
};

RowReduction row_reduce(BinaryMatrix m);

int symplectic_product(const SymplecticVector& x, const SymplecticVector& y);
std::size_t symplectic_weight(const SymplecticVector& x);

/// x in rowspace(r.reduced).
bool in_span(const RowReduction& r, const SymplecticVector& x);
/// Residue of x after elimination against r.reduced; zero iff in span.
SymplecticVector reduce_against(const RowReduction& r, SymplecticVector x);

struct DualityReport {
  bool all_orthogonal = true;
  bool dims_complementary = true;
  bool contained = true;
  std::size_t rank_s = 0;
  std::size_t rank_n = 0;
  std::size_t products_checked = 0;
  /// (stabilizer row, normalizer row) pairs with product 1, capped.
  std::vector<std::pair<std::size_t, std::size_t>> non_orthogonal;
  /// Stabilizer rows outside the normalizer span, capped.
  std::vector<std::size_t> not_contained;

  bool passed() const { return all_orthogonal && dims_complementary && contained; }
};

/// Symplectic duality of a stabilizer/normalizer generator pair: all
/// cross products vanish, ranks sum to 2n, and rowspace(S) is inside
/// rowspace(N).
DualityReport verify_duality(const BinaryMatrix& stabilizer, const BinaryMatrix& normalizer);

}  // namespace rsconcat
