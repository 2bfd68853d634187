#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsconcat/field.hpp"
#include "rsconcat/rs.hpp"
#include "rsconcat/symplectic.hpp"

namespace rsconcat {

/// Free parameters and RS symbols that feed one expansion. Bit (j-1) of
/// s[i] is s_{i,j} for 1 <= j <= m+1; likewise for t.
struct ExpansionInput {
  FieldVector a;  // (a_0 .. a_{N-1} | a_N .. a_{2N-1})
  std::vector<std::uint32_t> s;
  std::vector<std::uint32_t> t;
};

/// One (4m+2)-bit block of each half. Bit (j-1) holds b_{i,j} resp. c_{i,j}.
struct BlockBits {
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  friend bool operator==(const BlockBits&, const BlockBits&) = default;
};

/// The per-block inner maps of the concatenated code over GF(2^{2m}). Block i
/// scales the X-side coordinates by alpha^{-i} and the Z-side coordinates by
/// alpha^{i}, so the N inner codes are pairwise distinct.
class Expander {
 public:
  Expander(Field field, SelfDualBasis basis);

  const Field& field() const { return field_; }
  const SelfDualBasis& basis() const { return basis_; }
  int m() const { return m_; }
  int blocks() const { return static_cast<int>(field_.group_order()); }
  int block_width() const { return 4 * m_ + 2; }
  int qubits() const { return blocks() * block_width(); }

  BlockBits expand_block(int i, Element a_i, Element a_ni, std::uint32_t s_i,
                         std::uint32_t t_i) const;
  /// Concatenation of expand_block over all blocks; GF(2)-linear.
  SymplecticVector expand_codeword(const ExpansionInput& input) const;

  /// Exhaustive injectivity of (a_i, a_{N+i}, s_i, t_i) -> block i. Requires
  /// 6m + 2 <= kMaxInjectivityBits input bits.
  bool check_block_injectivity(int i) const;

  static constexpr int kMaxInjectivityBits = 24;

 private:
  Field field_;
  SelfDualBasis basis_;
  int m_;
  std::vector<Element> pos_powers_;  // alpha^i
  std::vector<Element> neg_powers_;  // alpha^{-i}
};

struct CodeParameters {
  int m = 0;
  int N = 0;
  int K = 0;
  int n = 0;
  int k = 0;

  static CodeParameters of(int m, int K);
  int rank_s() const { return 2 * N * (m + 1) + 4 * m * K; }
  int rank_n() const { return 2 * n - rank_s(); }
};

/// L_{N,K}: stabilizer S_L and normalizer N_L, both stored as reduced row
/// echelon generator matrices.
struct StabilizerCodeL {
  CodeParameters params;
  Field field;
  SelfDualBasis basis;
  BinaryMatrix s_matrix;
  BinaryMatrix n_matrix;
  std::string warning;
};

/// Builds L_{N,K} with N = 2^{2m} - 1 over the default field and the
/// lexicographically smallest self-dual basis.
StabilizerCodeL build_code(int m, int K);
/// Same, over an explicit field of degree 2m and self-dual basis.
StabilizerCodeL build_code(const Field& field, const SelfDualBasis& basis, int K);

/// Unreduced generator lists: S_RS generators (times each beta_j) expanded
/// with s = t = 0, followed by every unit s and unit t with a = 0.
BinaryMatrix stabilizer_generators(const Expander& ex, const CssPair& css);
BinaryMatrix normalizer_generators(const Expander& ex, const CssPair& css);

DualityReport verify_lemma2(const StabilizerCodeL& code);

/// Symbols over GF(4) = {0, 1, w, w^2}; symbol p = u_p + w v_p is stored
/// as u_p | (v_p << 1), so 3 encodes 1 + w = w^2.
struct QuaternaryVector {
  std::vector<std::uint8_t> symbols;
  std::size_t weight() const;
};

QuaternaryVector to_quaternary(const SymplecticVector& x);

}  // namespace rsconcat
