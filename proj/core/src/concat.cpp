#include "rsconcat/concat.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsconcat {

Expander::Expander(Field field, SelfDualBasis basis)
    : field_(field), basis_(std::move(basis)), m_(field_.degree() / 2) {
  if (field_.degree() % 2 != 0) {
    throw std::invalid_argument("concatenation needs an even extension degree 2m, got " +
                                std::to_string(field_.degree()));
  }
  if (basis_.size() != static_cast<std::size_t>(field_.degree())) {
    throw std::invalid_argument("basis size does not match the field degree");
  }
  const int n = blocks();
  pos_powers_.reserve(static_cast<std::size_t>(n));
  neg_powers_.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pos_powers_.push_back(field_.pow(field_.alpha(), i));
    neg_powers_.push_back(field_.pow(field_.alpha(), -i));
  }
}

BlockBits Expander::expand_block(int i, Element a_i, Element a_ni, std::uint32_t s_i,
                                 std::uint32_t t_i) const {
  const int m = m_;
  const std::uint32_t low = (1u << m) - 1;
  const std::uint32_t a = basis_.coords(a_i);
  const std::uint32_t an = basis_.coords(a_ni);
  const std::uint32_t s_top = (s_i >> m) & 1u;  // s_{i,m+1}
  const std::uint32_t t_top = (t_i >> m) & 1u;  // t_{i,m+1}

  // Coordinates (w.r.t. beta) of the bracketed field elements.
  const std::uint32_t x1 = (an & low) ^ s_top ^ ((s_i & low) << m);
  const std::uint32_t x2 = ((an >> m) & low) ^ t_top ^ ((t_i & low) << m);
  const std::uint32_t y1 = (a & low) | (s_top << m);
  const std::uint32_t y2 = ((a >> m) & low) | (t_top << m);

  const auto idx = static_cast<std::size_t>(i);
  auto scaled = [&](std::uint32_t coords, Element scale) -> std::uint64_t {
    return basis_.coords(field_.mul(scale, basis_.combine(coords)));
  };

  const int w = 2 * m + 1;
  BlockBits out;
  out.b = scaled(x1, neg_powers_[idx]);
  out.b |= static_cast<std::uint64_t>((a & 1u) ^ (s_i & 1u)) << (2 * m);
  out.b |= scaled(x2, neg_powers_[idx]) << w;
  out.b |= static_cast<std::uint64_t>(((a >> m) & 1u) ^ (t_i & 1u)) << (w + 2 * m);

  out.c = scaled(y1, pos_powers_[idx]);
  out.c |= static_cast<std::uint64_t>(s_top) << (2 * m);
  out.c |= scaled(y2, pos_powers_[idx]) << w;
  out.c |= static_cast<std::uint64_t>(t_top) << (w + 2 * m);
  return out;
}

SymplecticVector Expander::expand_codeword(const ExpansionInput& input) const {
  const auto n = static_cast<std::size_t>(blocks());
  if (input.a.size() != 2 * n || input.s.size() != n || input.t.size() != n) {
    throw std::invalid_argument("expansion input has wrong length for N = " + std::to_string(n));
  }
  const auto width = static_cast<std::size_t>(block_width());
  SymplecticVector out(static_cast<std::size_t>(qubits()));
  for (std::size_t i = 0; i < n; ++i) {
    const BlockBits blk = expand_block(static_cast<int>(i), input.a[i], input.a[n + i],
                                       input.s[i], input.t[i]);
    for (std::size_t j = 0; j < width; ++j) {
      if ((blk.b >> j) & 1u) out.set_u(i * width + j);
      if ((blk.c >> j) & 1u) out.set_v(i * width + j);
    }
  }
  return out;
}

bool Expander::check_block_injectivity(int i) const {
  const int k = field_.degree();
  const int bits = 2 * k + 2 * (m_ + 1);
  if (bits > kMaxInjectivityBits) {
    throw std::invalid_argument("block injectivity exhaust needs 2^" + std::to_string(bits) +
                                " inputs, over budget");
  }
  const int width = block_width();
  const std::uint32_t elem_mask = field_.order() - 1;
  const std::uint32_t par_mask = (1u << (m_ + 1)) - 1;
  std::vector<std::uint64_t> images;
  images.reserve(std::size_t{1} << bits);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << bits); ++x) {
    const Element a_i{static_cast<std::uint32_t>(x) & elem_mask};
    const Element a_ni{static_cast<std::uint32_t>(x >> k) & elem_mask};
    const auto s = static_cast<std::uint32_t>(x >> (2 * k)) & par_mask;
    const auto t = static_cast<std::uint32_t>(x >> (2 * k + m_ + 1)) & par_mask;
    const BlockBits blk = expand_block(i, a_i, a_ni, s, t);
    images.push_back(blk.b | (blk.c << width));
  }
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

CodeParameters CodeParameters::of(int m, int K) {
  CodeParameters p;
  p.m = m;
  p.N = (1 << (2 * m)) - 1;
  p.K = K;
  p.n = 2 * p.N * (2 * m + 1);
  p.k = 2 * m * (p.N - 2 * K);
  return p;
}

namespace {

BinaryMatrix generators_from(const Expander& ex, const std::vector<FieldVector>& field_gens) {
  const auto n_blocks = static_cast<std::size_t>(ex.blocks());
  const auto& f = ex.field();
  BinaryMatrix out{static_cast<std::size_t>(ex.qubits()), {}};
  ExpansionInput in{FieldVector(2 * n_blocks), std::vector<std::uint32_t>(n_blocks),
                    std::vector<std::uint32_t>(n_blocks)};
  // GF(2)-span of a GF(2^{2m})-linear code: every generator times every
  // basis element.
  for (const auto& g : field_gens) {
    for (Element beta : ex.basis().elements()) {
      for (std::size_t p = 0; p < g.size(); ++p) in.a[p] = f.mul(beta, g[p]);
      out.rows.push_back(ex.expand_codeword(in));
    }
  }
  std::fill(in.a.begin(), in.a.end(), Element{0});
  for (auto* params : {&in.s, &in.t}) {
    for (std::size_t i = 0; i < n_blocks; ++i) {
      for (int j = 0; j <= ex.m(); ++j) {
        (*params)[i] = 1u << j;
        out.rows.push_back(ex.expand_codeword(in));
        (*params)[i] = 0;
      }
    }
  }
  return out;
}

}  // namespace

BinaryMatrix stabilizer_generators(const Expander& ex, const CssPair& css) {
  return generators_from(ex, css.s_gens);
}

BinaryMatrix normalizer_generators(const Expander& ex, const CssPair& css) {
  return generators_from(ex, css.n_gens);
}

StabilizerCodeL build_code(int m, int K) {
  if (m < 1 || 2 * m > kMaxDegree) {
    throw std::invalid_argument("m must be in [1, " + std::to_string(kMaxDegree / 2) + "]");
  }
  const Field field(2 * m);
  return build_code(field, find_self_dual_basis(field), K);
}

StabilizerCodeL build_code(const Field& field, const SelfDualBasis& basis, int K) {
  const Expander ex(field, basis);
  const auto params = CodeParameters::of(ex.m(), K);
  auto pair = build_rs_pair(field, K);
  const auto css = css_generators(pair.code, pair.dual);

  auto rs = row_reduce(stabilizer_generators(ex, css));
  auto rn = row_reduce(normalizer_generators(ex, css));
  if (static_cast<int>(rs.rank) != params.rank_s() || static_cast<int>(rn.rank) != params.rank_n()) {
    throw std::logic_error("rank mismatch: rank(S_L) = " + std::to_string(rs.rank) + " (expected " +
                           std::to_string(params.rank_s()) + "), rank(N_L) = " +
                           std::to_string(rn.rank) + " (expected " +
                           std::to_string(params.rank_n()) + ")");
  }
  return StabilizerCodeL{params,
                         field,
                         basis,
                         std::move(rs.reduced),
                         std::move(rn.reduced),
                         std::move(pair.warning)};
}

DualityReport verify_lemma2(const StabilizerCodeL& code) {
  return verify_duality(code.s_matrix, code.n_matrix);
}

std::size_t QuaternaryVector::weight() const {
  return static_cast<std::size_t>(
      std::count_if(symbols.begin(), symbols.end(), [](std::uint8_t s) { return s != 0; }));
}

QuaternaryVector to_quaternary(const SymplecticVector& x) {
  QuaternaryVector q;
  q.symbols.resize(x.qubits());
  for (std::size_t p = 0; p < x.qubits(); ++p)
    q.symbols[p] = static_cast<std::uint8_t>((x.u(p) ? 1 : 0) | (x.v(p) ? 2 : 0));
  return q;
}

}  // namespace rsconcat
