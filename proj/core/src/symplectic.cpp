#include "rsconcat/symplectic.hpp"

#include <stdexcept>

namespace rsconcat {

namespace {
constexpr std::size_t kWitnessCap = 16;
}

std::uint64_t SymplecticVector::extract(std::size_t offset, std::size_t len) const {
  if (len == 0) return 0;
  const std::size_t w = offset / 64;
  const std::size_t s = offset % 64;
  std::uint64_t out = words_[w] >> s;
  if (s + len > 64 && w + 1 < words_.size()) out |= words_[w + 1] << (64 - s);
  return len == 64 ? out : out & ((std::uint64_t{1} << len) - 1);
}

std::string SymplecticVector::to_string() const {
  std::string s(2 * n_ + 1, '0');
  for (std::size_t p = 0; p < n_; ++p) {
    if (u(p)) s[p] = '1';
    if (v(p)) s[n_ + 1 + p] = '1';
  }
  s[n_] = '|';
  return s;
}

SymplecticVector SymplecticVector::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("missing '|' separator");
  const std::size_t n = bar;
  if (text.size() != 2 * n + 1) {
    throw std::invalid_argument("halves differ in length: expected " + std::to_string(2 * n + 1) +
                                " characters, got " + std::to_string(text.size()));
  }
  SymplecticVector x(n);
  for (std::size_t p = 0; p < n; ++p) {
    const char cu = text[p];
    const char cv = text[n + 1 + p];
    if ((cu != '0' && cu != '1') || (cv != '0' && cv != '1')) {
      throw std::invalid_argument("non-binary character in row");
    }
    if (cu == '1') x.set_u(p);
    if (cv == '1') x.set_v(p);
  }
  return x;
}

RowReduction row_reduce(BinaryMatrix m) {
  RowReduction out;
  auto& rows = m.rows;
  const std::size_t cols = 2 * m.n;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].column(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].column(c)) rows[i] ^= rows[r];
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

int symplectic_product(const SymplecticVector& x, const SymplecticVector& y) {
  if (x.qubits() != y.qubits()) throw std::invalid_argument("symplectic_product: length mismatch");
  return x.product(y);
}

std::size_t symplectic_weight(const SymplecticVector& x) { return x.weight(); }

SymplecticVector reduce_against(const RowReduction& r, SymplecticVector x) {
  if (x.qubits() != r.reduced.n) throw std::invalid_argument("in_span: length mismatch");
  for (std::size_t i = 0; i < r.rank; ++i)
    if (x.column(r.pivots[i])) x ^= r.reduced.rows[i];
  return x;
}

bool in_span(const RowReduction& r, const SymplecticVector& x) {
  return reduce_against(r, x).is_zero();
}

DualityReport verify_duality(const BinaryMatrix& stabilizer, const BinaryMatrix& normalizer) {
  if (stabilizer.n != normalizer.n) throw std::invalid_argument("verify_duality: qubit mismatch");
  DualityReport rep;
  for (std::size_t i = 0; i < stabilizer.size(); ++i) {
    for (std::size_t j = 0; j < normalizer.size(); ++j) {
      ++rep.products_checked;
      if (stabilizer.rows[i].product(normalizer.rows[j]) != 0) {
        rep.all_orthogonal = false;
        if (rep.non_orthogonal.size() < kWitnessCap) rep.non_orthogonal.emplace_back(i, j);
      }
    }
  }
  const auto rs = row_reduce(stabilizer);
  const auto rn = row_reduce(normalizer);
  rep.rank_s = rs.rank;
  rep.rank_n = rn.rank;
  rep.dims_complementary = rs.rank + rn.rank == 2 * stabilizer.n;
  for (std::size_t i = 0; i < stabilizer.size(); ++i) {
    if (!in_span(rn, stabilizer.rows[i])) {
      rep.contained = false;
      if (rep.not_contained.size() < kWitnessCap) rep.not_contained.push_back(i);
    }
  }
  return rep;
}

}  // namespace rsconcat
