#include "rsconcat/rs.hpp"

#include <stdexcept>

namespace rsconcat {

namespace {

// Reduced row echelon form over the field; returns pivot columns.
std::vector<int> reduce_rows(const Field& f, std::vector<FieldVector>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Element inv = f.inverse(rows[r][c]);
    for (auto& e : rows[r]) e = f.mul(e, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Element factor = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] += f.mul(factor, rows[r][j]);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

RsCode::RsCode(const Field& field, int first_degree, int dimension)
    : field_(field), first_degree_(first_degree), dimension_(dimension) {
  const int n = length();
  if (dimension < 0 || dimension > n || first_degree < 0) {
    throw std::invalid_argument("invalid evaluation code dimension " + std::to_string(dimension));
  }
  points_.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) points_.push_back(field_.pow(field_.alpha(), i));
  generator_.reserve(static_cast<std::size_t>(dimension));
  for (int d = first_degree; d < first_degree + dimension; ++d) {
    FieldVector row;
    row.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) row.push_back(field_.pow(points_[static_cast<std::size_t>(i)], d));
    generator_.push_back(std::move(row));
  }
  reduced_ = generator_;
  pivots_ = reduce_rows(field_, reduced_);
  if (static_cast<int>(pivots_.size()) != dimension) {
    throw std::logic_error("evaluation code generator is rank deficient");
  }
}

FieldVector RsCode::encode(std::span<const Element> msg) const {
  if (static_cast<int>(msg.size()) != dimension_) {
    throw std::invalid_argument("message length " + std::to_string(msg.size()) +
                                " != dimension " + std::to_string(dimension_));
  }
  FieldVector out(static_cast<std::size_t>(length()));
  for (std::size_t r = 0; r < msg.size(); ++r) {
    if (msg[r].is_zero()) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += field_.mul(msg[r], generator_[r][i]);
  }
  return out;
}

bool RsCode::contains(std::span<const Element> v) const {
  if (static_cast<int>(v.size()) != length()) return false;
  FieldVector x(v.begin(), v.end());
  for (std::size_t r = 0; r < reduced_.size(); ++r) {
    const Element factor = x[static_cast<std::size_t>(pivots_[r])];
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += field_.mul(factor, reduced_[r][j]);
  }
  for (Element e : x)
    if (!e.is_zero()) return false;
  return true;
}

RsPair build_rs_pair(const Field& field, int K) {
  const int n = static_cast<int>(field.group_order());
  if (K < 0) throw std::invalid_argument("K must be non-negative");
  if (K > n / 2) {
    throw std::invalid_argument("K = " + std::to_string(K) + " exceeds floor(N/2) = " +
                                std::to_string(n / 2) + "; R would not be contained in its dual");
  }
  RsPair pair{RsCode(field, 1, K), RsCode(field, 0, n - K), {}};
  if (K == 0) pair.warning = "K = 0: R is the zero code and the RS layer contributes no stabilizers";
  for (const auto& r : pair.code.generator())
    for (const auto& d : pair.dual.generator())
      if (!dot(field, r, d).is_zero()) throw std::logic_error("RS pair is not dual");
  return pair;
}

Element dot(const Field& field, std::span<const Element> x, std::span<const Element> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
  Element acc{0};
  for (std::size_t i = 0; i < x.size(); ++i) acc += field.mul(x[i], y[i]);
  return acc;
}

CssPair css_generators(const RsCode& code, const RsCode& dual) {
  const auto& gen = code.generator();
  for (std::size_t r = 0; r < gen.size(); ++r) {
    if (!dual.contains(gen[r])) {
      throw std::invalid_argument("row " + std::to_string(r) +
                                  " of R is not in R^perp; no weakly self-dual pair");
    }
  }
  const auto n = static_cast<std::size_t>(code.length());
  auto lift = [n](const std::vector<FieldVector>& rows) {
    std::vector<FieldVector> out;
    out.reserve(2 * rows.size());
    for (const auto& r : rows) {
      FieldVector v(2 * n);
      std::copy(r.begin(), r.end(), v.begin());
      out.push_back(std::move(v));
    }
    for (const auto& r : rows) {
      FieldVector v(2 * n);
      std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(n));
      out.push_back(std::move(v));
    }
    return out;
  };
  return {lift(gen), lift(dual.generator())};
}

Element symplectic_pairing(const Field& field, std::span<const Element> x,
                           std::span<const Element> y) {
  if (x.size() != y.size() || x.size() % 2 != 0) {
    throw std::invalid_argument("symplectic_pairing: length mismatch");
  }
  const std::size_t n = x.size() / 2;
  Element acc{0};
  for (std::size_t i = 0; i < n; ++i) {
    acc += field.mul(x[i], y[n + i]);
    acc += field.mul(x[n + i], y[i]);
  }
  return acc;
}

}  // namespace rsconcat
