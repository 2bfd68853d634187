#pragma once

// Reference implementations used only by tests. They deliberately take
// different routes from the library: plain int vectors, schoolbook
// polynomial arithmetic, brute-force enumeration.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rsconcat/symplectic.hpp"

namespace oracle {

using Bits = std::vector<int>;

// Polynomial product over GF(2) followed by long division by the modulus.
inline std::uint32_t poly_mulmod(std::uint32_t x, std::uint32_t y, int degree, std::uint32_t modulus) {
  std::uint64_t prod = 0;
  for (int i = 0; i < 32; ++i)
    if ((y >> i) & 1u) prod ^= static_cast<std::uint64_t>(x) << i;
  for (int d = 63; d >= degree; --d)
    if ((prod >> d) & 1u) prod ^= static_cast<std::uint64_t>(modulus) << (d - degree);
  return static_cast<std::uint32_t>(prod);
}

inline bool irreducible(std::uint32_t f, int degree) {
  auto deg = [](std::uint64_t p) { return p ? 63 - __builtin_clzll(p) : -1; };
  for (std::uint32_t g = 2; deg(g) <= degree / 2; ++g) {
    std::uint64_t r = f;
    while (deg(r) >= deg(g)) r ^= static_cast<std::uint64_t>(g) << (deg(r) - deg(g));
    if (r == 0) return false;
  }
  return true;
}

// Multiplicative order of x modulo f by repeated multiplication.
inline std::uint32_t order_of_x(std::uint32_t f, int degree) {
  std::uint32_t y = 2;
  for (std::uint32_t e = 1; e <= (1u << degree); ++e) {
    if (y == 1) return e;
    y = poly_mulmod(y, 2, degree, f);
  }
  return 0;
}

inline Bits to_bits(const rsconcat::SymplecticVector& x) {
  Bits b(2 * x.qubits());
  for (std::size_t p = 0; p < x.qubits(); ++p) {
    b[p] = x.u(p);
    b[x.qubits() + p] = x.v(p);
  }
  return b;
}

inline int product(const Bits& a, const Bits& b) {
  const std::size_t n = a.size() / 2;
  int acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[n + i] + a[n + i] * b[i];
  return acc % 2;
}

inline int weight(const Bits& a) {
  const std::size_t n = a.size() / 2;
  int w = 0;
  for (std::size_t i = 0; i < n; ++i) w += (a[i] | a[n + i]);
  return w;
}

// Forward elimination on a copy.
inline int rank(std::vector<Bits> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = r + 1; i < rows.size(); ++i)
      if (rows[i][c])
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] ^= rows[r][j];
    ++r;
  }
  return static_cast<int>(r);
}

inline std::vector<Bits> to_rows(const rsconcat::BinaryMatrix& m) {
  std::vector<Bits> rows;
  for (const auto& r : m.rows) rows.push_back(to_bits(r));
  return rows;
}

inline bool in_span(const std::vector<Bits>& rows, const Bits& x) {
  auto ext = rows;
  ext.push_back(x);
  return rank(ext) == rank(rows);
}

// Minimum weight of a Pauli commuting with every stabilizer row but outside
// the stabilizer span, by increasing-weight search over all Paulis
// (the approach of a generic stabilizer distance routine). Returns 0 when
// nothing is found up to max_weight.
inline int min_logical_weight(const std::vector<Bits>& stab, std::size_t n, int max_weight) {
  std::vector<std::size_t> support;
  Bits x(2 * n);
  int found = 0;
  auto check = [&]() {
    for (const auto& s : stab)
      if (product(s, x)) return false;
    return !in_span(stab, x);
  };
  // Recursive choice of positions then of X/Y/Z at each position.
  auto rec = [&](auto&& self, std::size_t start, int left) -> bool {
    if (left == 0) {
      auto paulis = [&](auto&& inner, std::size_t k) -> bool {
        if (k == support.size()) return check();
        const std::size_t p = support[k];
        for (int op = 1; op <= 3; ++op) {
          x[p] = op & 1;
          x[n + p] = (op >> 1) & 1;
          if (inner(inner, k + 1)) return true;
        }
        x[p] = x[n + p] = 0;
        return false;
      };
      return paulis(paulis, 0);
    }
    for (std::size_t p = start; p < n; ++p) {
      support.push_back(p);
      if (self(self, p + 1, left - 1)) return true;
      support.pop_back();
    }
    return false;
  };
  for (int w = 1; w <= max_weight && !found; ++w) {
    support.clear();
    std::fill(x.begin(), x.end(), 0);
    if (rec(rec, 0, w)) found = w;
  }
  return found;
}

// Sorted weights of all nonzero quaternary L-tuples.
inline std::vector<int> all_tuple_weights(int L) {
  std::vector<int> w;
  std::uint32_t total = 1u << (2 * L);
  for (std::uint32_t t = 1; t < total; ++t) {
    int wt = 0;
    for (int i = 0; i < L; ++i) wt += ((t >> (2 * i)) & 3u) != 0;
    w.push_back(wt);
  }
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace oracle
