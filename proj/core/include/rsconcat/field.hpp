#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rsconcat {

/// Element of GF(2^k) in the polynomial basis of the field's modulus.
/// Bit i is the coefficient of x^i.
struct Element {
  std::uint32_t bits = 0;

  friend constexpr Element operator+(Element a, Element b) { return {a.bits ^ b.bits}; }
  constexpr Element& operator+=(Element o) {
    bits ^= o.bits;
    return *this;
  }
  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
  constexpr bool is_zero() const { return bits == 0; }
};

inline constexpr int kMaxDegree = 16;

/// GF(2^k) for 2 <= k <= kMaxDegree with a primitive modulus; alpha is the
/// class of x.
class Field {
 public:
  /// Builds the field over the lexicographically smallest primitive
  /// polynomial of the given degree.
  explicit Field(int degree);
  /// Builds the field over an explicit modulus (bit i = coefficient of x^i,
  /// bit `degree` set). Throws if the polynomial is not primitive.
  Field(int degree, std::uint32_t modulus);

  int degree() const { return degree_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return 1u << degree_; }
  /// Size of the multiplicative group, 2^k - 1.
  std::uint32_t group_order() const { return order() - 1; }
  Element alpha() const { return {2u & mask()}; }
  Element one() const { return {1}; }
  bool contains(Element x) const { return x.bits <= mask(); }

  Element mul(Element x, Element y) const;
  Element inverse(Element x) const;
  /// Any integer exponent; negative exponents require x != 0.
  Element pow(Element x, long long e) const;
  /// Absolute trace to GF(2): x + x^2 + ... + x^(2^(k-1)).
  int trace(Element x) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.degree_ == b.degree_ && a.modulus_ == b.modulus_;
  }

 private:
  std::uint32_t mask() const { return order() - 1; }

  int degree_;
  std::uint32_t modulus_;
};

/// True iff x generates the multiplicative group of GF(2)[x]/(modulus).
bool is_primitive_polynomial(int degree, std::uint32_t modulus);

/// Smallest primitive polynomial of the given degree, compared as integers.
std::uint32_t smallest_primitive_polynomial(int degree);

/// Ordered basis beta_1..beta_k of GF(2^k) over GF(2) with
/// Tr(beta_i beta_j) = [i == j]. Coordinates are exchanged as masks where
/// bit (j-1) holds the coefficient of beta_j.
class SelfDualBasis {
 public:
  /// Validates the Gram condition; throws std::invalid_argument otherwise.
  SelfDualBasis(const Field& field, std::vector<Element> beta);

  const std::vector<Element>& elements() const { return beta_; }
  Element operator[](std::size_t j) const { return beta_[j]; }
  std::size_t size() const { return beta_.size(); }

  /// x = sum_j coords(x)_j beta_j, with coords(x)_j = Tr(x beta_j).
  std::uint32_t coords(Element x) const;
  Element combine(std::uint32_t coords) const;

  friend bool operator==(const SelfDualBasis& a, const SelfDualBasis& b) {
    return a.beta_ == b.beta_;
  }

 private:
  std::vector<Element> beta_;
  // coords of x^i for each polynomial-basis bit i; coords is GF(2)-linear.
  std::vector<std::uint32_t> coord_of_monomial_;
};

/// Lexicographically smallest ordered self-dual basis (compared element by
/// element as integers).
SelfDualBasis find_self_dual_basis(const Field& field);

/// Gram matrix Tr(beta_i beta_j), row-major.
std::vector<int> gram_matrix(const Field& field, std::span<const Element> beta);

std::string to_hex(std::uint32_t value);

}  // namespace rsconcat
