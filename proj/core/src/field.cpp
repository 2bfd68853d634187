#include "rsconcat/field.hpp"

#include <cstdio>
#include <stdexcept>

namespace rsconcat {

namespace {

void check_degree(int degree) {
  if (degree < 2 || degree > kMaxDegree) {
    throw std::invalid_argument("field degree must be in [2, " + std::to_string(kMaxDegree) +
                                "], got " + std::to_string(degree));
  }
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t mulmod(std::uint32_t x, std::uint32_t y, int degree, std::uint32_t modulus) {
  const std::uint32_t top = 1u << degree;
  std::uint32_t acc = 0;
  while (y) {
    if (y & 1u) acc ^= x;
    y >>= 1;
    x <<= 1;
    if (x & top) x ^= modulus;
  }
  return acc;
}

std::uint32_t powmod(std::uint32_t x, std::uint64_t e, int degree, std::uint32_t modulus) {
  std::uint32_t result = 1;
  while (e) {
    if (e & 1u) result = mulmod(result, x, degree, modulus);
    x = mulmod(x, x, degree, modulus);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_primitive_polynomial(int degree, std::uint32_t modulus) {
  check_degree(degree);
  if ((modulus >> degree) != 1u) return false;
  if ((modulus & 1u) == 0) return false;  // x would be a zero divisor
  const std::uint32_t group = (1u << degree) - 1;
  if (powmod(2, group, degree, modulus) != 1) return false;
  for (std::uint32_t p : prime_factors(group)) {
    if (powmod(2, group / p, degree, modulus) == 1) return false;
  }
  return true;
}

std::uint32_t smallest_primitive_polynomial(int degree) {
  check_degree(degree);
  const std::uint32_t lo = 1u << degree;
  for (std::uint32_t f = lo | 1u; f < 2 * lo; f += 2) {
    if (is_primitive_polynomial(degree, f)) return f;
  }
  throw std::logic_error("no primitive polynomial of degree " + std::to_string(degree));
}

Field::Field(int degree) : Field(degree, smallest_primitive_polynomial(degree)) {}

Field::Field(int degree, std::uint32_t modulus) : degree_(degree), modulus_(modulus) {
  if (!is_primitive_polynomial(degree, modulus)) {
    throw std::invalid_argument("modulus " + to_hex(modulus) + " is not primitive of degree " +
                                std::to_string(degree));
  }
}

Element Field::mul(Element x, Element y) const {
  return {mulmod(x.bits, y.bits, degree_, modulus_)};
}

Element Field::inverse(Element x) const {
  if (x.is_zero()) throw std::domain_error("inverse of zero");
  return {powmod(x.bits, group_order() - 1, degree_, modulus_)};
}

Element Field::pow(Element x, long long e) const {
  const long long n = group_order();
  if (x.is_zero()) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return e == 0 ? one() : Element{0};
  }
  long long r = e % n;
  if (r < 0) r += n;
  return {powmod(x.bits, static_cast<std::uint64_t>(r), degree_, modulus_)};
}

int Field::trace(Element x) const {
  Element acc{0};
  Element y = x;
  for (int i = 0; i < degree_; ++i) {
    acc += y;
    y = mul(y, y);
  }
  return static_cast<int>(acc.bits);
}

std::vector<int> gram_matrix(const Field& field, std::span<const Element> beta) {
  const std::size_t k = beta.size();
  std::vector<int> g(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g[i * k + j] = field.trace(field.mul(beta[i], beta[j]));
  return g;
}

SelfDualBasis::SelfDualBasis(const Field& field, std::vector<Element> beta)
    : beta_(std::move(beta)) {
  const std::size_t k = static_cast<std::size_t>(field.degree());
  if (beta_.size() != k) throw std::invalid_argument("basis size must equal the field degree");
  for (Element b : beta_) {
    if (!field.contains(b)) throw std::invalid_argument("basis element outside the field");
  }
  const auto g = gram_matrix(field, beta_);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (g[i * k + j] != (i == j ? 1 : 0)) {
        throw std::invalid_argument("basis fails the Gram condition at (" + std::to_string(i + 1) +
                                    "," + std::to_string(j + 1) + ")");
      }
  // An orthonormal family is linearly independent, so no separate rank check.
  coord_of_monomial_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint32_t c = 0;
    for (std::size_t j = 0; j < k; ++j)
      c |= static_cast<std::uint32_t>(field.trace(field.mul(Element{1u << i}, beta_[j]))) << j;
    coord_of_monomial_[i] = c;
  }
}

std::uint32_t SelfDualBasis::coords(Element x) const {
  std::uint32_t c = 0;
  for (std::uint32_t bits = x.bits; bits; bits &= bits - 1)
    c ^= coord_of_monomial_[static_cast<std::size_t>(__builtin_ctz(bits))];
  return c;
}

Element SelfDualBasis::combine(std::uint32_t coords) const {
  Element x{0};
  for (; coords; coords &= coords - 1) x += beta_[static_cast<std::size_t>(__builtin_ctz(coords))];
  return x;
}

SelfDualBasis find_self_dual_basis(const Field& field) {
  // Greedy choice of the smallest admissible next element. A partial
  // orthonormal family P extends to a full self-dual basis iff it is already
  // full or 1 is not in span(P); for orthonormal P, 1 is in span(P) exactly
  // when the elements of P sum to 1. Every admissible prefix is therefore
  // completable and the greedy sequence is the lexicographic minimum.
  const int k = field.degree();
  std::vector<Element> chosen;
  Element sum{0};
  while (static_cast<int>(chosen.size()) < k) {
    const bool last = static_cast<int>(chosen.size()) + 1 == k;
    bool found = false;
    for (std::uint32_t v = 1; v < field.order() && !found; ++v) {
      const Element x{v};
      if (field.trace(x) != 1) continue;  // Tr(x^2) = Tr(x)
      bool orthogonal = true;
      for (Element b : chosen) {
        if (field.trace(field.mul(x, b)) != 0) {
          orthogonal = false;
          break;
        }
      }
      if (!orthogonal) continue;
      if (!last && sum + x == field.one()) continue;
      chosen.push_back(x);
      sum += x;
      found = true;
    }
    if (!found) {
      throw std::logic_error("self-dual basis search exhausted at position " +
                             std::to_string(chosen.size() + 1) + " of GF(2^" +
                             std::to_string(k) + ")");
    }
  }
  return SelfDualBasis(field, std::move(chosen));
}

std::string to_hex(std::uint32_t value) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", value);
  return buf;
}

}  // namespace rsconcat
