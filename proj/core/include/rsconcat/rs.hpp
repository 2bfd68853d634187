#pragma once

#include <span>
#include <string>
#include <vector>

#include "rsconcat/field.hpp"

namespace rsconcat {

using FieldVector = std::vector<Element>;

/// Full-length evaluation code over GF(q), q = 2^k: evaluations of the span
/// of monomials x^first .. x^(first+dimension-1) at alpha^0 .. alpha^(N-1),
/// N = q - 1.
class RsCode {
 public:
  RsCode(const Field& field, int first_degree, int dimension);

  const Field& field() const { return field_; }
  int length() const { return static_cast<int>(field_.group_order()); }
  int dimension() const { return dimension_; }
  int first_degree() const { return first_degree_; }
  const std::vector<FieldVector>& generator() const { return generator_; }
  const FieldVector& eval_points() const { return points_; }

  /// msg * generator. Throws std::invalid_argument on length mismatch.
  FieldVector encode(std::span<const Element> msg) const;
  /// Row-space membership against the reduced generator.
  bool contains(std::span<const Element> v) const;

 private:
  Field field_;
  int first_degree_;
  int dimension_;
  FieldVector points_;
  std::vector<FieldVector> generator_;
  std::vector<FieldVector> reduced_;
  std::vector<int> pivots_;
};

/// R = [N, K, N-K+1] spanned by x^1..x^K and its Euclidean dual
/// R^perp = [N, N-K, K+1] spanned by x^0..x^(N-K-1), with R contained in
/// R^perp whenever K <= floor(N/2).
struct RsPair {
  RsCode code;
  RsCode dual;
  std::string warning;  // non-empty for the degenerate K = 0 case
};

RsPair build_rs_pair(const Field& field, int K);

/// sum_i x_i y_i over the field.
Element dot(const Field& field, std::span<const Element> x, std::span<const Element> y);

/// Field-level generators of S_RS = R x R and N_RS = R^perp x R^perp. Each
/// entry is a length-2N vector (left | right) of the form (r | 0) or (0 | r).
struct CssPair {
  std::vector<FieldVector> s_gens;
  std::vector<FieldVector> n_gens;
};

/// Throws std::invalid_argument naming the first R row outside R^perp.
CssPair css_generators(const RsCode& code, const RsCode& dual);

/// sum_i (x_i y_{N+i} + x_{N+i} y_i) for length-2N vectors.
Element symplectic_pairing(const Field& field, std::span<const Element> x,
                           std::span<const Element> y);

}  // namespace rsconcat
