#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rsconcat {

using BigInt = boost::multiprecision::cpp_int;

/// Quaternary entropy -x log4(x/3) - (1-x) log4(1-x) on [0, 1], with the
/// endpoint limits h4(0) = 0 and h4(1) = log4(3).
double h4(double x);

/// Inverse of h4 restricted to [0, 3/4] (where h4 increases from 0 to 1),
/// by bisection to 1e-12.
double h4_inv(double y);

/// Tolerance used for every real-valued right-hand side compared to an exact
/// integer: the bound is inflated by this relative margin.
inline constexpr double kOutwardRounding = 1e-9;

struct Lemma3Result {
  int n = 0;
  int lambda_n = 0;
  BigInt lhs;          // sum_{k=0}^{lambda n} 3^k C(n, k)
  double rhs = 0;      // 4^{n h4(lambda)}
  bool holds = false;  // lhs <= rhs (outward rounded)
  /// (4^{-r lambda} + 3 * 4^{r(1-lambda)})^n at r = log4(lambda / (3(1-lambda)));
  /// absent when lambda = 0.
  std::optional<double> optimized_bound;
  bool optimized_holds = true;
};

/// Volume inequality for lambda = lambda_n / n; requires 1 <= n <= 64 and
/// 0 <= lambda < 3/4 (lambda_n = 0 is the single-term edge case).
Lemma3Result lemma3_verify(int n, int lambda_n);

/// Inputs of the weight bound for M distinct nonzero quaternary L-tuples.
struct Lemma4Query {
  int L = 0;
  std::uint64_t M = 0;
  double lambda = 0;
};

/// lambda L (M - 4^{L h4(lambda)}): the finite-L core of the bound, before
/// asymptotic terms. Rejects lambda outside (0, 3/4) and M outside [1, 4^L-1].
double lemma4_bound(const Lemma4Query& q);

/// lambda = h4_inv(delta - 1/ln L); throws if that argument leaves (0, 1].
double lemma4_lambda(double delta, int L);

/// Minimum total Hamming weight of M distinct nonzero quaternary L-tuples:
/// take tuples lightest first (3^w C(L,w) of weight w). L <= 16.
std::uint64_t lemma4_oracle(int L, std::uint64_t M);

struct Theorem5Params {
  int m = 0;
  double R = 0;
  std::int64_t K = 0;
  std::int64_t N = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t rate_num = 0;  // R_m = rate_num / rate_den exactly
  std::int64_t rate_den = 1;
  double R_m = 0;
  std::string warning;  // set when the K formula clamps at 0

  bool rate_guarantee() const { return R_m >= R; }
};

/// K = floor((1/2)(1 - (2m+1)R/m)(2^{2m} - 1)), clamped at 0, and the
/// resulting code parameters. Requires 0 < R < 1/2 and 1 <= m <= 20.
Theorem5Params theorem5_params(int m, double R);

enum class CurveName { ours, ours_finite_m, ashikhmin, chen, matsumoto, baseline_rs };

std::string_view to_string(CurveName name);
std::optional<CurveName> parse_curve_name(std::string_view text);
/// Name of the integer parameter a curve takes ("m", "t"), empty for none.
std::string_view curve_parameter(CurveName name);

struct CurvePoint {
  double R = 0;
  double delta = 0;
};

struct BoundCurve {
  CurveName name = CurveName::ours;
  std::string params;  // "m=3", "t=4" or empty
  std::vector<CurvePoint> points;  // sorted by R
  std::vector<std::string> notes;  // omitted grid points
};

/// Evaluates a curve on a rate grid. Grid points outside the curve's domain
/// are omitted and reported in notes.
BoundCurve delta_curve(CurveName name, int param, std::span<const double> rates);

/// `steps` evenly spaced points from lo to hi inclusive (steps >= 1).
std::vector<double> linear_grid(double lo, double hi, int steps);

/// Header "R,delta,curve,params"; numbers at 12 significant digits.
void write_csv_header(std::ostream& os);
void write_csv_rows(std::ostream& os, const BoundCurve& curve);

}  // namespace rsconcat
