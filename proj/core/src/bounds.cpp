#include "rsconcat/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace rsconcat {

namespace {

double log4(double x) { return std::log(x) / std::log(4.0); }

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

double h4(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("h4: argument outside [0, 1]");
  double h = 0.0;
  if (x > 0.0) h -= x * log4(x / 3.0);
  if (x < 1.0) h -= (1.0 - x) * log4(1.0 - x);
  return h;
}

double h4_inv(double y) {
  if (!(y >= 0.0 && y <= 1.0)) throw std::domain_error("h4_inv: argument outside [0, 1]");
  // h4 is flat at its maximum, so rounding would stop bisection short of 3/4.
  if (y == 1.0) return 0.75;
  double lo = 0.0;
  double hi = 0.75;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (h4(mid) < y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Lemma3Result lemma3_verify(int n, int lambda_n) {
  if (n < 1 || n > 64) throw std::invalid_argument("lemma3: n must be in [1, 64]");
  if (lambda_n < 0 || 4 * lambda_n >= 3 * n) {
    throw std::invalid_argument("lemma3: need 0 <= lambda < 3/4");
  }
  Lemma3Result res;
  res.n = n;
  res.lambda_n = lambda_n;
  BigInt binom = 1;
  BigInt pow3 = 1;
  for (int k = 0; k <= lambda_n; ++k) {
    res.lhs += pow3 * binom;
    binom = binom * (n - k) / (k + 1);
    pow3 *= 3;
  }
  const double lambda = static_cast<double>(lambda_n) / n;
  res.rhs = std::pow(4.0, n * h4(lambda));
  const auto lhs = res.lhs.convert_to<long double>();
  res.holds = lhs <= static_cast<long double>(res.rhs) * (1.0L + kOutwardRounding);
  if (lambda_n > 0) {
    const double r = log4(lambda / (3.0 * (1.0 - lambda)));
    const double base = std::pow(4.0, -r * lambda) + 3.0 * std::pow(4.0, r * (1.0 - lambda));
    res.optimized_bound = std::pow(base, n);
    res.optimized_holds =
        lhs <= static_cast<long double>(*res.optimized_bound) * (1.0L + kOutwardRounding);
  }
  return res;
}

double lemma4_bound(const Lemma4Query& q) {
  if (q.L < 1 || q.L > 31) throw std::invalid_argument("lemma4: L must be in [1, 31]");
  if (!(q.lambda > 0.0 && q.lambda < 0.75)) throw std::invalid_argument("lemma4: lambda outside (0, 3/4)");
  const std::uint64_t limit = (std::uint64_t{1} << (2 * q.L)) - 1;
  if (q.M < 1 || q.M > limit) throw std::invalid_argument("lemma4: M outside [1, 4^L - 1]");
  return q.lambda * q.L * (static_cast<double>(q.M) - std::pow(4.0, q.L * h4(q.lambda)));
}

double lemma4_lambda(double delta, int L) {
  if (L < 2) throw std::invalid_argument("lemma4_lambda: needs L >= 2");
  const double y = delta - 1.0 / std::log(static_cast<double>(L));
  if (!(y > 0.0 && y <= 1.0)) {
    throw std::domain_error("lemma4_lambda: delta - 1/ln L = " + fmt12(y) + " outside (0, 1]");
  }
  return h4_inv(y);
}

std::uint64_t lemma4_oracle(int L, std::uint64_t M) {
  if (L < 1 || L > 16) throw std::invalid_argument("lemma4_oracle: L must be in [1, 16]");
  const std::uint64_t limit = (std::uint64_t{1} << (2 * L)) - 1;
  if (M < 1 || M > limit) throw std::invalid_argument("lemma4_oracle: M outside [1, 4^L - 1]");
  std::uint64_t remaining = M;
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(L, w)
  std::uint64_t pow3 = 1;
  for (int w = 1; w <= L && remaining > 0; ++w) {
    binom = binom * static_cast<std::uint64_t>(L - w + 1) / static_cast<std::uint64_t>(w);
    pow3 *= 3;
    const std::uint64_t take = std::min(remaining, pow3 * binom);
    total += take * static_cast<std::uint64_t>(w);
    remaining -= take;
  }
  return total;
}

Theorem5Params theorem5_params(int m, double R) {
  if (!(R > 0.0 && R < 0.5)) throw std::invalid_argument("theorem5: R must lie in (0, 1/2)");
  if (m < 1 || m > 20) throw std::invalid_argument("theorem5: m must be in [1, 20]");
  Theorem5Params p;
  p.m = m;
  p.R = R;
  p.N = (std::int64_t{1} << (2 * m)) - 1;
  const long double factor = 1.0L - static_cast<long double>(2 * m + 1) * R / m;
  const long double raw = 0.5L * factor * static_cast<long double>(p.N);
  if (raw <= 0.0L) {
    p.K = 0;
    p.warning = "(2m+1)R/m >= 1: K clamped to 0 and the rate guarantee R_m >= R is lost";
  } else {
    p.K = static_cast<std::int64_t>(std::floor(raw));
  }
  p.n = 2 * p.N * (2 * m + 1);
  p.k = 2 * m * (p.N - 2 * p.K);
  p.rate_num = m * (p.N - 2 * p.K);
  p.rate_den = p.N * (2 * m + 1);
  p.R_m = static_cast<double>(p.rate_num) / static_cast<double>(p.rate_den);
  return p;
}

std::string_view to_string(CurveName name) {
  switch (name) {
    case CurveName::ours: return "ours";
    case CurveName::ours_finite_m: return "ours_finite_m";
    case CurveName::ashikhmin: return "ashikhmin";
    case CurveName::chen: return "chen";
    case CurveName::matsumoto: return "matsumoto";
    case CurveName::baseline_rs: return "baseline_rs";
  }
  return "?";
}

std::optional<CurveName> parse_curve_name(std::string_view text) {
  for (auto c : {CurveName::ours, CurveName::ours_finite_m, CurveName::ashikhmin, CurveName::chen,
                 CurveName::matsumoto, CurveName::baseline_rs}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

std::string_view curve_parameter(CurveName name) {
  switch (name) {
    case CurveName::ours: return "";
    case CurveName::chen: return "t";
    default: return "m";
  }
}

BoundCurve delta_curve(CurveName name, int param, std::span<const double> rates) {
  BoundCurve curve;
  curve.name = name;
  const auto pname = curve_parameter(name);
  if (!pname.empty()) curve.params = std::string(pname) + "=" + std::to_string(param);

  // Each branch yields delta(R) and the closed delta-interval it is valid on.
  double d_hi = 1.0;
  std::function<double(double)> delta_of;
  switch (name) {
    case CurveName::ours: {
      const double intercept = h4_inv(0.25) / 4.0;
      delta_of = [intercept](double R) { return R <= 0.5 ? intercept * (1.0 - 2.0 * R) : -1.0; };
      break;
    }
    case CurveName::ours_finite_m: {
      if (param < 1 || param > 20) throw std::invalid_argument("ours_finite_m needs 1 <= m <= 20");
      const double m = param;
      const double q = std::ldexp(1.0, 2 * param);
      const double lead = (q - std::sqrt(q)) / (q - 1.0);
      const double inner = h4_inv(m / (4.0 * m + 2.0));
      delta_of = [=](double R) { return lead * 0.25 * (1.0 - (2.0 * m + 1.0) * R / m) * inner; };
      break;
    }
    case CurveName::ashikhmin: {
      if (param < 2 || param > 40) throw std::invalid_argument("ashikhmin needs 2 <= m <= 40");
      const double m = param;
      const double offset = 1.0 - 1.0 / (std::ldexp(1.0, param - 1) - 1.0);
      d_hi = 1.0 / 18.0;
      delta_of = [=](double R) { return (offset - R) * 3.0 / (10.0 * m); };
      break;
    }
    case CurveName::chen: {
      if (param < 3 || param > 40) throw std::invalid_argument("chen needs 3 <= t <= 40");
      const double t = param;
      const double two_t = std::ldexp(1.0, param);
      const double delta_t = (2.0 / 3.0) * (two_t - 3.0) / ((2.0 * t + 1.0) * (two_t - 1.0));
      d_hi = delta_t;
      delta_of = [=](double R) { return delta_t - R / (3.0 * t); };
      break;
    }
    case CurveName::matsumoto: {
      if (param < 2 || param > 40) throw std::invalid_argument("matsumoto needs 2 <= m <= 40");
      const double m = param;
      const double inv = 1.0 / (std::ldexp(1.0, param) - 1.0);
      d_hi = (0.5 - inv) / (2.0 * m);
      delta_of = [=](double R) { return (1.0 - 2.0 * inv - R) * 3.0 / (10.0 * m); };
      break;
    }
    case CurveName::baseline_rs: {
      if (param < 1 || param > 30) throw std::invalid_argument("baseline_rs needs 1 <= m <= 30");
      const double n = std::ldexp(1.0, param) - 1.0;
      const double m = param;
      delta_of = [=](double R) {
        if (R > 1.0) return -1.0;
        const double K = std::floor((1.0 - R) * n / 2.0);
        return (K + 1.0) / (m * n);
      };
      break;
    }
  }

  for (double R : rates) {
    const double d = std::isfinite(R) && R >= 0.0 && R <= 1.0 ? delta_of(R) : -1.0;
    if (!std::isfinite(d) || d < 0.0 || d > d_hi || d > 1.0) {
      curve.notes.push_back("R=" + fmt12(R) + " outside the domain of " + std::string(to_string(name)) +
                            (curve.params.empty() ? "" : " " + curve.params) + ", omitted");
      continue;
    }
    curve.points.push_back({R, d});
  }
  std::stable_sort(curve.points.begin(), curve.points.end(),
                   [](const CurvePoint& a, const CurvePoint& b) { return a.R < b.R; });
  return curve;
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
  if (steps < 1) throw std::invalid_argument("grid needs at least one step");
  if (steps == 1) return {lo};
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    g.push_back(i + 1 == steps ? hi : lo + (hi - lo) * i / (steps - 1));
  }
  return g;
}

void write_csv_header(std::ostream& os) { os << "R,delta,curve,params\n"; }

void write_csv_rows(std::ostream& os, const BoundCurve& curve) {
  for (const auto& p : curve.points) {
    os << fmt12(p.R) << ',' << fmt12(p.delta) << ',' << to_string(curve.name) << ','
       << curve.params << '\n';
  }
}

}  // namespace rsconcat
