#include "rsconcat/distance.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

namespace rsconcat {

namespace {

void reduce_in_place(const RowReduction& r, SymplecticVector& x) {
  for (std::size_t i = 0; i < r.rank; ++i)
    if (x.column(r.pivots[i])) x ^= r.reduced.rows[i];
}

// Reusable membership test for S_L without per-call allocation.
class StabilizerFilter {
 public:
  explicit StabilizerFilter(const RowReduction& s) : s_(&s) {}
  bool contains(const SymplecticVector& x) {
    scratch_ = x;
    reduce_in_place(*s_, scratch_);
    return scratch_.is_zero();
  }

 private:
  const RowReduction* s_;
  SymplecticVector scratch_;
};

// Visits every codeword of N_L \ S_L with Gray-code index in [lo, hi).
template <class Visit>
void enumerate_range(const BinaryMatrix& normalizer, const RowReduction& stab, std::uint64_t lo,
                     std::uint64_t hi, Visit&& visit) {
  if (lo >= hi) return;
  StabilizerFilter filter(stab);
  SymplecticVector state(normalizer.n);
  const std::uint64_t gray = lo ^ (lo >> 1);
  for (std::size_t r = 0; r < normalizer.size(); ++r)
    if ((gray >> r) & 1u) state ^= normalizer.rows[r];
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    if (idx != lo) state ^= normalizer.rows[static_cast<std::size_t>(std::countr_zero(idx))];
    if (!filter.contains(state)) visit(idx, state);
  }
}

// Runs one accumulator per contiguous chunk of [0, 2^rank) and returns them
// in chunk order.
template <class Acc>
std::vector<Acc> enumerate_parallel(const StabilizerCodeL& code, int parts, const Acc& prototype) {
  const std::size_t rank = code.n_matrix.size();
  if (rank > kExactRankBudget) {
    throw BudgetExceeded("exact enumeration needs 2^" + std::to_string(rank) +
                         " codewords (rank(N_L) = " + std::to_string(rank) + " > " +
                         std::to_string(kExactRankBudget) + "); use sampled mode");
  }
  if (parts < 1) throw std::invalid_argument("parts must be >= 1");
  const std::uint64_t total = std::uint64_t{1} << rank;
  const auto p = static_cast<std::uint64_t>(parts);
  const auto stab = row_reduce(code.s_matrix);
  std::vector<Acc> accs(static_cast<std::size_t>(parts), prototype);
  {
    std::vector<std::jthread> workers;
    for (std::uint64_t c = 0; c < p; ++c) {
      const std::uint64_t lo = total / p * c + std::min(c, total % p);
      const std::uint64_t hi = lo + total / p + (c < total % p ? 1 : 0);
      workers.emplace_back([&, lo, hi, c] {
        auto& acc = accs[static_cast<std::size_t>(c)];
        enumerate_range(code.n_matrix, stab, lo, hi,
                        [&](std::uint64_t idx, const SymplecticVector& x) { acc.visit(idx, x); });
      });
    }
  }
  return accs;
}

struct MinWeight {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::uint64_t best_index = 0;
  SymplecticVector witness;
  std::uint64_t count = 0;

  void visit(std::uint64_t idx, const SymplecticVector& x) {
    ++count;
    const std::size_t w = x.weight();
    if (w < best) {  // chunks are visited in increasing index order
      best = w;
      best_index = idx;
      witness = x;
    }
  }
};

class CountingAcc {
 public:
  explicit CountingAcc(const CodeParameters& params) : params_(params) {
    report_.required_blocks = static_cast<std::size_t>(params.K) + 1;
    const std::size_t pow2m = std::size_t{1} << params.m;
    report_.required_distinct = (report_.required_blocks + pow2m - 1) / pow2m;
    report_.multiplicity_bound = pow2m;
    report_.min_nonzero_blocks = std::numeric_limits<std::size_t>::max();
    report_.min_distinct_tuples = std::numeric_limits<std::size_t>::max();
  }

  void visit(std::uint64_t, const SymplecticVector& x) {
    const BlockStats st = block_statistics(params_, x);
    auto& r = report_;
    ++r.examined;
    r.min_nonzero_blocks = std::min(r.min_nonzero_blocks, st.nonzero_blocks);
    r.min_distinct_tuples = std::min(r.min_distinct_tuples, st.distinct_tuples);
    r.max_multiplicity = std::max(r.max_multiplicity, st.max_multiplicity);
    r.pooled_max_multiplicity = std::max(r.pooled_max_multiplicity, st.pooled_max_multiplicity);
    const bool few_blocks = st.nonzero_blocks < r.required_blocks;
    const bool few_tuples = st.distinct_tuples < r.required_distinct;
    const bool repeats = st.max_multiplicity > r.multiplicity_bound;
    r.block_violations += few_blocks;
    r.distinct_violations += few_tuples;
    r.multiplicity_violations += repeats;
    if ((few_blocks || few_tuples || repeats) && r.first_violation.qubits() == 0) {
      r.first_violation = x;
    }
  }

  void merge(const CountingAcc& o) {
    auto& r = report_;
    const auto& q = o.report_;
    r.examined += q.examined;
    r.min_nonzero_blocks = std::min(r.min_nonzero_blocks, q.min_nonzero_blocks);
    r.min_distinct_tuples = std::min(r.min_distinct_tuples, q.min_distinct_tuples);
    r.max_multiplicity = std::max(r.max_multiplicity, q.max_multiplicity);
    r.pooled_max_multiplicity = std::max(r.pooled_max_multiplicity, q.pooled_max_multiplicity);
    r.block_violations += q.block_violations;
    r.distinct_violations += q.distinct_violations;
    r.multiplicity_violations += q.multiplicity_violations;
    if (r.first_violation.qubits() == 0) r.first_violation = q.first_violation;
  }

  CountingReport finish(CountingMode mode) {
    report_.mode = mode;
    if (report_.examined == 0) {
      report_.min_nonzero_blocks = 0;
      report_.min_distinct_tuples = 0;
    }
    return report_;
  }

 private:
  CodeParameters params_;
  CountingReport report_;
};

// Uniform random normalizer codeword; consumes ceil(rank/64) draws.
SymplecticVector random_codeword(const BinaryMatrix& normalizer, std::mt19937_64& rng) {
  SymplecticVector x(normalizer.n);
  for (std::size_t base = 0; base < normalizer.size(); base += 64) {
    std::uint64_t bits = rng();
    for (; bits; bits &= bits - 1) {
      const std::size_t r = base + static_cast<std::size_t>(std::countr_zero(bits));
      if (r < normalizer.size()) x ^= normalizer.rows[r];
    }
  }
  return x;
}

template <class Visit>
std::uint64_t sample_outside(const StabilizerCodeL& code, std::uint64_t trials, std::uint64_t seed,
                             Visit&& visit) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const auto stab = row_reduce(code.s_matrix);
  StabilizerFilter filter(stab);
  std::mt19937_64 rng(seed);
  std::uint64_t kept = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto x = random_codeword(code.n_matrix, rng);
    if (filter.contains(x)) continue;
    ++kept;
    visit(t, x);
  }
  return kept;
}

}  // namespace

std::string DistanceReport::to_line() const {
  std::ostringstream os;
  os << "d=" << d << " witness_weight=" << witness.weight() << " enumerated=" << enumerated
     << " method=" << (method == DistanceMethod::exact ? "exact" : "sampled") << " seed=" << seed;
  return os.str();
}

DistanceReport exact_distance(const StabilizerCodeL& code, int parts) {
  const auto accs = enumerate_parallel(code, parts, MinWeight{});
  DistanceReport rep;
  rep.method = DistanceMethod::exact;
  const MinWeight* best = nullptr;
  for (const auto& a : accs) {
    rep.enumerated += a.count;
    if (a.count && (!best || a.best < best->best)) best = &a;
  }
  if (!best) throw std::runtime_error("N_L equals S_L: no logical operators (k = 0)");
  rep.d = best->best;
  rep.witness = best->witness;
  return rep;
}

DistanceReport sampled_distance_upper(const StabilizerCodeL& code, std::uint64_t trials,
                                      std::uint64_t seed) {
  MinWeight acc;
  const auto kept = sample_outside(code, trials, seed,
                                   [&](std::uint64_t t, const SymplecticVector& x) { acc.visit(t, x); });
  if (kept == 0) {
    throw std::runtime_error("no sampled codeword left S_L in " + std::to_string(trials) +
                             " trials");
  }
  DistanceReport rep;
  rep.method = DistanceMethod::sampled;
  rep.d = acc.best;
  rep.witness = acc.witness;
  rep.enumerated = kept;
  rep.seed = seed;
  return rep;
}

bool validate_witness(const StabilizerCodeL& code, const DistanceReport& report) {
  const auto& w = report.witness;
  if (w.qubits() != code.n_matrix.n) return false;
  const auto rn = row_reduce(code.n_matrix);
  const auto rs = row_reduce(code.s_matrix);
  return in_span(rn, w) && !in_span(rs, w) && w.weight() == report.d;
}

BlockStats block_statistics(const CodeParameters& params, const SymplecticVector& x) {
  const auto width = static_cast<std::size_t>(4 * params.m + 2);
  const auto half = static_cast<std::size_t>(2 * params.m + 1);
  const std::uint64_t hmask = (std::uint64_t{1} << half) - 1;
  const auto blocks = static_cast<std::size_t>(params.N);

  thread_local std::vector<std::uint64_t> first, second, pooled;
  first.clear();
  second.clear();
  BlockStats st;
  for (std::size_t i = 0; i < blocks; ++i) {
    const std::uint64_t u = x.u_bits(i * width, width);
    const std::uint64_t v = x.v_bits(i * width, width);
    if ((u | v) == 0) continue;
    ++st.nonzero_blocks;
    const std::uint64_t k1 = (u & hmask) | ((v & hmask) << half);
    const std::uint64_t k2 = (u >> half) | ((v >> half) << half);
    if (k1) first.push_back(k1);
    if (k2) second.push_back(k2);
  }
  auto max_run = [](std::vector<std::uint64_t>& keys) {
    std::sort(keys.begin(), keys.end());
    std::size_t best = 0;
    for (std::size_t i = 0; i < keys.size();) {
      std::size_t j = i;
      while (j < keys.size() && keys[j] == keys[i]) ++j;
      best = std::max(best, j - i);
      i = j;
    }
    return best;
  };
  st.max_multiplicity = std::max(max_run(first), max_run(second));
  pooled.assign(first.begin(), first.end());
  pooled.insert(pooled.end(), second.begin(), second.end());
  st.pooled_max_multiplicity = max_run(pooled);
  st.distinct_tuples = static_cast<std::size_t>(
      std::unique(pooled.begin(), pooled.end()) - pooled.begin());
  return st;
}

CountingReport verify_counting_claims(const StabilizerCodeL& code, CountingMode mode,
                                      std::uint64_t trials, std::uint64_t seed, int parts) {
  if (mode == CountingMode::exhaustive) {
    auto accs = enumerate_parallel(code, parts, CountingAcc(code.params));
    for (std::size_t i = 1; i < accs.size(); ++i) accs[0].merge(accs[i]);
    return accs[0].finish(mode);
  }
  CountingAcc acc(code.params);
  sample_outside(code, trials, seed, [&](std::uint64_t t, const SymplecticVector& x) { acc.visit(t, x); });
  return acc.finish(mode);
}

}  // namespace rsconcat
