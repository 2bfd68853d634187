#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rsconcat/concat.hpp"
#include "rsconcat/symplectic.hpp"

namespace rsconcat {

/// Largest rank(N_L) the exact search will enumerate (2^24 codewords).
inline constexpr std::size_t kExactRankBudget = 24;

enum class DistanceMethod { exact, sampled };

struct DistanceReport {
  DistanceMethod method = DistanceMethod::exact;
  std::size_t d = 0;
  SymplecticVector witness;
  std::uint64_t enumerated = 0;  // codewords of N_L \ S_L examined
  std::uint64_t seed = 0;

  /// d=<int> witness_weight=<int> enumerated=<count> method=<exact|sampled> seed=<int>
  std::string to_line() const;
};

/// Thrown when an exact search would exceed kExactRankBudget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minimum symplectic weight over N_L \ S_L by Gray-code enumeration of all
/// 2^rank(N_L) combinations of the normalizer generators. The index range is
/// split into `parts` contiguous chunks searched on separate threads; the
/// result (including the witness, the lowest-index minimiser) does not
/// depend on `parts`.
DistanceReport exact_distance(const StabilizerCodeL& code, int parts = 1);

/// Minimum weight among `trials` uniformly random normalizer codewords that
/// fall outside S_L. An upper bound on d; trial t draws the same codeword for
/// a given seed regardless of the trial count.
DistanceReport sampled_distance_upper(const StabilizerCodeL& code, std::uint64_t trials,
                                      std::uint64_t seed);

/// Independent re-check: witness in N_L, not in S_L, weight == d.
bool validate_witness(const StabilizerCodeL& code, const DistanceReport& report);

/// Block-level shape of one codeword of L_{N,K}.
struct BlockStats {
  std::size_t nonzero_blocks = 0;   // nonzero (4m+2)-blocks
  std::size_t distinct_tuples = 0;  // distinct nonzero GF(4) (2m+1)-tuples over all half-blocks
  std::size_t max_multiplicity = 0;  // most repeats of one tuple within one half position
  std::size_t pooled_max_multiplicity = 0;  // same, first and second halves pooled
};

BlockStats block_statistics(const CodeParameters& params, const SymplecticVector& x);

enum class CountingMode { exhaustive, sampled };

/// Mechanical check of the counting steps behind the asymptotic distance
/// bound, over codewords of N_L \ S_L:
///  (a) at least K+1 nonzero blocks;
///  (b) at least ceil((K+1)/2^m) distinct nonzero quaternary half-block tuples;
///  (c) no tuple repeats more than 2^m times within a half position.
struct CountingReport {
  CountingMode mode = CountingMode::exhaustive;
  std::uint64_t examined = 0;

  std::size_t required_blocks = 0;
  std::size_t min_nonzero_blocks = 0;
  std::uint64_t block_violations = 0;

  std::size_t required_distinct = 0;
  std::size_t min_distinct_tuples = 0;
  std::uint64_t distinct_violations = 0;

  std::size_t multiplicity_bound = 0;
  std::size_t max_multiplicity = 0;
  std::size_t pooled_max_multiplicity = 0;
  std::uint64_t multiplicity_violations = 0;

  SymplecticVector first_violation;  // empty unless some claim failed

  bool blocks_hold() const { return block_violations == 0; }
  bool distinct_hold() const { return distinct_violations == 0; }
  bool multiplicity_holds() const { return multiplicity_violations == 0; }
  bool passed() const { return examined > 0 && blocks_hold() && distinct_hold() && multiplicity_holds(); }
};

CountingReport verify_counting_claims(const StabilizerCodeL& code, CountingMode mode,
                                      std::uint64_t trials = 0, std::uint64_t seed = 0,
                                      int parts = 1);

}  // namespace rsconcat
