#pragma once

#include <cstdint>
#include <string_view>

#include "hcube/rational.hpp"

namespace hcube {

enum class ProbabilityMethod { exact_f2, exhaustive_real, monte_carlo };

std::string_view method_name(ProbabilityMethod method);

/// Probability that n+1 distinct random vertices are affinely independent.
/// Exact methods fill `exact`; Monte Carlo fills successes/trials/std_error.
struct ProbabilityEstimate {
  int n = 0;
  ProbabilityMethod method = ProbabilityMethod::exact_f2;
  Rational exact;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double std_error = 0.0;
  std::uint64_t seed = 0;

  /// exact, or successes/trials.
  Rational value() const;
};

/// Asymptotic forms quoted for reference in reports; never computed.
inline constexpr std::string_view kRealLowerBoundNote =
    "P(independent) >= 1 - (1/sqrt(2) + o(1))^n";
inline constexpr std::string_view kRealConjectureNote =
    "conjectured P(independent) = 1 - (1 + o(1)) n^2 / 2^n";
inline constexpr std::string_view kF2LimitNote =
    "GF(2) probability decreases to (1/2; 1/2)_inf ~ 0.288788";

/// Over GF(2):
///   2^n * prod_{i<n} (2^n - 2^i) / prod_{m<=n} (2^n - m).
Rational prob_f2_exact(int n);

/// prod_{m=1}^{terms} (1 - 2^-m).
struct QPochhammerValue {
  int terms;
  Rational value;
};
QPochhammerValue qpochhammer_half(int terms);

/// Largest n accepted by prob_real_exhaustive.
inline constexpr int kMaxExhaustiveDimension = 5;

/// Fraction of all (n+1)-subsets that are affinely independent over the
/// rationals, by enumeration. 1 <= n <= 5.
Rational prob_real_exhaustive(int n);

/// Trial i tests sample_random_design(n, n+1, derive_seed(seed, i)). The
/// count does not depend on `workers` (0 = hardware concurrency).
ProbabilityEstimate prob_real_montecarlo(int n, std::uint64_t trials,
                                         std::uint64_t seed, unsigned workers = 0);

enum class CheckMode { exhaustive, sampled };

struct ImplicationCheck {
  std::uint64_t subsets_checked = 0;
  std::uint64_t f2_independent = 0;
  /// Subsets independent over GF(2) but dependent over the rationals.
  std::uint64_t counterexamples = 0;
};

/// Exhaustive mode enumerates every (n+1)-subset and requires n <= 4;
/// sampled mode draws `budget` subsets from `seed`.
ImplicationCheck f2_implies_real_check(int n, CheckMode mode, std::uint64_t budget,
                                       std::uint64_t seed);

}  // namespace hcube
