#include "hcube/probability.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "hcube/designs.hpp"
#include "hcube/detail/elimination.hpp"
#include "hcube/error.hpp"
#include "hcube/linalg.hpp"
#include "hcube/random.hpp"

namespace hcube {

std::string_view method_name(ProbabilityMethod method) {
  switch (method) {
    case ProbabilityMethod::exact_f2:
      return "f2";
    case ProbabilityMethod::exhaustive_real:
      return "exact";
    case ProbabilityMethod::monte_carlo:
      return "mc";
  }
  return "unknown";
}

Rational ProbabilityEstimate::value() const {
  if (method != ProbabilityMethod::monte_carlo) return exact;
  Rational r(Integer(static_cast<unsigned long>(successes)), Integer(static_cast<unsigned long>(trials)));
  r.canonicalize();
  return r;
}

Rational prob_f2_exact(int n) {
  if (n < 1) throw ValidationError("prob_f2_exact requires n >= 1");
  if (n > 4096) throw ValidationError("prob_f2_exact supports n <= 4096");
  Integer cube;
  mpz_ui_pow_ui(cube.get_mpz_t(), 2, static_cast<unsigned long>(n));

  Integer numerator = cube;
  for (int i = 0; i < n; ++i) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(i));
    numerator *= cube - power;
  }
  Integer denominator = 1;
  for (int m = 0; m <= n; ++m) denominator *= cube - m;

  Rational p(numerator, denominator);
  p.canonicalize();
  return p;
}

QPochhammerValue qpochhammer_half(int terms) {
  if (terms < 1) throw ValidationError("qpochhammer_half requires at least one term");
  if (terms > 4096) throw ValidationError("qpochhammer_half supports at most 4096 terms");
  Integer numerator = 1;
  for (int m = 1; m <= terms; ++m) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(m));
    numerator *= power - 1;
  }
  Integer denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 2, static_cast<unsigned long>(terms) * (terms + 1) / 2);
  Rational value(numerator, denominator);
  value.canonicalize();
  return {terms, value};
}

namespace {

/// Rational affine independence of the vertices whose words are `bits`,
/// reusing `scratch` between calls.
bool affine_independent_words(std::span<const std::uint64_t> bits, int n,
                              detail::Dense<std::int64_t>& scratch) {
  const std::size_t cols = static_cast<std::size_t>(n) + 1;
  if (bits.size() > cols) return false;
  scratch.rows = bits.size();
  scratch.cols = cols;
  scratch.a.assign(bits.size() * cols, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    scratch(i, 0) = 1;
    for (int c = 0; c < n; ++c) scratch(i, static_cast<std::size_t>(c) + 1) = (bits[i] >> (n - 1 - c)) & 1U;
  }
  const detail::Dense<std::int64_t> copy = scratch;
  try {
    return detail::bareiss_rank(scratch) == bits.size();
  } catch (const detail::Overflow&) {
    detail::Dense<Integer> wide = detail::widen(copy);
    return detail::bareiss_rank(wide) == bits.size();
  }
}

/// Calls visit(indices) for every r-subset of [0, universe) in
/// lexicographic order.
template <class Visit>
void for_each_subset(std::uint64_t universe, std::size_t r, Visit&& visit) {
  if (r > universe) return;
  std::vector<std::uint64_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    visit(std::span<const std::uint64_t>(idx));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == universe - r + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::uint64_t> words_of(const Design& d) {
  std::vector<std::uint64_t> out;
  out.reserve(d.size());
  for (const Vertex& v : d.vertices()) out.push_back(v.bits());
  return out;
}

std::vector<Vertex> vertices_of(std::span<const std::uint64_t> words, int n) {
  std::vector<Vertex> out;
  out.reserve(words.size());
  for (std::uint64_t w : words) out.emplace_back(n, w);
  return out;
}

}  // namespace

Rational prob_real_exhaustive(int n) {
  if (n < 1 || n > kMaxExhaustiveDimension)
    throw ValidationError("exhaustive enumeration supports 1 <= n <= " +
                          std::to_string(kMaxExhaustiveDimension));
  const std::uint64_t universe = std::uint64_t{1} << n;
  detail::Dense<std::int64_t> scratch;
  std::uint64_t independent = 0;
  std::uint64_t total = 0;
  for_each_subset(universe, static_cast<std::size_t>(n) + 1, [&](std::span<const std::uint64_t> s) {
    ++total;
    if (affine_independent_words(s, n, scratch)) ++independent;
  });
  Rational p(Integer(static_cast<unsigned long>(independent)), Integer(static_cast<unsigned long>(total)));
  p.canonicalize();
  return p;
}

ProbabilityEstimate prob_real_montecarlo(int n, std::uint64_t trials, std::uint64_t seed,
                                         unsigned workers) {
  if (n < 1 || n > kMaxEnumerableDimension)
    throw ValidationError("Monte Carlo supports 1 <= n <= " + std::to_string(kMaxEnumerableDimension));
  if (trials < 1) throw ValidationError("Monte Carlo needs at least one trial");
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

  const std::uint64_t m = static_cast<std::uint64_t>(n) + 1;
  std::vector<std::uint64_t> counts(workers, 0);
  auto run_range = [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    detail::Dense<std::int64_t> scratch;
    std::uint64_t count = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const Design d = sample_random_design(n, m, derive_seed(seed, i));
      if (affine_independent_words(words_of(d), n, scratch)) ++count;
    }
    counts[w] = count;
  };

  if (workers == 1) {
    run_range(0, 0, trials);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = trials / workers;
    const std::uint64_t rem = trials % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t end = begin + chunk + (w < rem ? 1 : 0);
      pool.emplace_back(run_range, w, begin, end);
      begin = end;
    }
  }

  ProbabilityEstimate est;
  est.n = n;
  est.method = ProbabilityMethod::monte_carlo;
  for (std::uint64_t c : counts) est.successes += c;
  est.trials = trials;
  est.seed = seed;
  const double p = static_cast<double>(est.successes) / static_cast<double>(trials);
  est.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  est.exact = est.value();
  return est;
}

ImplicationCheck f2_implies_real_check(int n, CheckMode mode, std::uint64_t budget, std::uint64_t seed) {
  ImplicationCheck result;
  auto check = [&](std::span<const std::uint64_t> words) {
    const std::vector<Vertex> vs = vertices_of(words, n);
    ++result.subsets_checked;
    if (!affinely_independent(vs, Field::gf2)) return;
    ++result.f2_independent;
    if (!affinely_independent(vs, Field::rational)) ++result.counterexamples;
  };

  if (mode == CheckMode::exhaustive) {
    if (n < 1 || n > 4) throw ValidationError("exhaustive check supports 1 <= n <= 4");
    for_each_subset(std::uint64_t{1} << n, static_cast<std::size_t>(n) + 1, check);
    return result;
  }
  if (n < 1 || n > kMaxEnumerableDimension)
    throw ValidationError("sampled check supports 1 <= n <= " + std::to_string(kMaxEnumerableDimension));
  if (budget < 1) throw ValidationError("sampled check needs a positive budget");
  for (std::uint64_t i = 0; i < budget; ++i)
    check(words_of(sample_random_design(n, static_cast<std::uint64_t>(n) + 1, derive_seed(seed, i))));
  return result;
}

}  // namespace hcube
