// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hcube/approximation.hpp"
#include "hcube/designs.hpp"
#include "hcube/linalg.hpp"
#include "hcube/probability.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

namespace {

using namespace hcube;

struct Failure {
  std::string detail;
};

void require(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

std::string str(const Rational& r) { return r.get_str(); }

// 1. Tightness matrix golden values.
std::string tightness_golden() {
  const EvaluationMatrix m = tightness_matrix(4, 2);
  require(m.rows() == 11 && m.cols() == 11, "shape is not 11x11");
  for (std::size_t j = 0; j < 11; ++j)
    require(to_bitstring(m.vertices()[j]) == golden::kTightness42Columns[j], "column order differs at " + std::to_string(j));
  for (std::size_t i = 0; i < 11; ++i) {
    require(to_term(m.basis()[i]) == golden::kTightness42Rows[i], "row order differs at " + std::to_string(i));
    for (std::size_t j = 0; j < 11; ++j) {
      require(m.at(i, j) == golden::kTightness42[i][j], "entry differs at " + std::to_string(i) + "," + std::to_string(j));
      if (j > i) require(m.at(i, j) == 0, "not lower triangular");
    }
    require(m.at(i, i) == 1, "diagonal entry is not 1");
  }
  const std::size_t rank = rank_rational(m);
  require(rank == 11, "rank " + std::to_string(rank));
  return "121 entries match, unit lower triangular, rank 11";
}

// 2. Signed-sum identity on the 3-cube for random quadratics.
std::string signed_sum_identity() {
  std::mt19937_64 rng(20240601);
  const Vertex top = parse_vertex("111");
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = oracle::random_polynomial(3, 2, rng, -9, 9);
    std::map<Vertex, Rational> values;
    for (const Vertex& v : oracle::all_vertices(3))
      if (v != top) values[v] = oracle::evaluate(f, v);
    const Rational got = lemma_reconstruct(values, top);
    require(got == oracle::evaluate(f, top), "trial " + std::to_string(trial) + " gave " + str(got));
  }
  return "100 quadratics reproduced at 111";
}

// 3. Ball completion is exact and agrees with per-vertex solves.
std::string exactness_suite() {
  std::mt19937_64 rng(7);
  std::size_t checked = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      const Design ball = hamming_ball(n, k);
      const DesignSolver solver(ball.vertices(), k);
      require(solver.covers_all(), "ball(" + std::to_string(n) + "," + std::to_string(k) + ") does not cover");
      for (int rep = 0; rep < 50; ++rep) {
        const auto f = oracle::random_polynomial(n, k, rng);
        std::vector<Rational> values;
        for (const Vertex& v : ball.vertices()) values.push_back(oracle::evaluate(f, v));
        const auto full = complete_from_ball(ball.with_values(values), k);
        for (const Vertex& v : oracle::all_vertices(n)) {
          const Rational truth = oracle::evaluate(f, v);
          const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " v=" + to_bitstring(v);
          require(full[v.bits()] == truth, "completion wrong at " + where);
          require(solver.approximate(values, v) == truth, "per-vertex solve wrong at " + where);
          ++checked;
        }
      }
    }
  }
  return std::to_string(checked) + " vertex values exact by both routes";
}

// 4. Counting table.
std::string counting_claims() {
  const auto two = counting_table(12, 12, 2).front();
  const auto three = counting_table(12, 12, 3).front();
  require(two.ball_size == 79 && two.generic_size == 91, "k=2 row " + two.ball_size.get_str() + " vs " + two.generic_size.get_str());
  require(three.ball_size == 299 && three.generic_size == 455,
          "k=3 row " + three.ball_size.get_str() + " vs " + three.generic_size.get_str());
  std::size_t rows = 0;
  std::vector<std::string> not_smaller;
  for (int k = 1; k < 64; ++k)
    for (const CountingRow& row : counting_table(k + 1, 64, k)) {
      // Independent count: C(n+k, k) by the multiplicative formula, and the ball by summation.
      Integer generic = 1;
      for (int i = 1; i <= k; ++i) generic = generic * (row.n + i) / i;
      Integer ball = 0;
      Integer c = 1;
      for (int i = 0; i <= k; ++i) {
        ball += c;
        c = c * (row.n - i) / (i + 1);
      }
      require(row.ball_size == ball && row.generic_size == generic, "row n=" + std::to_string(row.n));
      if (!(row.ball_size < row.generic_size))
        not_smaller.push_back("n=" + std::to_string(row.n) + ",k=" + std::to_string(k) + " (" +
                              row.ball_size.get_str() + " vs " + row.generic_size.get_str() + ")");
      ++rows;
    }
  if (!not_smaller.empty()) {
    std::string all_k1 = "all with k=1";
    for (const std::string& r : not_smaller)
      if (r.find(",k=1 ") == std::string::npos) all_k1 = "not only k=1";
    require(false, "ball_size < generic_size fails on " + std::to_string(not_smaller.size()) + " of " +
                       std::to_string(rows) + " rows, " + all_k1 + ", first " + not_smaller.front() +
                       "; both counts equal n+1 at k=1");
  }
  return "12,2: 79 vs 91; 12,3: 299 vs 455; strict over " + std::to_string(rows) + " rows";
}

// 5. Minimality by exhaustive search.
std::string minimality() {
  std::size_t subsets = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= std::min(n, 2); ++k) {
      const Design ball = hamming_ball(n, k);
      require(covers_all(ball, k), "ball(" + std::to_string(n) + "," + std::to_string(k) + ") does not cover");
      const std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
      for (std::uint64_t pick = 1; pick < total; ++pick) {
        if (static_cast<std::size_t>(std::popcount(pick)) >= ball.size()) continue;
        std::vector<Vertex> vs;
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
          if (pick >> b & 1) vs.emplace_back(n, b);
        ++subsets;
        require(!covers_all(Design(vs), k), "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                                                std::to_string(vs.size()) + " points cover");
      }
    }
  }
  return "no covering design below the ball size among " + std::to_string(subsets) + " smaller subsets";
}

// 6. Independence probability over GF(2).
std::string f2_probability() {
  require(prob_f2_exact(3) == Rational(4, 5), "n=3 gives " + str(prob_f2_exact(3)));
  require(prob_f2_exact(1) == 1 && prob_f2_exact(2) == 1, "n=1,2 not 1");
  for (int n = 2; n < 30; ++n)
    require(prob_f2_exact(n + 1) < prob_f2_exact(n), "not decreasing at n=" + std::to_string(n + 1));
  // Independent evaluation of the product formula in doubles.
  for (int n = 1; n <= 30; ++n) {
    const double N = std::ldexp(1.0, n);
    double p = 1;
    for (int i = 0; i < n; ++i) p *= (N - std::ldexp(1.0, i)) / (N - (i + 1));
    require(std::abs(p - prob_f2_exact(n).get_d()) < 1e-12, "formula mismatch at n=" + std::to_string(n));
  }
  const double p30 = prob_f2_exact(30).get_d();
  const double q40 = qpochhammer_half(40).value.get_d();
  require(std::abs(p30 - q40) < 1e-3, "gap to product " + std::to_string(std::abs(p30 - q40)));
  require(std::abs(p30 - 0.288) < 1e-3 && std::abs(q40 - 0.288) < 1e-3, "not near 0.288");
  char buf[96];
  std::snprintf(buf, sizeof buf, "P(30)=%.6f, product(40)=%.6f", p30, q40);
  return buf;
}

// 7. Independence probability over the rationals.
std::string real_probability() {
  for (int n = 1; n <= 3; ++n) {
    // Brute force: every (n+1)-subset, determinant of the rows (1, v).
    const auto all = oracle::all_vertices(n);
    std::vector<bool> pick(all.size(), false);
    std::fill(pick.begin(), pick.begin() + n + 1, true);
    std::uint64_t good = 0;
    std::uint64_t count = 0;
    do {
      std::vector<Vertex> vs;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (pick[i]) vs.push_back(all[i]);
      good += oracle::real_affinely_independent_square(vs);
      ++count;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    Rational brute(static_cast<long>(good), static_cast<long>(count));
    brute.canonicalize();
    require(prob_real_exhaustive(n) == brute, "n=" + std::to_string(n) + " gives " + str(prob_real_exhaustive(n)));
  }
  require(prob_real_exhaustive(3) == Rational(29, 35), "n=3 is not 29/35");
  for (int n = 1; n <= 4; ++n) {
    const auto r = f2_implies_real_check(n, CheckMode::exhaustive, 0, 0);
    require(r.counterexamples == 0, "counterexample at n=" + std::to_string(n));
  }
  const auto sampled = f2_implies_real_check(10, CheckMode::sampled, 100000, 99);
  require(sampled.subsets_checked == 100000 && sampled.counterexamples == 0, "sampled n=10 found counterexamples");
  for (int n = 1; n <= 5; ++n)
    require(prob_f2_exact(n) <= prob_real_exhaustive(n), "GF(2) exceeds real at n=" + std::to_string(n));
  require(prob_f2_exact(3) < prob_real_exhaustive(3), "no strict gap at n=3");
  return "1, 1, 29/35; no counterexamples (exhaustive n<=4, 1e5 samples at n=10, " +
         std::to_string(sampled.f2_independent) + " GF(2)-independent)";
}

// 8. Monte Carlo sweep.
std::string monte_carlo_sweep() {
  const std::uint64_t trials = 100000;
  const std::uint64_t seed = 1;
  for (int n = 3; n <= 4; ++n) {
    const auto e = prob_real_montecarlo(n, trials, seed);
    const double exact = prob_real_exhaustive(n).get_d();
    require(std::abs(e.value().get_d() - exact) <= 3 * e.std_error,
            "n=" + std::to_string(n) + " estimate off by " + std::to_string(std::abs(e.value().get_d() - exact)));
  }
  std::vector<ProbabilityEstimate> sweep;
  for (int n = 7; n <= 14; ++n) sweep.push_back(prob_real_montecarlo(n, trials, seed));
  std::ostringstream curve;
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    const double p = sweep[i].value().get_d();
    require(p >= prob_f2_exact(sweep[i].n).get_d(), "below GF(2) value at n=" + std::to_string(sweep[i].n));
    if (i > 0) {
      const double prev = sweep[i - 1].value().get_d();
      const double step_se = std::hypot(sweep[i - 1].std_error, sweep[i].std_error);
      require(p >= prev - 2 * step_se, "drop at n=" + std::to_string(sweep[i].n));
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%.4f", i ? " " : "", p);
    curve << buf;
  }
  return "n=7..14: " + curve.str();
}

// 9. Determinability against a nullspace oracle.
std::string nullspace_equivalence() {
  std::mt19937_64 rng(4242);
  std::size_t yes = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int k = static_cast<int>(rng() % (n + 1));
    const std::uint64_t cube = std::uint64_t{1} << n;
    const Design s = sample_random_design(n, 1 + rng() % cube, rng());
    const Vertex t(n, rng() % cube);
    const bool got = determinable(s, t, k);
    require(got == oracle::determinable_by_nullspace(s.vertices(), t, k),
            "disagreement at trial " + std::to_string(trial));
    yes += got;
  }
  return "500 instances agree (" + std::to_string(yes) + " determinable)";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<std::string()>>> criteria = {
      {"tightness matrix golden", tightness_golden},
      {"signed-sum identity", signed_sum_identity},
      {"ball completion exactness", exactness_suite},
      {"counting claims", counting_claims},
      {"ball minimality", minimality},
      {"GF(2) independence probability", f2_probability},
      {"real independence probability", real_probability},
      {"Monte Carlo sweep", monte_carlo_sweep},
      {"determinability vs nullspace oracle", nullspace_equivalence},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    std::string status = "PASS";
    std::string detail;
    try {
      detail = check();
    } catch (const Failure& f) {
      status = "FAIL";
      detail = f.detail;
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (status == "FAIL") ++failures;
    std::printf("[%s] %d. %s (%.2fs): %s\n", status.c_str(), index, name, secs, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
