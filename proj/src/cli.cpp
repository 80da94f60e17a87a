#include "hcube/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hcube/approximation.hpp"
#include "hcube/designs.hpp"
#include "hcube/error.hpp"
#include "hcube/io.hpp"
#include "hcube/probability.hpp"

namespace hcube::cli {
namespace {

using json = nlohmann::ordered_json;

struct Range {
  int lo;
  int hi;
};

Range parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        s.size() > 6)
      throw ValidationError("malformed dimension range '" + text + "'");
    return std::stoi(s);
  };
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const Range r{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
    if (r.hi < r.lo) throw ValidationError("empty dimension range '" + text + "'");
    return r;
  }
  const int v = to_int(text);
  return {v, v};
}

/// Writes to --out when given, otherwise to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw IoError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : fallback_; }
  bool to_file() const { return file_.is_open(); }
  void finish() {
    if (file_.is_open()) {
      file_.close();
      if (!file_) throw IoError("failed writing output file");
    }
  }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

std::string format_double(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::optional<int> decimals(int flag) { return flag >= 0 ? std::optional<int>(flag) : std::nullopt; }

void check_order_flag(int n, int k) {
  if (k < 0 || k > n)
    throw ValidationError("--k " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
}

void check_enumerable(int n, const char* what) {
  if (n > kMaxEnumerableDimension)
    throw ValidationError(std::string(what) + " supports n <= " + std::to_string(kMaxEnumerableDimension));
}

// ---- design ---------------------------------------------------------------

struct DesignArgs {
  int n = 0;
  int k = -1;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int emit_design(const Design& d, const DesignArgs& a, std::ostream& out, std::ostream& err) {
  Sink sink(a.out, out);
  write_design(sink.stream(), d);
  std::ostream& info = sink.to_file() ? out : err;
  sink.finish();
  info << "size: " << d.size() << '\n';
  if (a.k >= 0) {
    check_order_flag(d.dimension(), a.k);
    info << "covers_all(k=" << a.k << "): " << (covers_all(d, a.k) ? "yes" : "no") << '\n';
  }
  return kSuccess;
}

// ---- check ----------------------------------------------------------------

struct CheckArgs {
  std::string path;
  int n = -1;
  int k = 0;
  bool as_json = false;
  std::string out;
};

int run_check(const CheckArgs& a, std::ostream& out) {
  const Design d = read_design_file(a.path);
  if (a.n >= 0) require_same_dimension(a.n, d.dimension(), "--n versus design file");
  check_order_flag(d.dimension(), a.k);

  std::vector<bool> orders;
  int max_certified = -1;
  for (int k = 0; k <= a.k; ++k) {
    orders.push_back(covers_all(d, k));
    if (orders.back() && max_certified == k - 1) max_certified = k;
  }

  Sink sink(a.out, out);
  std::ostream& o = sink.stream();
  if (a.as_json) {
    json j;
    j["design"] = a.path;
    j["n"] = d.dimension();
    j["design_size"] = d.size();
    j["orders"] = json::array();
    for (int k = 0; k <= a.k; ++k)
      j["orders"].push_back({{"k", k}, {"covers_all", static_cast<bool>(orders[static_cast<std::size_t>(k)])}});
    j["max_certified_order"] = max_certified >= 0 ? json(max_certified) : json(nullptr);
    o << j.dump(2) << '\n';
  } else {
    o << "design: " << a.path << '\n' << "n: " << d.dimension() << '\n' << "size: " << d.size() << '\n';
    for (int k = 0; k <= a.k; ++k)
      o << "order " << k << ": " << (orders[static_cast<std::size_t>(k)] ? "yes" : "no") << '\n';
    o << "max certified order: " << (max_certified >= 0 ? std::to_string(max_certified) : "none") << '\n';
  }
  sink.finish();
  return kSuccess;
}

// ---- predict / complete ---------------------------------------------------

enum class Status { measured, predicted, undetermined };

struct Entry {
  Vertex vertex;
  Status status;
  std::optional<Rational> value;
  int degree;
};

struct Report {
  int n;
  int k;
  std::size_t design_size;
  bool covers_all;
  std::vector<Entry> entries;
};

std::string_view status_name(Status s) {
  switch (s) {
    case Status::measured:
      return "measured";
    case Status::predicted:
      return "predicted";
    case Status::undetermined:
      return "undetermined";
  }
  return "";
}

void write_report(std::ostream& o, const Report& r, bool as_json, std::optional<int> digits) {
  if (as_json) {
    json j;
    j["summary"] = {{"n", r.n}, {"k", r.k}, {"design_size", r.design_size}, {"covers_all", r.covers_all}};
    j["entries"] = json::array();
    for (const Entry& e : r.entries) {
      json item;
      item["vertex"] = to_bitstring(e.vertex);
      item["status"] = status_name(e.status);
      item["value"] = e.value ? json(format_value(*e.value, digits)) : json(nullptr);
      item["degree"] = e.status == Status::undetermined ? json(nullptr) : json(e.degree);
      j["entries"].push_back(std::move(item));
    }
    o << j.dump(2) << '\n';
    return;
  }
  o << "# k=" << r.k << " design_size=" << r.design_size << " covers_all=" << (r.covers_all ? "true" : "false")
    << '\n';
  o << "vertex,status,value,degree\n";
  for (const Entry& e : r.entries) {
    o << to_bitstring(e.vertex) << ',' << status_name(e.status) << ',';
    if (e.value) o << format_value(*e.value, digits);
    o << ',';
    if (e.status != Status::undetermined) o << e.degree;
    o << '\n';
  }
}

struct PredictArgs {
  std::string path;
  std::string target;
  bool all = false;
  int k = 0;
  bool as_json = false;
  int decimal = -1;
  std::string out;
};

int run_predict(const PredictArgs& a, std::ostream& out, std::ostream& err) {
  const Design d = read_values_file(a.path);
  const int n = d.dimension();
  check_order_flag(n, a.k);
  if (a.all == !a.target.empty()) throw ValidationError("give exactly one of --target or --all");
  if (a.all) check_enumerable(n, "predict --all");

  const DesignSolver solver(d.vertices(), a.k);
  Report report{n, a.k, d.size(), solver.covers_all(), {}};
  auto entry_for = [&](const Vertex& t) -> Entry {
    if (const std::size_t j = d.index_of(t); j != d.size()) return {t, Status::measured, d.values()[j], n};
    if (!solver.determinable(t)) return {t, Status::undetermined, std::nullopt, a.k};
    return {t, Status::predicted, solver.approximate(d.values(), t), a.k};
  };

  if (a.all) {
    // One solve per vertex: 2^n of them.
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) report.entries.push_back(entry_for(Vertex(n, b)));
  } else {
    const Vertex t = parse_vertex(a.target);
    require_same_dimension(n, t.dimension(), "--target versus values file");
    Entry e = entry_for(t);
    if (e.status == Status::undetermined) {
      err << "error: " << a.target << " is not determinable at order " << a.k << '\n';
      return kNotDeterminable;
    }
    report.entries.push_back(std::move(e));
  }

  Sink sink(a.out, out);
  write_report(sink.stream(), report, a.as_json, decimals(a.decimal));
  sink.finish();
  return kSuccess;
}

struct CompleteArgs {
  std::string path;
  int k = 0;
  bool as_json = false;
  int decimal = -1;
  std::string out;
};

int run_complete(const CompleteArgs& a, std::ostream& out) {
  const Design d = read_values_file(a.path);
  const int n = d.dimension();
  check_order_flag(n, a.k);
  check_enumerable(n, "complete");
  const std::vector<Rational> landscape = complete_from_ball(d, a.k);
  const auto digits = decimals(a.decimal);

  Sink sink(a.out, out);
  std::ostream& o = sink.stream();
  if (a.as_json) {
    Report report{n, a.k, d.size(), true, {}};
    for (std::uint64_t b = 0; b < landscape.size(); ++b) {
      const Vertex v(n, b);
      const bool measured = v.weight() <= a.k;
      report.entries.push_back({v, measured ? Status::measured : Status::predicted, landscape[b], measured ? n : a.k});
    }
    write_report(o, report, true, digits);
  } else {
    o << "vertex,value\n";
    for (std::uint64_t b = 0; b < landscape.size(); ++b)
      o << to_bitstring(Vertex(n, b)) << ',' << format_value(landscape[b], digits) << '\n';
  }
  sink.finish();
  return kSuccess;
}

// ---- prob -----------------------------------------------------------------

struct ProbArgs {
  std::string method;
  std::string range;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  bool as_json = false;
  int decimal = -1;
  std::string out;
};

int run_prob(const ProbArgs& a, std::ostream& out) {
  const Range r = parse_range(a.range);
  if (r.lo < 1) throw ValidationError("dimensions start at 1");
  ProbabilityMethod method{};
  if (a.method == "f2") {
    method = ProbabilityMethod::exact_f2;
    if (r.hi > 4096) throw ValidationError("f2 supports n <= 4096");
  } else if (a.method == "exact") {
    method = ProbabilityMethod::exhaustive_real;
    if (r.hi > kMaxExhaustiveDimension)
      throw ValidationError("exact supports n <= " + std::to_string(kMaxExhaustiveDimension));
  } else if (a.method == "mc") {
    method = ProbabilityMethod::monte_carlo;
    if (r.hi > kMaxEnumerableDimension)
      throw ValidationError("mc supports n <= " + std::to_string(kMaxEnumerableDimension));
    if (a.trials < 1) throw ValidationError("--trials must be positive");
  } else {
    throw ValidationError("unknown method '" + a.method + "' (expected f2, exact or mc)");
  }

  std::vector<ProbabilityEstimate> rows;
  for (int n = r.lo; n <= r.hi; ++n) {
    if (method == ProbabilityMethod::monte_carlo) {
      rows.push_back(prob_real_montecarlo(n, a.trials, a.seed));
    } else {
      ProbabilityEstimate e;
      e.n = n;
      e.method = method;
      e.exact = method == ProbabilityMethod::exact_f2 ? prob_f2_exact(n) : prob_real_exhaustive(n);
      rows.push_back(std::move(e));
    }
  }

  const int mc_digits = a.decimal >= 0 ? a.decimal : 6;
  auto probability_text = [&](const ProbabilityEstimate& e) {
    if (e.method == ProbabilityMethod::monte_carlo) return format_decimal(e.value(), mc_digits);
    return format_value(e.exact, decimals(a.decimal));
  };

  Sink sink(a.out, out);
  std::ostream& o = sink.stream();
  if (a.as_json) {
    json j;
    j["method"] = method_name(method);
    j["rows"] = json::array();
    for (const ProbabilityEstimate& e : rows) {
      json item{{"n", e.n}, {"method", method_name(e.method)}, {"probability", probability_text(e)}};
      if (e.method == ProbabilityMethod::monte_carlo) {
        item["std_error"] = e.std_error;
        item["successes"] = e.successes;
        item["trials"] = e.trials;
        item["seed"] = e.seed;
      } else {
        item["std_error"] = nullptr;
        item["successes"] = nullptr;
        item["trials"] = nullptr;
        item["seed"] = nullptr;
      }
      j["rows"].push_back(std::move(item));
    }
    j["reference"] = {kRealLowerBoundNote, kRealConjectureNote, kF2LimitNote};
    o << j.dump(2) << '\n';
  } else {
    o << "n,method,probability,std_error,trials,seed\n";
    for (const ProbabilityEstimate& e : rows) {
      o << e.n << ',' << method_name(e.method) << ',' << probability_text(e) << ',';
      if (e.method == ProbabilityMethod::monte_carlo)
        o << format_double(e.std_error, mc_digits) << ',' << e.trials << ',' << e.seed;
      else
        o << ",,";
      o << '\n';
    }
  }
  sink.finish();
  return kSuccess;
}

// ---- counts ---------------------------------------------------------------

struct CountsArgs {
  std::string range;
  int k = 0;
  bool as_json = false;
  std::string out;
};

int run_counts(const CountsArgs& a, std::ostream& out) {
  const Range r = parse_range(a.range);
  const auto rows = counting_table(r.lo, r.hi, a.k);
  Sink sink(a.out, out);
  std::ostream& o = sink.stream();
  if (a.as_json) {
    json j = json::array();
    for (const CountingRow& row : rows)
      j.push_back({{"n", row.n},
                   {"k", row.k},
                   {"ball_size", row.ball_size.get_str()},
                   {"generic_size", row.generic_size.get_str()}});
    o << j.dump(2) << '\n';
  } else {
    o << "n,k,ball_size,generic_size\n";
    for (const CountingRow& row : rows)
      o << row.n << ',' << row.k << ',' << row.ball_size.get_str() << ',' << row.generic_size.get_str() << '\n';
  }
  sink.finish();
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximate functions on hypercube vertices from partial measurements", "hcube"};
  app.require_subcommand(1);

  DesignArgs design_args;
  auto* design = app.add_subcommand("design", "Generate a measurement design");
  design->require_subcommand(1);
  auto* ball = design->add_subcommand("ball", "All vertices of Hamming weight <= k");
  ball->add_option("--n", design_args.n, "Dimension")->required()->check(CLI::Range(1, kMaxDimension));
  ball->add_option("--k", design_args.k, "Radius, also certified")->required()->check(CLI::NonNegativeNumber);
  ball->add_option("--out", design_args.out, "Output file (default stdout)");
  auto* random = design->add_subcommand("random", "m distinct uniformly random vertices");
  random->add_option("--n", design_args.n, "Dimension")->required()->check(CLI::Range(1, kMaxEnumerableDimension));
  random->add_option("--m", design_args.m, "Number of vertices")->required();
  random->add_option("--seed", design_args.seed, "Random seed")->required();
  random->add_option("--k", design_args.k, "Order to certify")->check(CLI::NonNegativeNumber);
  random->add_option("--out", design_args.out, "Output file (default stdout)");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Certify the orders to which a design determines every vertex");
  check->add_option("design", check_args.path, "Design file")->required();
  check->add_option("--n", check_args.n, "Expected dimension");
  check->add_option("--k", check_args.k, "Highest order to test")->required()->check(CLI::NonNegativeNumber);
  check->add_flag("--json", check_args.as_json, "JSON output");
  check->add_option("--out", check_args.out, "Output file (default stdout)");

  PredictArgs predict_args;
  auto* predict = app.add_subcommand("predict", "Predict vertex values from measurements");
  predict->add_option("values", predict_args.path, "Values CSV")->required();
  auto* target_opt = predict->add_option("--target", predict_args.target, "Vertex bitstring");
  auto* all_opt = predict->add_flag("--all", predict_args.all, "Report every vertex (2^n solves)");
  target_opt->excludes(all_opt);
  predict->add_option("--k", predict_args.k, "Approximation order")->required()->check(CLI::NonNegativeNumber);
  predict->add_flag("--json", predict_args.as_json, "JSON output");
  predict->add_option("--decimal", predict_args.decimal, "Fixed-point digits")->check(CLI::Range(0, 1000));
  predict->add_option("--out", predict_args.out, "Output file (default stdout)");

  CompleteArgs complete_args;
  auto* complete = app.add_subcommand("complete", "Fill in every vertex from Hamming-ball measurements");
  complete->add_option("values", complete_args.path, "Values CSV")->required();
  complete->add_option("--k", complete_args.k, "Ball radius")->required()->check(CLI::NonNegativeNumber);
  complete->add_flag("--json", complete_args.as_json, "JSON output");
  complete->add_option("--decimal", complete_args.decimal, "Fixed-point digits")->check(CLI::Range(0, 1000));
  complete->add_option("--out", complete_args.out, "Output file (default stdout)");

  ProbArgs prob_args;
  auto* prob = app.add_subcommand("prob", "Probability that n+1 random vertices are affinely independent");
  prob->add_option("method", prob_args.method, "f2 | exact | mc")->required();
  prob->add_option("--n", prob_args.range, "Dimension or range a..b")->required();
  prob->add_option("--trials", prob_args.trials, "Monte Carlo trials per dimension");
  prob->add_option("--seed", prob_args.seed, "Monte Carlo seed");
  prob->add_flag("--json", prob_args.as_json, "JSON output");
  prob->add_option("--decimal", prob_args.decimal, "Fixed-point digits")->check(CLI::Range(0, 1000));
  prob->add_option("--out", prob_args.out, "Output file (default stdout)");

  CountsArgs counts_args;
  auto* counts = app.add_subcommand("counts", "Points needed on the cube versus in general position");
  counts->add_option("--n", counts_args.range, "Dimension or range a..b")->required();
  counts->add_option("--k", counts_args.k, "Degree")->required()->check(CLI::NonNegativeNumber);
  counts->add_flag("--json", counts_args.as_json, "JSON output");
  counts->add_option("--out", counts_args.out, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  try {
    if (ball->parsed()) return emit_design(hamming_ball(design_args.n, design_args.k), design_args, out, err);
    if (random->parsed())
      return emit_design(sample_random_design(design_args.n, design_args.m, design_args.seed), design_args, out, err);
    if (check->parsed()) return run_check(check_args, out);
    if (predict->parsed()) return run_predict(predict_args, out, err);
    if (complete->parsed()) return run_complete(complete_args, out);
    if (prob->parsed()) return run_prob(prob_args, out);
    if (counts->parsed()) return run_counts(counts_args, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const NotDeterminableError& e) {
    err << "error: " << e.what() << '\n';
    return kNotDeterminable;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  }
  return kInvalidInput;
}

}  // namespace hcube::cli
