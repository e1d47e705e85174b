#include "pfgm/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "pfgm/applications.hpp"
#include "pfgm/errors.hpp"
#include "pfgm/exact_oracle.hpp"
#include "pfgm/json_io.hpp"
#include "pfgm/taylor_engine.hpp"
#include "pfgm/zero_analysis.hpp"

namespace pfgm::cli {

using nlohmann::json;

namespace {

// exp(value_log) is reported only while it stays comfortably finite.
constexpr double kMaxExponent = 700.0;
constexpr double kDefaultEpsilon = 0.1;

json real_or_label(double x, const char* infinite_label) {
  if (std::isinf(x)) return infinite_label;
  return x;
}

void attach_log(CommandResult& result, Complex log_value) {
  result.value_log = log_value;
  if (std::abs(log_value.real()) <= kMaxExponent) result.value = std::exp(log_value);
}

void attach_approximation(CommandResult& result, const ApproximationResult& approx) {
  result.error_bound = approx.error_bound;
  result.order = approx.order;
  result.beta = approx.beta;
  result.diagnostics["support_edges"] = approx.support_edges;
  result.diagnostics["log_at_j"] = approx.log_at_j;
}

void attach_count(CommandResult& result, const CountResult& count, std::ostream& err) {
  if (count.approximation) {
    attach_log(result, *count.log_value);
    attach_approximation(result, *count.approximation);
  } else {
    result.value = count.value;
    if (count.log_value) result.value_log = count.log_value;
  }
  if (!count.warnings.empty()) {
    result.diagnostics["warnings"] = count.warnings;
    for (const auto& w : count.warnings) err << "warning: " << w << '\n';
  }
}

MultiplicityVector read_mult(const Graph& g, const std::string& csv, std::ostream& err) {
  const std::vector<long long> counts = parse_csv_integers(csv);
  MultiplicityVector m = validate_multiplicities(g, counts);
  if (m.has_zero()) {
    err << "warning: --mult has zero entries; zero-free guarantees are stated for positive "
           "multiplicities\n";
  }
  return m;
}

Evaluation evaluation_from(bool exact, std::optional<double> eps) {
  if (exact) return Exact{};
  return Approximate{eps.value_or(kDefaultEpsilon)};
}

// Flags shared across subcommands are collected here; each subcommand reads
// the ones it registered.
struct Flags {
  std::string graph, weights, matrix, host, mult;
  std::optional<int> order, size, trials;
  std::optional<double> eps, gamma, edges, delta;
  std::optional<std::uint64_t> seed;
  bool exact = false, distinguish = false, cycles = false;
};

}  // namespace

Environment Environment::from_process() {
  Environment env;
  if (const char* cap = std::getenv("PFGM_WORK_CAP")) {
    char* end = nullptr;
    const double value = std::strtod(cap, &end);
    if (end != cap && value > 0) {
      env.options.work_cap = value;
      env.options.enumeration_cap = value;
    }
  }
  env.options.threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* threads = std::getenv("PFGM_THREADS")) {
    const long value = std::strtol(threads, nullptr, 10);
    if (value > 0) env.options.threads = static_cast<unsigned>(value);
  }
  return env;
}

json CommandResult::to_json() const {
  json doc = json::object();
  doc["command"] = command;
  if (value_log) doc["value_log"] = complex_to_json(*value_log);
  if (value) doc["value"] = complex_to_json(*value);
  if (error_bound) doc["error_bound"] = *error_bound ? json(**error_bound) : json("none");
  if (order) doc["order"] = *order;
  if (beta) doc["beta"] = real_or_label(*beta, "unbounded");
  doc["diagnostics"] = diagnostics;
  return doc;
}

std::vector<long long> parse_csv_integers(const std::string& text) {
  std::vector<long long> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string token =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    long long value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last) {
      throw InputError("--mult: \"" + token + "\" is not an integer");
    }
    values.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  const ComputeOptions& options = env.options;
  CLI::App app{"Partition functions of graph homomorphisms with multiplicities", "pfgm"};
  app.require_subcommand(1);
  Flags f;
  std::string command = args.empty() ? std::string() : args.front();
  std::function<CommandResult()> action;

  auto add = [&](const char* name, const char* help, std::function<CommandResult()> body) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&, name, body] {
      command = name;
      action = body;
    });
    return sub;
  };
  auto graph_opt = [&](CLI::App* s) { s->add_option("--graph", f.graph, "graph JSON file")->required(); };
  auto mult_opt = [&](CLI::App* s) { s->add_option("--mult", f.mult, "comma-separated multiplicities")->required(); };
  auto weights_opt = [&](CLI::App* s) { s->add_option("--weights", f.weights, "weights JSON file")->required(); };
  auto eval_opts = [&](CLI::App* s) {
    auto* exact = s->add_flag("--exact", f.exact, "brute-force evaluation");
    s->add_option("--eps", f.eps, "certified additive error on the logarithm")->excludes(exact);
  };

  auto* exact_cmd = add("exact", "Q_{G,m}(B) by enumeration", [&]() {
    const Graph g = graph_from_json(load_json_file(f.graph));
    const MultiplicityVector m = read_mult(g, f.mult, err);
    const EdgeWeights w = weights_from_json(load_json_file(f.weights), g);
    CommandResult r;
    const Complex q = exact_partition(g, m, w, options);
    r.value = q;
    if (q != Complex(0.0)) r.value_log = std::log(q);
    r.diagnostics["deviation"] = deviation(w);
    r.diagnostics["support_edges"] = w.support_edges().size();
    return r;
  });
  graph_opt(exact_cmd);
  mult_opt(exact_cmd);
  weights_opt(exact_cmd);

  auto* approx_cmd = add("approx", "Taylor approximation of ln Q_{G,m}(B)", [&]() {
    const Graph g = graph_from_json(load_json_file(f.graph));
    const MultiplicityVector m = read_mult(g, f.mult, err);
    const EdgeWeights w = weights_from_json(load_json_file(f.weights), g);
    if (!f.order && !f.eps) throw InputError("approx: exactly one of --order or --eps is required");
    OrderMode mode = f.order ? OrderMode{FixedOrder{*f.order}} : OrderMode{TargetEpsilon{*f.eps}};
    const ApproximationResult a = approximate_log_partition(g, m, w, mode, options);
    CommandResult r;
    attach_log(r, a.log_value);
    attach_approximation(r, a);
    r.diagnostics["deviation"] = deviation(w);
    return r;
  });
  graph_opt(approx_cmd);
  mult_opt(approx_cmd);
  weights_opt(approx_cmd);
  {
    auto* order = approx_cmd->add_option("--order", f.order, "fixed Taylor order n");
    auto* eps = approx_cmd->add_option("--eps", f.eps, "target additive error on the logarithm");
    order->excludes(eps);
  }

  auto* indep_cmd = add("indep", "independent sets of a given size", [&]() {
    const Graph g = graph_from_json(load_json_file(f.graph));
    const int s = *f.size;
    const Evaluation evaluation = evaluation_from(f.exact, std::nullopt);
    CommandResult r;
    if (f.distinguish) {
      if (!f.edges) throw InputError("--distinguish requires --edges X");
      const double gamma = f.gamma.value_or(kZeroRegion.gamma_default);
      const IndependenceVerdict v = distinguish_independent(g, s, *f.edges, gamma, evaluation, options);
      r.value = Complex(v.weighted_sum);
      if (v.weighted_sum > 0) r.value_log = std::log(Complex(v.weighted_sum));
      if (v.approximation) attach_approximation(r, *v.approximation);
      json labels = json::array();
      if (v.sparse_subset_exists) labels.push_back("SPARSE_SUBSET_EXISTS");
      if (v.few_independent) labels.push_back("FEW_INDEPENDENT");
      r.diagnostics["N"] = v.weighted_sum;
      r.diagnostics["T"] = v.threshold;
      r.diagnostics["rel_err"] = v.rel_err;
      r.diagnostics["gamma"] = gamma;
      r.diagnostics["verdict"] = labels;
      return r;
    }
    const WeightMode mode = (f.exact && !f.gamma) ? WeightMode{Hard{}}
                                                   : WeightMode{Soft{f.gamma.value_or(kZeroRegion.gamma_default)}};
    attach_count(r, evaluate(independent_set_instance(g, s, mode), evaluation, options), err);
    r.diagnostics["mode"] = std::holds_alternative<Hard>(mode) ? "hard" : "soft";
    return r;
  });
  graph_opt(indep_cmd);
  indep_cmd->add_option("--size", f.size, "independent set size s")->required();
  indep_cmd->add_option("--gamma", f.gamma, "soft-mode gamma (default 0.1)");
  indep_cmd->add_flag("--exact", f.exact, "brute-force evaluation");
  indep_cmd->add_flag("--distinguish", f.distinguish, "run the sparse-vs-independent test");
  indep_cmd->add_option("--edges", f.edges, "edge threshold x for --distinguish");

  auto* haf_cmd = add("hafnian", "hafnian of a symmetric matrix", [&]() {
    const SymmetricMatrix a = parse_matrix(load_json_file(f.matrix));
    CommandResult r;
    attach_count(r, hafnian(a, evaluation_from(f.exact, f.eps), options), err);
    return r;
  });
  haf_cmd->add_option("--matrix", f.matrix, "matrix JSON file")->required();
  eval_opts(haf_cmd);

  auto* ham_cmd = add("hamperm", "Hamiltonian permanent / Hamiltonian cycles", [&]() {
    const SymmetricMatrix a = parse_matrix(load_json_file(f.matrix));
    const auto target = f.cycles ? HamiltonianTarget::kCycles : HamiltonianTarget::kPermanent;
    CommandResult r;
    attach_count(r, hamiltonian_permanent(a, evaluation_from(f.exact, f.eps), target, options), err);
    r.diagnostics["target"] = f.cycles ? "cycles" : "permanent";
    return r;
  });
  ham_cmd->add_option("--matrix", f.matrix, "matrix JSON file")->required();
  eval_opts(ham_cmd);
  ham_cmd->add_flag("--cycles", f.cycles, "count undirected Hamiltonian cycles (divide by 2n)");

  auto* clique_cmd = add("clique", "clique counts and clique-density sums", [&]() {
    const HostGraph host = host_from_json(load_json_file(f.host));
    const WeightMode mode = (f.exact && !f.gamma) ? WeightMode{Hard{}}
                                                   : WeightMode{Soft{f.gamma.value_or(kZeroRegion.gamma_default)}};
    CommandResult r;
    attach_count(r, clique_density_sum(host, *f.size, mode, evaluation_from(f.exact, std::nullopt), options), err);
    r.diagnostics["mode"] = std::holds_alternative<Hard>(mode) ? "hard" : "soft";
    return r;
  });
  clique_cmd->add_option("--host", f.host, "host graph JSON file")->required();
  clique_cmd->add_option("--size", f.size, "clique size n")->required();
  clique_cmd->add_option("--gamma", f.gamma, "soft-mode gamma (default 0.1)");
  clique_cmd->add_flag("--exact", f.exact, "brute-force evaluation");

  auto* color_cmd = add("color", "colorings with prescribed color-class sizes", [&]() {
    const Graph g = graph_from_json(load_json_file(f.graph));
    const MultiplicityVector m = read_mult(g, f.mult, err);
    const WeightMode mode = (f.exact && !f.gamma) ? WeightMode{Hard{}}
                                                   : WeightMode{Soft{f.gamma.value_or(kZeroRegion.gamma_default)}};
    CommandResult r;
    attach_count(r, coloring_partition(g, m, mode, evaluation_from(f.exact, std::nullopt), options), err);
    r.diagnostics["mode"] = std::holds_alternative<Hard>(mode) ? "hard" : "soft";
    return r;
  });
  graph_opt(color_cmd);
  mult_opt(color_cmd);
  color_cmd->add_option("--gamma", f.gamma, "soft-mode gamma (default 0.1)");
  color_cmd->add_flag("--exact", f.exact, "brute-force evaluation");

  auto* scan_cmd = add("zero-scan", "random spot check of the zero-free polydisc", [&]() {
    const Graph g = graph_from_json(load_json_file(f.graph));
    const MultiplicityVector m = read_mult(g, f.mult, err);
    const ScanReport report = polydisc_scan(g, m, *f.delta, *f.trials, *f.seed, options);
    CommandResult r;
    r.diagnostics = {{"trials", report.trials},
                     {"delta", report.delta},
                     {"min_abs_ratio", report.min_abs_ratio},
                     {"zero_count", report.zero_count},
                     {"seed", report.seed}};
    return r;
  });
  graph_opt(scan_cmd);
  mult_opt(scan_cmd);
  scan_cmd->add_option("--delta", f.delta, "polydisc radius")->required();
  scan_cmd->add_option("--trials", f.trials, "number of random samples")->required();
  scan_cmd->add_option("--seed", f.seed, "generator seed")->required();

  auto* margin_cmd = add("root-margin", "smallest root modulus of t -> Q(J + t(B - J))", [&]() {
    const Graph g = graph_from_json(load_json_file(f.graph));
    const MultiplicityVector m = read_mult(g, f.mult, err);
    const EdgeWeights w = weights_from_json(load_json_file(f.weights), g);
    const double margin = root_margin(g, m, w, options);
    CommandResult r;
    r.beta = compute_beta(g, w);
    r.diagnostics["root_margin"] = real_or_label(margin, "unbounded");
    r.diagnostics["deviation"] = deviation(w);
    r.diagnostics["margin_at_least_beta"] = margin >= *r.beta;
    return r;
  });
  graph_opt(margin_cmd);
  mult_opt(margin_cmd);
  weights_opt(margin_cmd);

  auto fail = [&](const std::string& message, const char* kind, int code) {
    json doc = {{"command", command}, {"error", message}, {"error_kind", kind}};
    out << dump_json(doc) << '\n';
    err << "error: " << message << '\n';
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    return fail(e.what(), "usage", kInputError);
  }

  try {
    CommandResult result = action();
    result.command = command;
    out << dump_json(result.to_json()) << '\n';
    return kSuccess;
  } catch (const InputError& e) {
    return fail(e.what(), "input", kInputError);
  } catch (const Refusal& e) {
    return fail(e.what(), "refused", kRefused);
  } catch (const std::exception& e) {
    return fail(e.what(), "input", kInputError);
  }
}

}  // namespace pfgm::cli
