// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pfgm/applications.hpp"
#include "pfgm/cli.hpp"
#include "pfgm/combinatorics.hpp"
#include "pfgm/exact_oracle.hpp"
#include "pfgm/taylor_engine.hpp"
#include "pfgm/zero_analysis.hpp"
#include "test_support.hpp"

using namespace pfgm;
using namespace pfgm::testing;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) detail = what;
    ok = ok && condition;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

double rel_err(Complex a, Complex b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

// Integer multinomial as a product of binomials, each step exact in 64 bits.
std::uint64_t multinomial_by_binomials(const std::vector<long long>& counts) {
  std::uint64_t result = 1;
  long long placed = 0;
  for (long long c : counts) {
    placed += c;
    std::uint64_t binom = 1;
    for (long long r = 1; r <= c; ++r) binom = binom * (placed - c + r) / r;
    result *= binom;
  }
  return result;
}

// criterion 1
Check closed_form_baseline() {
  Check check;
  const auto start = Clock::now();
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(rng, 2, 8, 0.5);
    const int k = uniform_int(rng, 1, 4);
    const auto counts = random_composition(rng, g.vertex_count(), k, false);
    const MultiplicityVector m = validate_multiplicities(g, counts);
    const Complex q = exact_partition(g, m, all_ones(g, k));
    const std::uint64_t expected = multinomial_by_binomials(counts);
    check.expect(q.imag() == 0.0 && q.real() == static_cast<double>(expected) &&
                     static_cast<std::uint64_t>(q.real()) == expected,
                 fmt("trial %d: %.17g != %llu", trial, q.real(),
                     static_cast<unsigned long long>(expected)));
  }
  const double elapsed = seconds_since(start);
  check.expect(elapsed < 10.0, fmt("took %.2f s", elapsed));
  if (check.ok) check.detail = fmt("50 graphs, %.3f s", elapsed);
  return check;
}

SymmetricMatrix ones_matrix(int n, bool zero_diagonal) {
  std::vector<std::vector<Complex>> rows(n, std::vector<Complex>(n, 1.0));
  if (zero_diagonal) {
    for (int i = 0; i < n; ++i) rows[i][i] = 0.0;
  }
  return SymmetricMatrix::from_rows(rows);
}

std::vector<std::vector<Complex>> as_rows(const SymmetricMatrix& a) {
  std::vector<std::vector<Complex>> rows(a.size(), std::vector<Complex>(a.size()));
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) rows[i][j] = a(i, j);
  }
  return rows;
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::build(n, edges);
}

// criterion 2
Check adapter_correctness() {
  Check check;
  auto compare = [&](const char* name, Complex value, double direct, double stated) {
    check.expect(value.imag() == 0.0 && value.real() == direct && direct == stated,
                 fmt("%s: adapter %.17g, enumerator %.17g, expected %.0f", name, value.real(),
                     direct, stated));
  };

  const SymmetricMatrix ones4 = ones_matrix(4, false);
  compare("hafnian(ones 4x4)", hafnian(ones4, Exact{}).value,
          hafnian_reference(as_rows(ones4)).real(), 3);

  const SymmetricMatrix k4 = ones_matrix(4, true);
  compare("hamiltonian cycles K4",
          hamiltonian_permanent(k4, Exact{}, HamiltonianTarget::kCycles).value,
          cyclic_permanent_reference(as_rows(k4)).real() / 2, 3);

  const Graph c3 = cycle_graph(3);
  compare("(1,1,1)-colorings C3",
          coloring_partition(c3, validate_multiplicities(c3, {1, 1, 1}), Hard{}, Exact{}).value,
          weighted_colorings(c3, {1, 1, 1}, 0.0), 6);

  const Graph c5 = cycle_graph(5);
  compare("independent 2-sets C5", evaluate(independent_set_instance(c5, 2, Hard{}), Exact{}).value,
          static_cast<double>(count_independent_sets(c5, 2)), 5);

  std::vector<Edge> k4_edges;
  std::vector<std::vector<bool>> adj(4, std::vector<bool>(4, true));
  for (int i = 0; i < 4; ++i) {
    adj[i][i] = false;
    for (int j = i + 1; j < 4; ++j) k4_edges.push_back({i, j});
  }
  compare("triangles K4", clique_density_sum(HostGraph::build(4, k4_edges), 3, Hard{}, Exact{}).value,
          static_cast<double>(count_cliques(adj, 3)), 4);
  if (check.ok) check.detail = "hafnian 3, cycles 3, colorings 6, independent sets 5, triangles 4";
  return check;
}

struct Instance {
  Graph graph;
  std::vector<long long> counts;
  MultiplicityVector mult;
  EdgeWeights weights;
};

// 30 instances with |V| <= 7, k <= 3 and deviation <= 0.1 / Delta.
std::vector<Instance> derivative_instances() {
  std::mt19937_64 rng(7001);
  std::vector<Instance> out;
  while (out.size() < 30) {
    const Graph g = random_graph(rng, 2, 7, 0.5);
    const int k = uniform_int(rng, 1, std::min(3, g.vertex_count()));
    const auto counts = random_composition(rng, g.vertex_count(), k, true);
    const EdgeWeights b = random_weights(rng, g, k, 0.1 / g.max_degree(), 0.2);
    out.push_back({g, counts, validate_multiplicities(g, counts), b});
  }
  return out;
}

// criterion 3
Check derivative_equivalence(const std::vector<Instance>& instances) {
  Check check;
  const auto start = Clock::now();
  double worst = 0.0;
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const Instance& in = instances[idx];
    const auto c = g_polynomial(in.graph, in.mult, in.weights);
    for (int j = 1; j <= 4; ++j) {
      const Complex h = normalized_derivative(in.graph, in.mult, in.weights, j);
      const Complex expected =
          j < static_cast<int>(c.size()) ? c[j] * std::tgamma(j + 1.0) / c[0] : Complex(0.0);
      if (expected == Complex(0.0)) {
        check.expect(h == Complex(0.0), fmt("instance %zu, j=%d: h=%g, expected 0", idx, j,
                                            std::abs(h)));
        continue;
      }
      const double err = rel_err(h, expected);
      worst = std::max(worst, err);
      check.expect(err <= 1e-9, fmt("instance %zu, j=%d: relative error %.3g", idx, j, err));
    }
  }
  const double elapsed = seconds_since(start);
  check.expect(elapsed < 60.0, fmt("took %.2f s", elapsed));
  if (check.ok) check.detail = fmt("30 instances, worst relative error %.3g, %.3f s", worst, elapsed);
  return check;
}

// ln Q on the branch continued from the real value at t = 0, with the real
// part and principal argument taken from the brute-force value.
Complex oracle_log(const Instance& in) {
  const Complex q = exact_partition(in.graph, in.mult, in.weights);
  const Complex path = continuous_log(g_polynomial(in.graph, in.mult, in.weights));
  const double two_pi = 2.0 * std::numbers::pi;
  const double turns = std::round((path.imag() - std::arg(q)) / two_pi);
  return {std::log(std::abs(q)), std::arg(q) + turns * two_pi};
}

// criterion 4
Check certified_error(const std::vector<Instance>& instances) {
  Check check;
  int evaluated = 0;
  double tightest = 0.0;
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const Instance& in = instances[idx];
    const Complex truth = oracle_log(in);
    const double beta = compute_beta(in.graph, in.weights);
    for (int n = 0; n <= 4; ++n) {
      const auto r = approximate_log_partition(in.graph, in.mult, in.weights, FixedOrder{n});
      const auto bound = error_bound(in.weights.support_edges().size(), beta, n);
      if (!bound || !r.error_bound) {
        check.expect(false, fmt("instance %zu: no bound (beta %.6g)", idx, beta));
        continue;
      }
      const double err = std::abs(r.log_value - truth);
      check.expect(err <= *bound, fmt("instance %zu, n=%d: error %.3g > bound %.3g", idx, n, err,
                                      *bound));
      if (*bound > 0) tightest = std::max(tightest, err / *bound);
      ++evaluated;
    }
  }

  const Graph edge = Graph::build(2, {{0, 1}});
  const MultiplicityVector m = validate_multiplicities(edge, {1, 1});
  const EdgeWeights b =
      uniform_weights(edge, 2, SymmetricMatrix::from_rows({{1.0, 1.05}, {1.05, 1.0}}));
  const auto r = approximate_log_partition(edge, m, b, FixedOrder{1});
  const double err = std::abs(r.log_value - std::log(2.1));
  check.expect(std::abs(err - 0.00121) < 5e-6, fmt("single edge error %.6g", err));
  check.expect(r.error_bound && err <= *r.error_bound && err <= 0.20495,
               fmt("single edge bound violated: %.6g", err));
  if (check.ok) {
    check.detail = fmt("%d (instance, n) pairs, max error/bound %.3g; single edge %.5f <= %.5f",
                       evaluated, tightest, err, *r.error_bound);
  }
  return check;
}

// criterion 5
Check zero_freeness() {
  Check check;
  const auto start = Clock::now();
  std::mt19937_64 rng(5150);
  double min_ratio = INFINITY;
  double min_slack = INFINITY;
  int margins = 0;
  for (int idx = 0; idx < 10; ++idx) {
    const Graph g = random_graph(rng, 2, 6, 0.5);
    const int k = uniform_int(rng, 2, std::min(3, g.vertex_count()));
    const auto counts = random_composition(rng, g.vertex_count(), k, true);
    const MultiplicityVector m = validate_multiplicities(g, counts);
    const double delta = constants().alpha / g.max_degree();
    const std::uint64_t seed = 1000 + idx;
    const ScanReport report = polydisc_scan(g, m, delta, 1000, seed);
    check.expect(report.zero_count == 0 && report.trials == 1000,
                 fmt("graph %d: %d zeros", idx, report.zero_count));
    min_ratio = std::min(min_ratio, report.min_abs_ratio);

    // root margins along the scanned arrays and along extreme random arrays
    for (int t = 0; t < 20; ++t) {
      const EdgeWeights b = t < 10 ? polydisc_sample(g, k, delta, seed, t)
                                   : random_weights(rng, g, k, delta, 0.999);
      const double beta = compute_beta(g, b);
      const double margin = root_margin(g, m, b);
      check.expect(margin >= beta - 1e-6,
                   fmt("graph %d, array %d: margin %.9g < beta %.9g", idx, t, margin, beta));
      if (std::isfinite(margin)) min_slack = std::min(min_slack, margin - beta);
      ++margins;
    }
  }
  const double elapsed = seconds_since(start);
  check.expect(elapsed < 300.0, fmt("took %.2f s", elapsed));
  if (check.ok) {
    check.detail = fmt("10 graphs x 1000 trials, min |Q|/multinomial %.4f; %d margins, "
                       "min margin - beta %.4f; %.2f s",
                       min_ratio, margins, min_slack, elapsed);
  }
  return check;
}

// Random admissible prefix of the given length.
RestrictedPrefix random_prefix(std::mt19937_64& rng, const Graph& g, const MultiplicityVector& m,
                               int length) {
  std::vector<int> vertices(g.vertex_count());
  std::iota(vertices.begin(), vertices.end(), 0);
  std::shuffle(vertices.begin(), vertices.end(), rng);
  std::vector<int> left(m.counts().begin(), m.counts().end());
  RestrictedPrefix p;
  for (int j = 0; j < length; ++j) {
    std::vector<int> open;
    for (int c = 0; c < m.k(); ++c) {
      if (left[c] > 0) open.push_back(c);
    }
    const int color = open[uniform_int(rng, 0, static_cast<int>(open.size()) - 1)];
    --left[color];
    p.vertices.push_back(vertices[j]);
    p.colors.push_back(color);
  }
  return p;
}

// criterion 6
Check recurrences() {
  Check check;
  std::mt19937_64 rng(3232);
  double worst = 0.0;
  for (int pair = 0; pair < 100; ++pair) {
    const Graph g = random_graph(rng, 2, 6, 0.5);
    const int k = uniform_int(rng, 1, 3);
    const auto counts = random_composition(rng, g.vertex_count(), k, false);
    const MultiplicityVector m = validate_multiplicities(g, counts);
    const EdgeWeights b = random_weights(rng, g, k, 0.5);
    const RestrictedPrefix p = random_prefix(rng, g, m, uniform_int(rng, 0, g.vertex_count() - 1));
    const Complex base = exact_restricted(g, m, b, p);
    check.expect(close_rel(base, naive_partition(g, counts, b, [&] {
                   std::vector<int> fixed(g.vertex_count(), -1);
                   for (std::size_t j = 0; j < p.vertices.size(); ++j) fixed[p.vertices[j]] = p.colors[j];
                   return fixed;
                 }()), 1e-12),
                 fmt("pair %d: restricted value disagrees with enumeration", pair));

    std::vector<bool> in_prefix(g.vertex_count(), false);
    for (int v : p.vertices) in_prefix[v] = true;
    std::vector<int> used(k, 0);
    for (int c : p.colors) ++used[c];

    // extend by a fixed free vertex, summing over admissible colors
    std::vector<int> free;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!in_prefix[v]) free.push_back(v);
    }
    const int v = free[uniform_int(rng, 0, static_cast<int>(free.size()) - 1)];
    Complex by_color{0.0};
    for (int c = 0; c < k; ++c) {
      RestrictedPrefix q = p;
      q.vertices.push_back(v);
      q.colors.push_back(c);
      if (is_admissible(g, m, q)) by_color += exact_restricted(g, m, b, q);
    }

    // extend by a fixed color, summing over free vertices
    std::vector<int> open;
    for (int c = 0; c < k; ++c) {
      if (used[c] < m[c]) open.push_back(c);
    }
    const int color = open[uniform_int(rng, 0, static_cast<int>(open.size()) - 1)];
    Complex by_vertex{0.0};
    for (int u : free) {
      RestrictedPrefix q = p;
      q.vertices.push_back(u);
      q.colors.push_back(color);
      by_vertex += exact_restricted(g, m, b, q);
    }
    by_vertex /= static_cast<double>(m[color] - used[color]);

    const double e1 = rel_err(by_color, base);
    const double e2 = rel_err(by_vertex, base);
    worst = std::max({worst, e1, e2});
    check.expect(e1 <= 1e-10, fmt("pair %d: vertex recurrence relative error %.3g", pair, e1));
    check.expect(e2 <= 1e-10, fmt("pair %d: color recurrence relative error %.3g", pair, e2));
  }
  if (check.ok) check.detail = fmt("100 pairs, worst relative error %.3g", worst);
  return check;
}

// criterion 7
Check composition_identity() {
  Check check;
  std::mt19937_64 rng(777);
  double worst = 0.0;
  int graphs = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= 3; ++k) {
      for (int rep = 0; rep < 3; ++rep) {
        const Graph g = random_graph(rng, n, n, 0.6);
        const EdgeWeights b = random_weights(rng, g, k, 1.0);
        Complex total{0.0};
        for (const auto& counts : compositions(n, k)) {
          total += exact_partition(g, validate_multiplicities(g, counts), b);
        }
        const double err = rel_err(total, exact_partition_unrestricted(g, b));
        worst = std::max(worst, err);
        check.expect(err <= 1e-10, fmt("|V|=%d, k=%d: relative error %.3g", n, k, err));
        ++graphs;
      }
    }
  }
  if (check.ok) check.detail = fmt("%d graphs, worst relative error %.3g", graphs, worst);
  return check;
}

// criterion 8
Check constants_consistency() {
  Check check;
  const auto& c = constants();
  const double r_theta = std::abs(c.theta - std::asin(c.epsilon_proof / std::cos(c.theta / 2)));
  const double r_tau = std::abs(c.tau - std::cos(c.theta / 2));
  const double r_alpha = std::abs(c.alpha - c.xi_cap * c.tau / (4 + c.xi_cap * c.tau));
  check.expect(r_theta <= 1e-8, fmt("theta residual %.3g", r_theta));
  check.expect(r_tau <= 1e-9, fmt("tau residual %.3g", r_tau));
  check.expect(r_alpha <= 1e-9, fmt("alpha residual %.3g", r_alpha));

  // smallest n with |E| / ((n+1) beta^n (beta-1)) <= eps, evaluated directly
  int reference = 0;
  while (3.0L / ((reference + 1) * std::pow(1.07L, reference) * 0.07L) > 0.1L) ++reference;
  const int selected = select_order(3, 1.07, 0.1);
  check.expect(reference == 37 && selected == 37,
               fmt("select_order %d, direct evaluation %d", selected, reference));
  if (check.ok) {
    check.detail = fmt("residuals theta %.2g, tau %.2g, alpha %.2g; select_order(3, 1.07, 0.1) = %d",
                       r_theta, r_tau, r_alpha, selected);
  }
  return check;
}

// criterion 9
Check determinism() {
  Check check;
  const std::string dir = PFGM_TEST_DATA;
  auto file = [&](const char* name) { return dir + "/" + name; };
  const std::vector<std::vector<std::string>> commands{
      {"exact", "--graph", file("triangle.json"), "--mult", "2,1", "--weights", file("b105.json")},
      {"approx", "--graph", file("triangle.json"), "--mult", "2,1", "--weights", file("b105.json"),
       "--eps", "0.1"},
      {"approx", "--graph", file("c5.json"), "--mult", "3,2", "--weights", file("b105.json"),
       "--order", "3"},
      {"approx", "--graph", file("triangle.json"), "--mult", "2,1", "--weights", file("b2.json"),
       "--eps", "0.1"},
      {"indep", "--graph", file("c5.json"), "--size", "2"},
      {"indep", "--graph", file("p3.json"), "--size", "2", "--gamma", "0.05", "--distinguish",
       "--edges", "1"},
      {"hafnian", "--matrix", file("c4.json")},
      {"hamperm", "--matrix", file("k4.json"), "--exact", "--cycles"},
      {"clique", "--host", file("k4_graph.json"), "--size", "3"},
      {"color", "--graph", file("triangle.json"), "--mult", "1,1,1"},
      {"zero-scan", "--graph", file("star3.json"), "--mult", "2,2", "--delta", "0.0358", "--trials",
       "300", "--seed", "42"},
      {"root-margin", "--graph", file("triangle.json"), "--mult", "2,1", "--weights",
       file("b105.json")},
  };
  for (const auto& args : commands) {
    std::string reference;
    for (unsigned threads : {1u, 1u, 2u, 4u}) {
      cli::Environment env;
      env.options.threads = threads;
      std::ostringstream out;
      std::ostringstream err;
      const int code = cli::run(args, out, err, env);
      const std::string text = fmt("%d|", code) + out.str() + "|" + err.str();
      if (reference.empty()) {
        reference = text;
      } else {
        check.expect(text == reference,
                     fmt("%s differs with %u threads", args.front().c_str(), threads));
      }
    }
  }
  if (check.ok) {
    check.detail = fmt("%zu commands, identical over 2 runs and 1/2/4 threads", commands.size());
  }
  return check;
}

}  // namespace

int main() {
  const std::vector<Instance> instances = derivative_instances();
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
      {"closed-form baseline", closed_form_baseline},
      {"adapter correctness", adapter_correctness},
      {"derivative oracle equivalence", [&] { return derivative_equivalence(instances); }},
      {"certified error", [&] { return certified_error(instances); }},
      {"zero-freeness spot check", zero_freeness},
      {"recurrence identities", recurrences},
      {"composition identity", composition_identity},
      {"constants self-consistency", constants_consistency},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    failures += !result.ok;
    std::cout << (result.ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << " ("
              << criteria[i].first << "): " << result.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : fmt("%d criteria failed", failures))
            << std::endl;
  return failures == 0 ? 0 : 1;
}
