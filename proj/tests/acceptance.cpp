// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
// argv[1] is the path to the ksi CLI binary (for the determinism criterion).

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ksi/centrality.hpp"
#include "ksi/distribution.hpp"
#include "ksi/generators.hpp"
#include "ksi/graph.hpp"
#include "ksi/rng.hpp"
#include "ksi/sweep.hpp"
#include "test_helpers.hpp"

using namespace ksi;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what,
            const std::string& detail = "") {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion
            << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

void skip(int criterion, const std::string& what, const std::string& why) {
  std::cout << "[SKIP] criterion " << criterion << ": " << what << " (" << why
            << ")" << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool rel_close(double a, double b, double tol) {
  const double scale = std::max({std::abs(a), std::abs(b), 1.0});
  return std::abs(a - b) <= tol * scale;
}

// -------- criterion 1: fast path vs dense-matrix oracle --------
void criterion_oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    SplitMix64 rng(derive_seed(1000, trial));
    const VertexId n = 10 + static_cast<VertexId>(rng.next_below(51));
    const double p = 0.05 + 0.45 * rng.next_double();
    Graph g = erdos_renyi(n, p, rng.next_u64());
    KsiScores fast = ksi_all(g);
    KsiScores oracle = ksi_all_dense_oracle(g);
    for (VertexId i = 0; i < n; ++i) {
      if (fast.boundary_edges[i] != oracle.boundary_edges[i] ||
          !rel_close(fast.ksi[i], oracle.ksi[i], 1e-12) ||
          !rel_close(fast.ksi_norm[i], oracle.ksi_norm[i], 1e-12)) {
        ok = false;
        detail = "mismatch at trial " + std::to_string(trial) + " vertex " +
                 std::to_string(i);
        break;
      }
    }
  }
  const double elapsed = seconds_since(t0);
  if (ok && elapsed >= 10.0) {
    ok = false;
    detail = "too slow: " + std::to_string(elapsed) + "s";
  }
  report(1, ok, "fast ksi_all agrees with the dense-matrix oracle on 100 ER graphs",
         detail);
}

// -------- criterion 2: closed forms --------
void criterion_closed_forms() {
  bool ok = true;
  std::string detail;

  for (VertexId n = 5; n <= 50 && ok; ++n) {
    KsiScores s = ksi_all(testing::cycle(n));
    for (VertexId i = 0; i < n; ++i)
      if (s.ksi[i] != 2.0) {
        ok = false;
        detail = "C_" + std::to_string(n);
      }
  }
  for (VertexId n = 3; n <= 20 && ok; ++n) {
    KsiScores s = ksi_all(testing::complete(n));
    for (VertexId i = 0; i < n; ++i)
      if (s.ksi[i] != 1.0) {
        ok = false;
        detail = "K_" + std::to_string(n);
      }
  }
  for (VertexId n = 3; n <= 20 && ok; ++n) {
    KsiScores s = ksi_all(testing::star(n));
    if (s.ksi[0] != 1.0) {
      ok = false;
      detail = "star center, n=" + std::to_string(n);
    }
    for (VertexId leaf = 1; leaf < n; ++leaf)
      if (s.ksi[leaf] != static_cast<double>(n - 1)) {
        ok = false;
        detail = "star leaf, n=" + std::to_string(n);
      }
  }
  {
    KsiScores s = ksi_all(testing::path(3));
    if (!(s.ksi[0] == 2.0 && s.ksi[1] == 1.0 && s.ksi[2] == 2.0)) {
      ok = false;
      detail = "P3";
    }
  }
  // validate the closed forms once against the dense oracle
  for (const Graph& g : {testing::cycle(11), testing::complete(6),
                         testing::star(7), testing::path(3)}) {
    KsiScores fast = ksi_all(g);
    KsiScores oracle = ksi_all_dense_oracle(g);
    for (VertexId i = 0; i < g.num_vertices(); ++i)
      if (fast.boundary_edges[i] != oracle.boundary_edges[i]) {
        ok = false;
        detail = "oracle cross-check";
      }
  }
  report(2, ok, "closed forms on cycles, cliques, stars and P3 hold exactly",
         detail);
}

// -------- criterion 3: bounds on every generated test graph --------
void criterion_bounds() {
  bool ok = true;
  std::string detail;
  std::vector<GeneratorSpec> specs;
  for (std::uint64_t s = 0; s < 10; ++s) {
    specs.push_back({Model::ER, 120, 0.08, 1, 2, 0.0, s});
    specs.push_back({Model::BA, 120, 0.0, 3, 2, 0.0, s});
    specs.push_back({Model::WS, 120, 0.0, 1, 6, 0.15, s});
  }
  specs.push_back({Model::ER, 200, 0.005, 1, 2, 0.0, 5});  // isolated vertices

  for (const auto& spec : specs) {
    Graph g = generate(spec);
    const VertexId n = g.num_vertices();
    KsiScores scores = ksi_all(g);
    for (VertexId i = 0; i < n && ok; ++i) {
      const VertexId d = g.degree(i);
      if (d == 0) {
        if (scores.ksi[i] != 1.0 || scores.ksi_norm[i] != 1.0 / n) {
          ok = false;
          detail = "zero-degree convention";
        }
      } else if (scores.ksi[i] < 1.0 ||
                 scores.ksi_norm[i] < 1.0 / (n - d) - 1e-15 ||
                 scores.ksi_norm[i] > 1.0 + 1e-15) {
        ok = false;
        detail = std::string("bound violated on ") + model_name(spec.model);
      }
    }
  }
  report(3, ok, "ksi >= 1 and 1/(n-d) <= normalized ksi <= 1 on all generated graphs",
         detail);
}

// -------- criterion 4: exponential fit recovery --------
void criterion_fit_recovery() {
  bool ok = true;
  std::string detail;
  for (double rate : {0.2, 0.8, 2.0}) {
    Histogram h;
    const double width = 0.25;
    for (int b = 0; b <= 40; ++b) h.edges.push_back(b * width);
    // amplitude e^36 keeps integer rounding below 6e-8 in ln space,
    // i.e. effectively unrounded counts
    for (int b = 0; b < 40; ++b) {
      const double x = (b + 0.5) * width;
      h.counts.push_back(static_cast<std::int64_t>(
          std::llround(std::exp(36.0 - rate * x))));
    }
    LinearFit fit = fit_exponential(h);
    if (std::abs(fit.slope + rate) > 0.01 * rate || fit.rmse >= 1e-6) {
      ok = false;
      detail = "rate " + std::to_string(rate) + ": slope " +
               std::to_string(fit.slope) + ", rmse " + std::to_string(fit.rmse);
    }
  }
  report(4, ok, "exponential fit recovers slopes 0.2/0.8/2.0 within 1%, rmse < 1e-6",
         detail);
}

// -------- criterion 5: ER graphs are bell-shaped --------
void criterion_er_bell() {
  const auto t0 = std::chrono::steady_clock::now();
  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Graph g = erdos_renyi(2000, 0.01, derive_seed(500, seed));
    FitReport report_ = analyze(ksi_all(g).ksi, 50);
    if (report_.verdict == Verdict::bell_shaped) ++hits;
  }
  const double elapsed = seconds_since(t0);
  const bool ok = hits >= 4 && elapsed < 30.0;
  report(5, ok, "ER(2000, 0.01) classifies bell_shaped on >= 4 of 5 seeds",
         std::to_string(hits) + "/5 in " + std::to_string(elapsed) + "s");
}

// -------- criterion 6: BA regime split --------
void criterion_ba_split() {
  const auto t0 = std::chrono::steady_clock::now();
  int low_hits = 0, high_hits = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Graph low = barabasi_albert(2000, 3, derive_seed(600, seed));
    if (analyze(ksi_all(low).ksi, 50).verdict == Verdict::exponential_ksi)
      ++low_hits;
    Graph high = barabasi_albert(2000, 40, derive_seed(601, seed));
    if (analyze(ksi_all(high).ksi, 50).verdict == Verdict::bell_shaped)
      ++high_hits;
  }
  const double elapsed = seconds_since(t0);
  const bool ok = low_hits >= 4 && high_hits >= 4 && elapsed < 60.0;
  report(6, ok,
         "BA m=3 exponential_ksi and BA m=40 bell_shaped on >= 4 of 5 seeds",
         "m=3: " + std::to_string(low_hits) + "/5, m=40: " +
             std::to_string(high_hits) + "/5 in " + std::to_string(elapsed) +
             "s");
}

// -------- criterion 7: ring-lattice degeneracy --------
void criterion_ws_ring() {
  Graph g = watts_strogatz(2000, 8, 0.0, 1);
  KsiScores s = ksi_all(g);
  bool equal = true;
  for (VertexId i = 1; i < g.num_vertices(); ++i)
    if (s.ksi[i] != s.ksi[0]) equal = false;
  const Verdict v = analyze(s.ksi, 50).verdict;
  report(7, equal && v == Verdict::degenerate,
         "WS(2000, k=8, p=0) has a single ksi value and verdict degenerate",
         std::string("verdict ") + verdict_name(v));
}

// -------- criterion 8: WS sweep trend --------
void criterion_ws_trend() {
  const auto t0 = std::chrono::steady_clock::now();
  SweepSpec spec;
  spec.model = Model::WS;
  spec.n = 2000;
  spec.k_values = {10, 40, 160};
  spec.p_values = {0.02, 0.1, 0.5};
  spec.replicates = 3;
  spec.base_seed = 800;
  spec.bins = 50;
  SweepResult result = run_sweep(spec);
  const double elapsed = seconds_since(t0);

  const auto& small = result.cells.front();  // (k=10, p=0.02)
  const auto& large = result.cells.back();   // (k=160, p=0.5)
  const bool ok =
      small.mean_exp_rmse < large.mean_exp_rmse && elapsed < 180.0;
  report(8, ok,
         "mean exp_rmse at (k=10, p=0.02) < (k=160, p=0.5) in the WS grid",
         std::to_string(small.mean_exp_rmse) + " vs " +
             std::to_string(large.mean_exp_rmse) + " in " +
             std::to_string(elapsed) + "s");
}

// -------- criterion 9: Stack Overflow coefficient (optional, gated) --------
void criterion_stackoverflow() {
  const char* path = std::getenv("KSI_STACKOVERFLOW_EDGES");
  if (!path || !fs::exists(path)) {
    skip(9, "Stack Overflow average normalized ksi in [1e-4, 1e-3]",
         "set KSI_STACKOVERFLOW_EDGES to the local edge-list file to enable");
    return;
  }
  Graph g = load_edge_list(path);
  const double coeff = average_normalized_ksi(ksi_all(g));
  const bool ok = coeff >= 1e-4 && coeff <= 1e-3;
  report(9, ok, "Stack Overflow average normalized ksi in [1e-4, 1e-3]",
         "n=" + std::to_string(g.num_vertices()) + ", coefficient " +
             std::to_string(coeff));
}

// -------- criterion 10: end-to-end byte determinism --------
std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_determinism(const std::string& cli) {
  if (cli.empty() || !fs::exists(cli)) {
    skip(10, "pipeline byte determinism across runs and KSI_THREADS {1,4}",
         "CLI binary path not supplied");
    return;
  }
  const fs::path dir = "acceptance_tmp";
  fs::remove_all(dir);
  fs::create_directories(dir);

  auto pipeline = [&](const std::string& tag, const std::string& threads) {
    const std::string env = "KSI_THREADS=" + threads + " ";
    const std::string graph = (dir / ("g" + tag + ".txt")).string();
    const std::string prefix = (dir / ("c" + tag)).string();
    const std::string fit = (dir / ("f" + tag + ".json")).string();
    const std::string svg = (dir / ("p" + tag + ".svg")).string();
    int rc = 0;
    rc |= std::system((env + cli + " generate -m ws -n 800 -k 10 -p 0.05 "
                       "--seed 17 -o " + graph + " > /dev/null").c_str());
    rc |= std::system((env + cli + " compute " + graph + " --histogram -o " +
                       prefix + " > /dev/null").c_str());
    rc |= std::system((env + cli + " fit " + graph + " -o " + fit).c_str());
    rc |= std::system((env + cli + " plot " + prefix + ".hist.csv --fit " +
                       fit + " -o " + svg + " --log-y").c_str());
    return rc;
  };

  bool ok = pipeline("1", "1") == 0 && pipeline("2", "4") == 0 &&
            pipeline("3", "1") == 0;
  std::string detail;
  if (ok) {
    for (const char* stem :
         {"g%s.txt", "c%s.scores.csv", "c%s.summary.json", "c%s.hist.csv",
          "f%s.json", "p%s.svg"}) {
      auto name = [&](const char* tag) {
        char buf[64];
        std::snprintf(buf, sizeof buf, stem, tag);
        return dir / buf;
      };
      const std::string a = slurp(name("1"));
      if (a.empty() || a != slurp(name("2")) || a != slurp(name("3"))) {
        ok = false;
        detail = std::string("differs: ") + stem;
        break;
      }
    }
  } else {
    detail = "pipeline command failed";
  }
  report(10, ok, "generate->compute->fit->plot is byte-identical across runs and KSI_THREADS {1,4}",
         detail);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  criterion_oracle_equivalence();
  criterion_closed_forms();
  criterion_bounds();
  criterion_fit_recovery();
  criterion_er_bell();
  criterion_ba_split();
  criterion_ws_ring();
  criterion_ws_trend();
  criterion_stackoverflow();
  criterion_determinism(cli);
  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
