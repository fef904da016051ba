#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ksi/centrality.hpp"
#include "ksi/distribution.hpp"
#include "ksi/generators.hpp"
#include "ksi/graph.hpp"
#include "ksi/io.hpp"
#include "ksi/svg.hpp"
#include "ksi/sweep.hpp"

namespace {

ksi::Graph load_input(const std::string& path, bool lcc) {
  ksi::Graph g = ksi::load_edge_list(path);
  if (lcc) g = ksi::largest_connected_component(g);
  return g;
}

std::string scores_json(const ksi::Graph& g, const ksi::KsiScores& s) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (ksi::VertexId i = 0; i < s.n; ++i) {
    nlohmann::ordered_json row;
    row["vertex"] = i;
    row["label"] = g.label(i);
    row["degree"] = g.degree(i);
    row["boundary_edges"] = s.boundary_edges[i];
    row["ksi"] = s.ksi[i];
    row["ksi_norm"] = s.ksi_norm[i];
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

int cmd_compute(const std::string& input, const std::string& output,
                const std::string& format, bool lcc, int bins,
                bool with_histogram) {
  ksi::Graph g = load_input(input, lcc);
  ksi::KsiScores s = ksi::ksi_all(g, ksi::threads_from_env());

  const std::string scores_path =
      output + (format == "json" ? ".scores.json" : ".scores.csv");
  ksi::atomic_write_file(scores_path, format == "json"
                                          ? scores_json(g, s)
                                          : ksi::scores_csv(g, s));
  ksi::atomic_write_file(output + ".summary.json", ksi::summary_json(g, s));
  if (with_histogram) {
    ksi::Histogram h = ksi::make_histogram(s.ksi, bins);
    ksi::atomic_write_file(output + ".hist.csv", ksi::histogram_csv(h));
  }
  std::cout << "n=" << g.num_vertices() << " m=" << g.num_edges()
            << " avg_normalized_ksi="
            << ksi::format_double(ksi::average_normalized_ksi(s)) << "\n";
  return 0;
}

int cmd_coefficient(const std::string& input, bool lcc) {
  ksi::Graph g = load_input(input, lcc);
  ksi::KsiScores s = ksi::ksi_all(g, ksi::threads_from_env());
  std::cout << ksi::format_double(ksi::average_normalized_ksi(s)) << "\n";
  return 0;
}

int cmd_generate(const ksi::GeneratorSpec& spec, const std::string& output) {
  ksi::Graph g = ksi::generate(spec);
  std::ostringstream out;
  ksi::write_edge_list(g, out);
  ksi::atomic_write_file(output, out.str());
  std::cout << "n=" << g.num_vertices() << " m=" << g.num_edges() << "\n";
  return 0;
}

int cmd_fit(const std::string& input, bool from_csv, bool lcc, int bins,
            int skip_bins, const std::string& output,
            const std::string& hist_output) {
  std::vector<double> values;
  if (from_csv) {
    values = ksi::read_value_column(input);
  } else {
    ksi::Graph g = load_input(input, lcc);
    values = ksi::ksi_all(g, ksi::threads_from_env()).ksi;
  }
  ksi::FitReport report = ksi::analyze(values, bins, skip_bins);
  const std::string json = ksi::fit_report_json(report);
  if (output.empty())
    std::cout << json;
  else
    ksi::atomic_write_file(output, json);
  if (!hist_output.empty()) {
    ksi::Histogram h = ksi::make_histogram(values, bins);
    ksi::atomic_write_file(hist_output, ksi::histogram_csv(h));
  }
  return 0;
}

int cmd_sweep(const ksi::SweepSpec& spec, const std::string& output_dir) {
  ksi::SweepResult result = ksi::run_sweep(spec);
  ksi::atomic_write_file(output_dir + "/sweep.csv", ksi::sweep_csv(result));
  if (spec.model == ksi::Model::WS)
    ksi::atomic_write_file(output_dir + "/heatmap.csv",
                           ksi::heatmap_csv(result));
  std::cout << "cells=" << result.cells.size() << "\n";
  return 0;
}

int cmd_plot(const std::string& input, const std::string& fit_path,
             const std::string& output, const ksi::PlotSpec& spec) {
  ksi::Histogram h = ksi::read_histogram_csv(input);
  std::optional<ksi::LinearFit> fit;
  if (!fit_path.empty()) {
    std::ifstream in(fit_path);
    if (!in) throw std::runtime_error("cannot open fit file: " + fit_path);
    nlohmann::json j = nlohmann::json::parse(in);
    ksi::LinearFit f;
    f.slope = j.at("exp_slope").get<double>();
    f.intercept = j.at("exp_intercept").get<double>();
    fit = f;
  }
  ksi::atomic_write_file(output, ksi::render_histogram_svg(h, spec, fit));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ksi-centrality analytics for large undirected graphs"};
  app.require_subcommand(1);

  // compute
  std::string in_path, out_prefix, format = "csv";
  bool lcc = false, with_hist = false;
  int bins = 50;
  auto* compute = app.add_subcommand(
      "compute", "Per-vertex ksi scores for an edge-list graph");
  compute->add_option("input", in_path, "edge-list file (.gz ok)")->required();
  compute->add_option("-o,--output", out_prefix, "output path prefix")
      ->required();
  compute->add_option("--format", format, "scores format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  compute->add_flag("--lcc", lcc, "restrict to largest connected component");
  compute->add_flag("--histogram", with_hist, "also write a ksi histogram CSV");
  compute->add_option("--bins", bins, "histogram bin count")
      ->check(CLI::PositiveNumber);

  // coefficient
  std::string coef_in;
  bool coef_lcc = false;
  auto* coefficient = app.add_subcommand(
      "coefficient", "Average normalized ksi coefficient of a graph");
  coefficient->add_option("input", coef_in, "edge-list file")->required();
  coefficient->add_flag("--lcc", coef_lcc);

  // generate
  ksi::GeneratorSpec gspec;
  std::string model_str, gen_out;
  bool seed_set = false;
  std::uint64_t seed_val = 0;
  auto* generate = app.add_subcommand("generate", "Seeded ER/BA/WS graphs");
  generate->add_option("-m,--model", model_str, "er, ba or ws")->required();
  generate->add_option("-n", gspec.n, "vertex count")->required();
  generate->add_option("-p", gspec.er_p, "edge probability (er) / rewiring (ws)");
  generate->add_option("--ba-m", gspec.ba_m, "attachments per vertex (ba)");
  generate->add_option("-k", gspec.ws_k, "ring-lattice degree (ws)");
  generate
      ->add_option_function<std::uint64_t>(
          "--seed",
          [&](std::uint64_t v) {
            seed_val = v;
            seed_set = true;
          },
          "RNG seed (required; no hidden entropy)");
  generate->add_option("-o,--output", gen_out, "edge-list output")->required();

  // fit
  std::string fit_in, fit_out, fit_hist_out;
  bool fit_from_csv = false, fit_lcc = false;
  int fit_bins = 50, skip_bins = 0;
  auto* fit = app.add_subcommand(
      "fit", "Histogram + exponential/Gaussian log-space fits + verdict");
  fit->add_option("input", fit_in, "edge-list file or ksi value CSV")
      ->required();
  fit->add_flag("--ksi-csv", fit_from_csv,
                "input holds ksi values, not an edge list");
  fit->add_flag("--lcc", fit_lcc);
  fit->add_option("--bins", fit_bins)->check(CLI::PositiveNumber);
  fit->add_option("--skip-bins", skip_bins,
                  "exclude this many leading bins from the fits")
      ->check(CLI::NonNegativeNumber);
  fit->add_option("-o,--output", fit_out, "fit report JSON (default stdout)");
  fit->add_option("--histogram-output", fit_hist_out, "histogram CSV path");

  // sweep
  ksi::SweepSpec sspec;
  std::string sweep_model, sweep_dir = ".";
  bool sweep_seed_set = false;
  auto* sweep = app.add_subcommand("sweep", "BA m-sweep or WS (k, p) grid");
  sweep->add_option("-m,--model", sweep_model, "ba or ws")->required();
  sweep->add_option("-n", sspec.n, "vertex count");
  sweep->add_option("--m-values", sspec.m_values, "BA m axis");
  sweep->add_option("--k-values", sspec.k_values, "WS k axis");
  sweep->add_option("--p-values", sspec.p_values, "WS p axis");
  sweep->add_option("--replicates", sspec.replicates)
      ->check(CLI::PositiveNumber);
  sweep->add_option("--bins", sspec.bins)->check(CLI::PositiveNumber);
  sweep->add_option_function<std::uint64_t>(
      "--seed",
      [&](std::uint64_t v) {
        sspec.base_seed = v;
        sweep_seed_set = true;
      },
      "base RNG seed (required)");
  sweep->add_option("--output-dir", sweep_dir);

  // plot
  std::string plot_in, plot_fit, plot_out;
  ksi::PlotSpec pspec;
  auto* plot = app.add_subcommand("plot", "Standalone SVG histogram plot");
  plot->add_option("input", plot_in, "histogram CSV")->required();
  plot->add_option("--fit", plot_fit, "fit report JSON overlay");
  plot->add_option("-o,--output", plot_out, "SVG path")->required();
  plot->add_flag("--log-y", pspec.log_y);
  plot->add_option("--title", pspec.title);
  plot->add_option("--x-label", pspec.x_label);
  plot->add_option("--y-label", pspec.y_label);
  plot->add_option("--width", pspec.width)->check(CLI::PositiveNumber);
  plot->add_option("--height", pspec.height)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed())
      return cmd_compute(in_path, out_prefix, format, lcc, bins, with_hist);
    if (coefficient->parsed()) return cmd_coefficient(coef_in, coef_lcc);
    if (generate->parsed()) {
      if (!seed_set) {
        std::cerr << "generate: --seed is required\n";
        return 2;
      }
      gspec.model = ksi::model_from_name(model_str);
      gspec.seed = seed_val;
      if (gspec.model == ksi::Model::WS) gspec.ws_p = gspec.er_p;
      return cmd_generate(gspec, gen_out);
    }
    if (fit->parsed())
      return cmd_fit(fit_in, fit_from_csv, fit_lcc, fit_bins, skip_bins,
                     fit_out, fit_hist_out);
    if (sweep->parsed()) {
      if (!sweep_seed_set) {
        std::cerr << "sweep: --seed is required\n";
        return 2;
      }
      sspec.model = ksi::model_from_name(sweep_model);
      return cmd_sweep(sspec, sweep_dir);
    }
    if (plot->parsed()) return cmd_plot(plot_in, plot_fit, plot_out, pspec);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
