#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "phom/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Vietoris-Rips persistent homology"};
  app.require_subcommand(1);

  phom::RunConfig run;
  std::string input_format = "csv-points";
  std::string metric = "euclidean";
  std::string max_eps = "inf";
  std::string plot = "none";
  bool keep_zero = false;
  bool twist = false;

  auto* compute = app.add_subcommand("compute", "compute persistence pairs from points or distances");
  compute->add_option("--input", run.input, "input file")->required();
  compute->add_option("--format", input_format, "csv-points | lower-distance")->capture_default_str();
  compute->add_option("--metric", metric, "euclidean | manhattan | chebyshev")->capture_default_str();
  compute->add_option("--max-dim", run.max_dim, "largest simplex dimension built")->capture_default_str();
  compute->add_option("--max-eps", max_eps, "largest scale, or inf")->capture_default_str();
  compute->add_option("--field", run.field, "prime field characteristic")->capture_default_str();
  compute->add_option("--output", run.output, "pairs file to write")->required();
  compute->add_flag("--keep-zero", keep_zero, "keep zero-persistence pairs");
  compute->add_option("--top", run.top_n, "number of most persistent features to print")->capture_default_str();
  compute->add_option("--plot", plot, "also write a plot: none | diagram | barcode")->capture_default_str();
  compute->add_option("--plot-out", run.plot_output, "plot path (default: <output>.svg)");
  compute->add_flag("--index-level", run.index_level, "report births/deaths as 1-based scale indices");
  compute->add_flag("--twist", twist, "reduce with the twist (clearing) strategy");

  phom::PlotConfig plot_cfg;
  std::string kind = "diagram";
  std::string cap;
  auto* plot_cmd = app.add_subcommand("plot", "render a pairs file as SVG");
  plot_cmd->add_option("--pairs", plot_cfg.pairs, "pairs file")->required();
  plot_cmd->add_option("--kind", kind, "diagram | barcode")->capture_default_str();
  plot_cmd->add_option("--out", plot_cfg.out, "SVG file to write")->required();
  plot_cmd->add_option("--infinity-cap", cap, "scale at which essential classes are drawn");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return phom::exit_invalid_config;
  }

  try {
    if (compute->parsed()) {
      run.format = phom::parse_input_format(input_format);
      run.metric = phom::parse_metric(metric);
      run.max_eps = phom::parse_scale(max_eps);
      run.plot = phom::parse_plot_kind(plot);
      run.drop_zero = !keep_zero;
      run.strategy = twist ? phom::ReductionStrategy::twist : phom::ReductionStrategy::standard;
      return phom::run_compute(run, std::cout, std::cerr);
    }
    plot_cfg.kind = phom::parse_plot_kind(kind);
    if (!cap.empty())
      plot_cfg.infinity_cap = phom::parse_scale(cap);
    return phom::run_plot(plot_cfg, std::cerr);
  } catch (const phom::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return phom::exit_invalid_config;
  }
}
