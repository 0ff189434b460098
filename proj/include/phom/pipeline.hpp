#pragma once

// End-to-end runs behind the command-line tool: input file -> filtration ->
// reduction -> pairs file (+ optional SVG), and pairs file -> SVG.

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "phom/complex.hpp"
#include "phom/errors.hpp"
#include "phom/field.hpp"
#include "phom/homology.hpp"
#include "phom/metric_space.hpp"
#include "phom/pairs_file.hpp"
#include "phom/persistence.hpp"
#include "phom/svg.hpp"

namespace phom {

enum ExitCode : int {
  exit_ok = 0,
  exit_io_error = 2,
  exit_parse_error = 3,
  exit_invalid_config = 4,
};

enum class PlotKind { none, diagram, barcode };

inline PlotKind parse_plot_kind(std::string_view name) {
  if (name == "none") return PlotKind::none;
  if (name == "diagram") return PlotKind::diagram;
  if (name == "barcode") return PlotKind::barcode;
  throw InvalidArgument("unknown plot kind '" + std::string(name) + "'");
}

struct RunConfig {
  std::filesystem::path input;
  InputFormat format = InputFormat::csv_points;
  Metric metric = Metric::euclidean;
  int max_dim = 2;
  double max_eps = unbounded;
  std::uint32_t field = 2;
  std::filesystem::path output;
  PlotKind plot = PlotKind::none;
  /// Where the plot goes; defaults to the output path with ".svg" appended.
  std::filesystem::path plot_output;
  bool drop_zero = true;
  std::size_t top_n = 5;
  bool index_level = false;
  ReductionStrategy strategy = ReductionStrategy::standard;
};

/// Accepts a decimal or "inf"/"infinity" (case-insensitive).
inline double parse_scale(std::string_view text) {
  std::string lower;
  for (char c : text)
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "inf" || lower == "infinity" || lower == "+inf")
    return unbounded;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || std::isnan(v))
    throw InvalidArgument("not a scale value: '" + std::string(text) + "'");
  return v;
}

inline void validate(const RunConfig& c) {
  if (c.max_dim < 0)
    throw InvalidArgument("--max-dim must be nonnegative");
  if (!(c.max_eps > 0.0))
    throw InvalidArgument("--max-eps must be positive or inf");
  FieldSpec{c.field};
}

/// Everything a compute run produces, for callers that want it in memory.
struct ComputeResult {
  Filtration filtration;
  ReductionResult reduction;
  std::vector<PersistencePair> exported;
  std::vector<long> betti;
};

inline DistanceMatrix load_distances(std::istream& in, const RunConfig& c) {
  if (c.format == InputFormat::lower_distance)
    return read_lower_distance(in);
  return pairwise_distances(read_csv_points(in), c.metric);
}

/// The in-memory part of run_compute. Throws ParseError / InvalidArgument.
inline ComputeResult compute(std::istream& in, const RunConfig& c) {
  validate(c);
  ComputeResult r;
  const auto dm = load_distances(in, c);
  r.filtration = build_vr_filtration(dm, c.max_dim, c.max_eps);
  r.reduction = reduce(build_boundary_matrix(r.filtration, FieldSpec{c.field}), c.strategy);
  auto pairs = restrict_to_valid_dimensions(pairs_to_scales(r.reduction, r.filtration), r.filtration);
  if (c.drop_zero)
    pairs = drop_zero_persistence(std::move(pairs));
  if (c.index_level)
    pairs = to_scale_indices(std::move(pairs), r.filtration);
  r.exported = std::move(pairs);
  if (c.max_dim >= 1)
    r.betti = betti_numbers(r.filtration, r.reduction, r.filtration.size(), c.max_dim - 1);
  return r;
}

namespace detail {

inline void report(std::ostream& out, const ComputeResult& r, const RunConfig& c) {
  std::size_t points = 0;
  for (const auto& s : r.filtration)
    points += s.dimension() == 0;
  out << "points: " << points << '\n' << "simplices: " << r.filtration.size() << '\n';
  out << "betti at max-eps " << (std::isinf(c.max_eps) ? std::string("inf") : format_decimal(c.max_eps)) << ':';
  if (r.betti.empty())
    out << " (none; homology needs --max-dim >= 1)";
  for (std::size_t k = 0; k < r.betti.size(); ++k)
    out << " b" << k << '=' << r.betti[k];
  out << '\n';
  const auto top = top_features(r.exported, c.top_n);
  out << "top " << top.size() << " features:\n";
  for (const auto& p : top)
    out << "  dim " << p.dim << "  birth " << format_decimal(p.birth) << "  death "
        << (p.essential() ? std::string("inf") : format_decimal(p.death)) << "  persistence "
        << (p.essential() ? std::string("inf") : format_decimal(p.persistence())) << '\n';
}

inline bool write_plot(const std::filesystem::path& path, PlotKind kind, const std::vector<PersistencePair>& pairs,
                       std::optional<double> cap) {
  std::ofstream os(path, std::ios::binary);
  if (!os)
    return false;
  if (kind == PlotKind::barcode)
    svg::render_barcode(os, Barcode(pairs));
  else
    svg::render_diagram(os, build_diagram(pairs, true, cap));
  return static_cast<bool>(os);
}

} // namespace detail

/// Runs the compute verb. Writes the pairs file (and plot, if requested),
/// prints a summary to `out`, diagnostics to `err`, and returns an ExitCode.
inline int run_compute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    validate(c);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid_config;
  }
  std::ifstream in(c.input, std::ios::binary);
  if (!in || std::filesystem::is_directory(c.input)) {
    err << "error: cannot read input '" << c.input.string() << "'\n";
    return exit_io_error;
  }
  ComputeResult r;
  try {
    r = compute(in, c);
  } catch (const ParseError& e) {
    err << "error: " << c.input.string() << ": " << e.what() << '\n';
    return exit_parse_error;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid_config;
  }

  {
    std::ofstream os(c.output, std::ios::binary);
    if (!os) {
      err << "error: cannot write output '" << c.output.string() << "'\n";
      return exit_io_error;
    }
    write_pairs(os, r.exported);
    if (!os) {
      err << "error: failed writing '" << c.output.string() << "'\n";
      return exit_io_error;
    }
  }
  if (c.plot != PlotKind::none) {
    const auto path = c.plot_output.empty() ? std::filesystem::path(c.output.string() + ".svg") : c.plot_output;
    if (!detail::write_plot(path, c.plot, r.exported, std::nullopt)) {
      err << "error: cannot write plot '" << path.string() << "'\n";
      return exit_io_error;
    }
  }
  detail::report(out, r, c);
  return exit_ok;
}

struct PlotConfig {
  std::filesystem::path pairs;
  PlotKind kind = PlotKind::diagram;
  std::filesystem::path out;
  std::optional<double> infinity_cap;
};

/// Runs the plot verb on an existing pairs file.
inline int run_plot(const PlotConfig& c, std::ostream& err) {
  if (c.kind == PlotKind::none) {
    err << "error: --kind must be diagram or barcode\n";
    return exit_invalid_config;
  }
  std::ifstream in(c.pairs, std::ios::binary);
  if (!in || std::filesystem::is_directory(c.pairs)) {
    err << "error: cannot read pairs file '" << c.pairs.string() << "'\n";
    return exit_io_error;
  }
  std::vector<PersistencePair> pairs;
  try {
    pairs = read_pairs(in);
  } catch (const ParseError& e) {
    err << "error: " << c.pairs.string() << ": " << e.what() << '\n';
    return exit_parse_error;
  }
  try {
    if (c.infinity_cap)
      build_diagram(pairs, true, c.infinity_cap);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid_config;
  }
  if (!detail::write_plot(c.out, c.kind, pairs, c.infinity_cap)) {
    err << "error: cannot write plot '" << c.out.string() << "'\n";
    return exit_io_error;
  }
  return exit_ok;
}

} // namespace phom
