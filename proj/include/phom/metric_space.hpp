#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phom/errors.hpp"

namespace phom {

/// A finite set of points in R^n, stored row-major. Point order is the
/// index order used everywhere downstream.
class PointCloud {
public:
  PointCloud() = default;

  PointCloud(std::size_t dimension, std::vector<double> coordinates)
      : dimension_(dimension), coords_(std::move(coordinates)) {
    if (dimension_ == 0 && !coords_.empty())
      throw InvalidArgument("zero-dimensional points cannot carry coordinates");
    if (dimension_ != 0 && coords_.size() % dimension_ != 0)
      throw InvalidArgument("coordinate count is not a multiple of the dimension");
    for (double c : coords_)
      if (!std::isfinite(c))
        throw InvalidArgument("point coordinates must be finite");
  }

  static PointCloud from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty())
      return {};
    const std::size_t n = rows.front().size();
    std::vector<double> flat;
    flat.reserve(rows.size() * n);
    for (const auto& r : rows) {
      if (r.size() != n)
        throw InvalidArgument("all points must share one dimension");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return PointCloud(n, std::move(flat));
  }

  std::size_t size() const noexcept { return dimension_ ? coords_.size() / dimension_ : 0; }
  std::size_t dimension() const noexcept { return dimension_; }
  bool empty() const noexcept { return size() == 0; }

  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * dimension_, dimension_};
  }

private:
  std::size_t dimension_ = 0;
  std::vector<double> coords_;
};

/// Symmetric, zero-diagonal, nonnegative matrix kept as its strict lower
/// triangle. The triangle inequality is not checked.
class DistanceMatrix {
public:
  DistanceMatrix() = default;

  /// `lower` holds d(1,0), d(2,0), d(2,1), d(3,0), ... in row order.
  DistanceMatrix(std::size_t size, std::vector<double> lower)
      : size_(size), lower_(std::move(lower)) {
    if (lower_.size() != size_ * (size_ ? size_ - 1 : 0) / 2)
      throw InvalidArgument("lower-triangular entry count does not match matrix size");
    for (double d : lower_)
      if (!std::isfinite(d) || d < 0.0)
        throw InvalidArgument("distances must be finite and nonnegative");
  }

  std::size_t size() const noexcept { return size_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    if (i == j)
      return 0.0;
    if (i < j)
      std::swap(i, j);
    return lower_[i * (i - 1) / 2 + j];
  }

  std::span<const double> lower_triangle() const noexcept { return lower_; }

private:
  std::size_t size_ = 0;
  std::vector<double> lower_;
};

enum class Metric { euclidean, manhattan, chebyshev };

enum class InputFormat { csv_points, lower_distance };

inline Metric parse_metric(std::string_view name) {
  if (name == "euclidean") return Metric::euclidean;
  if (name == "manhattan") return Metric::manhattan;
  if (name == "chebyshev") return Metric::chebyshev;
  throw InvalidArgument("unknown metric '" + std::string(name) + "'");
}

inline InputFormat parse_input_format(std::string_view name) {
  if (name == "csv-points") return InputFormat::csv_points;
  if (name == "lower-distance") return InputFormat::lower_distance;
  throw InvalidArgument("unknown input format '" + std::string(name) + "'");
}

inline double distance(std::span<const double> a, std::span<const double> b, Metric metric) {
  double acc = 0.0;
  switch (metric) {
  case Metric::euclidean:
    for (std::size_t k = 0; k < a.size(); ++k)
      acc += (a[k] - b[k]) * (a[k] - b[k]);
    return std::sqrt(acc);
  case Metric::manhattan:
    for (std::size_t k = 0; k < a.size(); ++k)
      acc += std::fabs(a[k] - b[k]);
    return acc;
  case Metric::chebyshev:
    for (std::size_t k = 0; k < a.size(); ++k)
      acc = std::max(acc, std::fabs(a[k] - b[k]));
    return acc;
  }
  return acc;
}

inline DistanceMatrix pairwise_distances(const PointCloud& cloud, Metric metric = Metric::euclidean) {
  const std::size_t m = cloud.size();
  std::vector<double> lower;
  lower.reserve(m * (m ? m - 1 : 0) / 2);
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j)
      lower.push_back(distance(cloud[i], cloud[j], metric));
  return DistanceMatrix(m, std::move(lower));
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline double parse_real(std::string_view token, std::size_t line) {
  token = trim(token);
  if (!token.empty() && token.front() == '+')
    token.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, "not a number: '" + std::string(token) + "'");
  if (!std::isfinite(v))
    throw ParseError(line, "non-finite value: '" + std::string(token) + "'");
  return v;
}

/// Splits on commas and/or runs of whitespace.
inline std::vector<double> parse_row(std::string_view row, std::size_t line, bool allow_whitespace) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= row.size()) {
    std::size_t next = allow_whitespace ? row.find_first_of(", \t", pos) : row.find(',', pos);
    if (next == std::string_view::npos)
      next = row.size();
    const auto token = trim(row.substr(pos, next - pos));
    const bool is_comma = next < row.size() && row[next] == ',';
    if (!token.empty())
      out.push_back(parse_real(token, line));
    else if (is_comma || !allow_whitespace)
      throw ParseError(line, "empty field");
    pos = next + 1;
  }
  return out;
}

} // namespace detail

/// One point per line, comma-separated coordinates. Lines starting with '#'
/// and blank lines are skipped.
inline PointCloud read_csv_points(std::istream& in) {
  std::vector<double> flat;
  std::size_t dim = 0;
  std::size_t count = 0;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto row = detail::trim(line);
    if (row.empty() || row.front() == '#')
      continue;
    auto values = detail::parse_row(row, lineno, false);
    if (count == 0)
      dim = values.size();
    else if (values.size() != dim)
      throw ParseError(lineno, "expected " + std::to_string(dim) + " coordinates, found " +
                                   std::to_string(values.size()));
    flat.insert(flat.end(), values.begin(), values.end());
    ++count;
  }
  return PointCloud(dim, std::move(flat));
}

/// Row k (k >= 1) holds d(k,0) ... d(k,k-1), separated by commas or
/// whitespace. The entry-less row of point 0 may be given as a leading blank
/// line; it is otherwise implied. '#' lines are comments.
inline DistanceMatrix read_lower_distance(std::istream& in) {
  std::vector<double> lower;
  std::size_t rows = 0; // rows seen, counting the implicit point-0 row
  std::string line;
  bool started = false;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto row = detail::trim(line);
    if (!row.empty() && row.front() == '#')
      continue;
    if (row.empty()) {
      if (!started) {
        started = true;
        rows = 1;
      }
      continue;
    }
    if (!started) {
      started = true;
      rows = 1;
    }
    auto values = detail::parse_row(row, lineno, true);
    if (values.size() != rows)
      throw ParseError(lineno, "expected " + std::to_string(rows) + " distances, found " +
                                   std::to_string(values.size()));
    for (double v : values)
      if (v < 0.0)
        throw ParseError(lineno, "negative distance");
    lower.insert(lower.end(), values.begin(), values.end());
    ++rows;
  }
  return DistanceMatrix(rows, std::move(lower));
}

inline PointCloud load_point_cloud(std::istream& in, InputFormat format = InputFormat::csv_points) {
  if (format != InputFormat::csv_points)
    throw InvalidArgument("load_point_cloud only decodes csv-points input");
  return read_csv_points(in);
}

} // namespace phom
