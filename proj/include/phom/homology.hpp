#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phom/complex.hpp"
#include "phom/errors.hpp"
#include "phom/field.hpp"

namespace phom {

using Index = std::size_t;
inline constexpr Index no_index = std::numeric_limits<Index>::max();

struct Entry {
  Index row;
  Coefficient coeff;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse column, entries sorted by ascending row; the lowest nonzero is back().
using Column = std::vector<Entry>;

/// Boundary operator of a filtration, one column per simplex, rows and
/// columns both indexed by filtration position.
struct BoundaryMatrix {
  FieldSpec field;
  std::vector<Column> columns;
  std::vector<int> dims;

  std::size_t size() const noexcept { return columns.size(); }
};

/// Column j holds the faces of simplex j; face i (omitting vertex i)
/// carries (-1)^i mod p. Throws ConsistencyError when a face is absent or
/// not earlier in the filtration.
inline BoundaryMatrix build_boundary_matrix(const Filtration& f, FieldSpec field = {}) {
  BoundaryMatrix m;
  m.field = field;
  m.columns.resize(f.size());
  m.dims.resize(f.size());
  for (Index j = 0; j < f.size(); ++j) {
    m.dims[j] = f[j].dimension();
    const auto faces = face_enumeration(f[j]);
    auto& col = m.columns[j];
    col.reserve(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const auto row = f.index_of(faces[i].vertices);
      if (!row || *row >= j)
        throw ConsistencyError("face of simplex " + std::to_string(j) +
                               " is missing from the filtration or appears after it");
      col.push_back({*row, field.sign(i)});
    }
    std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
  }
  return m;
}

namespace detail {

/// target += factor * source, merging by row and dropping zeros.
inline void add_scaled(Column& target, const Column& source, Coefficient factor, FieldSpec field) {
  Column out;
  out.reserve(target.size() + source.size());
  auto a = target.begin();
  auto b = source.begin();
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->row < b->row)) {
      out.push_back(*a++);
    } else if (a == target.end() || b->row < a->row) {
      out.push_back({b->row, field.mul(factor, b->coeff)});
      ++b;
    } else {
      const Coefficient c = field.add(a->coeff, field.mul(factor, b->coeff));
      if (c)
        out.push_back({a->row, c});
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

} // namespace detail

struct ReductionResult {
  /// (birth, death) filtration positions, sorted by death.
  std::vector<std::pair<Index, Index>> pairs;
  /// Positions that create a class never killed, ascending.
  std::vector<Index> essential;
  /// low[j]: lowest row of reduced column j, or no_index if it reduced to zero.
  std::vector<Index> low;
};

enum class ReductionStrategy {
  standard, ///< left to right over all columns
  twist,    ///< by decreasing dimension, clearing columns known to be births
};

/// Column reduction to distinct-lowest-entry form.
inline ReductionResult reduce(const BoundaryMatrix& matrix,
                              ReductionStrategy strategy = ReductionStrategy::standard) {
  const Index n = matrix.size();
  const FieldSpec field = matrix.field;
  std::vector<Column> reduced(n);
  std::vector<Index> pivot_col(n, no_index); // row -> column whose low it is
  std::vector<bool> cleared(n, false);

  auto reduce_column = [&](Index j) {
    Column col = matrix.columns[j];
    while (!col.empty()) {
      const Index other = pivot_col[col.back().row];
      if (other == no_index)
        break;
      const Coefficient pivot = reduced[other].back().coeff;
      const Coefficient factor = field.neg(field.mul(col.back().coeff, field.inv(pivot)));
      detail::add_scaled(col, reduced[other], factor, field);
    }
    if (!col.empty()) {
      pivot_col[col.back().row] = j;
      if (strategy == ReductionStrategy::twist)
        cleared[col.back().row] = true;
    }
    reduced[j] = std::move(col);
  };

  if (strategy == ReductionStrategy::standard) {
    for (Index j = 0; j < n; ++j)
      reduce_column(j);
  } else {
    int top = -1;
    for (int d : matrix.dims)
      top = std::max(top, d);
    for (int d = top; d >= 1; --d)
      for (Index j = 0; j < n; ++j)
        if (matrix.dims[j] == d && !cleared[j])
          reduce_column(j);
  }

  ReductionResult result;
  result.low.assign(n, no_index);
  for (Index j = 0; j < n; ++j) {
    if (!reduced[j].empty()) {
      result.low[j] = reduced[j].back().row;
      result.pairs.emplace_back(reduced[j].back().row, j);
    }
  }
  for (Index i = 0; i < n; ++i)
    if (reduced[i].empty() && pivot_col[i] == no_index)
      result.essential.push_back(i);
  return result;
}

namespace detail {

inline void check_homology_dimension(const Filtration& f, int k) {
  if (k < 0)
    throw InvalidArgument("homology dimension must be nonnegative");
  if (const auto top = f.max_homology_dimension(); top && k > *top)
    throw InvalidArgument("homology in dimension " + std::to_string(k) +
                          " needs simplices of dimension " + std::to_string(k + 1) +
                          "; raise max_dim to at least " + std::to_string(k + 1));
}

} // namespace detail

/// β_0 .. β_up_to_dim of the complex formed by the first `prefix` simplices,
/// read off a reduction of the whole filtration. Reducing left to right makes
/// the first `prefix` columns a reduction of the prefix complex.
inline std::vector<long> betti_numbers(const Filtration& f, const ReductionResult& r, Index prefix,
                                       int up_to_dim) {
  detail::check_homology_dimension(f, up_to_dim);
  if (prefix > f.size())
    throw InvalidArgument("prefix exceeds filtration length");
  std::vector<long> betti(static_cast<std::size_t>(up_to_dim) + 1, 0);
  auto in_range = [&](int d) { return d >= 0 && d <= up_to_dim; };
  for (Index i = 0; i < prefix; ++i)
    if (const int d = f[i].dimension(); in_range(d))
      ++betti[d];
  for (const auto& [birth, death] : r.pairs) {
    if (death >= prefix)
      continue;
    const int d = f[death].dimension();
    if (in_range(d))
      --betti[d]; // rank of the boundary map out of dimension d
    if (in_range(d - 1))
      --betti[d - 1]; // rank of the boundary map into dimension d - 1
  }
  return betti;
}

inline std::vector<long> betti_numbers(const Filtration& f, Index prefix, FieldSpec field,
                                       int up_to_dim) {
  detail::check_homology_dimension(f, up_to_dim);
  return betti_numbers(f, reduce(build_boundary_matrix(f, field)), prefix, up_to_dim);
}

/// Rank of H_k^{i,p}: classes of K_i still alive in K_{i+p}, with scale
/// indices into f.scales(); i + p clamps to the last scale. Counts pairs
/// born at scale <= ε_i that die after ε_{i+p}, plus essentials born by ε_i.
inline long persistent_betti(const Filtration& f, const ReductionResult& r, std::size_t i,
                             std::size_t p, int k) {
  detail::check_homology_dimension(f, k);
  const auto& scales = f.scales();
  if (i >= scales.size())
    throw InvalidArgument("scale index out of range");
  const double born_by = scales[i];
  const double alive_after = scales[std::min(i + p, scales.size() - 1)];
  long count = 0;
  for (const auto& [birth, death] : r.pairs)
    if (f[birth].dimension() == k && f[birth].value <= born_by && f[death].value > alive_after)
      ++count;
  for (Index e : r.essential)
    if (f[e].dimension() == k && f[e].value <= born_by)
      ++count;
  return count;
}

inline long persistent_betti(const Filtration& f, std::size_t i, std::size_t p, FieldSpec field, int k) {
  detail::check_homology_dimension(f, k);
  return persistent_betti(f, reduce(build_boundary_matrix(f, field)), i, p, k);
}

} // namespace phom
