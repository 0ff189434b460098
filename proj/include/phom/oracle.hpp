#pragma once

// Reference computations by dense Gaussian elimination. Deliberately
// independent of the sparse reduction in homology.hpp; meant for tests and
// small inputs only.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "phom/complex.hpp"
#include "phom/errors.hpp"
#include "phom/field.hpp"

namespace phom::oracle {

inline constexpr std::size_t default_cap = 4096;

/// Row-major dense matrix over Z/p.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> data;

  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::uint32_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
};

/// Rank over Z/p by row echelon reduction. Destroys `a`.
inline std::size_t rank_mod_p(DenseMatrix a, std::uint32_t p) {
  auto mulmod = [p](std::uint64_t x, std::uint64_t y) { return static_cast<std::uint32_t>(x * y % p); };
  auto inverse = [&](std::uint32_t x) {
    for (std::uint32_t y = 1; y < p; ++y)
      if (mulmod(x, y) == 1)
        return y;
    return 0u;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols && rank < a.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < a.rows && a.at(pivot, c) == 0)
      ++pivot;
    if (pivot == a.rows)
      continue;
    for (std::size_t k = 0; k < a.cols; ++k)
      std::swap(a.at(pivot, k), a.at(rank, k));
    const std::uint32_t scale = inverse(a.at(rank, c));
    for (std::size_t k = c; k < a.cols; ++k)
      a.at(rank, k) = mulmod(a.at(rank, k), scale);
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == rank || a.at(r, c) == 0)
        continue;
      const std::uint32_t factor = a.at(r, c);
      for (std::size_t k = c; k < a.cols; ++k)
        a.at(r, k) = (a.at(r, k) + p - mulmod(factor, a.at(rank, k))) % p;
    }
    ++rank;
  }
  return rank;
}

namespace detail {

/// Simplices of the prefix grouped by dimension, each with its position
/// inside its group.
struct Graded {
  std::vector<std::vector<std::size_t>> by_dim; // filtration positions
};

inline Graded grade(const Filtration& f, std::size_t prefix) {
  Graded g;
  for (std::size_t i = 0; i < prefix; ++i) {
    const auto d = static_cast<std::size_t>(f[i].dimension());
    if (g.by_dim.size() <= d)
      g.by_dim.resize(d + 1);
    g.by_dim[d].push_back(i);
  }
  return g;
}

/// Dense matrix of the boundary map from dimension k to k-1, restricted to
/// the given column and row simplices (filtration positions). Rows are
/// looked up by vertex set with a plain linear scan.
inline DenseMatrix boundary_block(const Filtration& f, const std::vector<std::size_t>& rows,
                                  const std::vector<std::size_t>& cols, std::uint32_t p) {
  DenseMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& verts = f[cols[c]].vertices;
    for (std::size_t omit = 0; omit < verts.size(); ++omit) {
      std::vector<Vertex> face;
      for (std::size_t t = 0; t < verts.size(); ++t)
        if (t != omit)
          face.push_back(verts[t]);
      const std::uint32_t coeff = omit % 2 == 0 ? 1 % p : p - 1;
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (f[rows[r]].vertices == face)
          m.at(r, c) = coeff;
    }
  }
  return m;
}

inline void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw InvalidArgument("oracle refuses complexes with more than " + std::to_string(cap) +
                          " simplices (" + std::to_string(n) + " given)");
}

} // namespace detail

/// Rank of the boundary map from dimension k to k-1 on the prefix complex.
inline std::size_t boundary_rank(const Filtration& f, std::size_t prefix, int k, FieldSpec field) {
  const auto g = detail::grade(f, prefix);
  if (k <= 0 || static_cast<std::size_t>(k) >= g.by_dim.size())
    return 0;
  return rank_mod_p(detail::boundary_block(f, g.by_dim[k - 1], g.by_dim[k], field.characteristic()),
                    field.characteristic());
}

/// β_k of the first `prefix` simplices for every k up to the prefix's top
/// dimension, by dense ranks: β_k = #k-simplices − rank ∂_k − rank ∂_{k+1}.
inline std::vector<long> bruteforce_betti_oracle(const Filtration& f, std::size_t prefix, FieldSpec field,
                                                 std::size_t cap = default_cap) {
  if (prefix > f.size())
    throw InvalidArgument("prefix exceeds filtration length");
  detail::check_cap(prefix, cap);
  const auto g = detail::grade(f, prefix);
  const std::uint32_t p = field.characteristic();
  const std::size_t top = g.by_dim.size();
  std::vector<std::size_t> ranks(top + 1, 0); // ranks[k] = rank ∂_k
  for (std::size_t k = 1; k < top; ++k)
    ranks[k] = rank_mod_p(detail::boundary_block(f, g.by_dim[k - 1], g.by_dim[k], p), p);
  std::vector<long> betti(top);
  for (std::size_t k = 0; k < top; ++k)
    betti[k] = static_cast<long>(g.by_dim[k].size()) - static_cast<long>(ranks[k]) -
               static_cast<long>(ranks[k + 1]);
  return betti;
}

/// β_k^{i,p} = dim Z_k(K_i) − dim(B_k(K_j) ∩ Z_k(K_i)) with j = min(i + p, last)
/// scale index. The intersection equals the boundaries of K_j supported on
/// K_i, whose dimension is rank ∂_{k+1}(K_j) minus the rank of the same map
/// with rows restricted to k-simplices outside K_i.
inline long persistent_betti(const Filtration& f, std::size_t i, std::size_t p, int k, FieldSpec field,
                             std::size_t cap = default_cap) {
  if (k < 0)
    throw InvalidArgument("homology dimension must be nonnegative");
  const auto& scales = f.scales();
  if (i >= scales.size())
    throw InvalidArgument("scale index out of range");
  const std::size_t j = std::min(i + p, scales.size() - 1);
  const std::size_t prefix_i = complex_at(f, scales[i]);
  const std::size_t prefix_j = complex_at(f, scales[j]);
  detail::check_cap(prefix_j, cap);
  const std::uint32_t q = field.characteristic();

  const auto gi = detail::grade(f, prefix_i);
  const auto gj = detail::grade(f, prefix_j);
  auto group = [](const detail::Graded& g, int d) {
    return d >= 0 && static_cast<std::size_t>(d) < g.by_dim.size() ? g.by_dim[d] : std::vector<std::size_t>{};
  };

  const auto ki = group(gi, k);
  const std::size_t cycles =
      ki.size() - (k > 0 ? rank_mod_p(detail::boundary_block(f, group(gi, k - 1), ki, q), q) : 0);

  const auto kj = group(gj, k);
  const auto up = group(gj, k + 1);
  std::vector<std::size_t> outside;
  for (std::size_t s : kj)
    if (s >= prefix_i)
      outside.push_back(s);
  const std::size_t boundaries = rank_mod_p(detail::boundary_block(f, kj, up, q), q);
  const std::size_t leaking = rank_mod_p(detail::boundary_block(f, outside, up, q), q);
  return static_cast<long>(cycles) - static_cast<long>(boundaries - leaking);
}

} // namespace phom::oracle
