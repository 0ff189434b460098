#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <tuple>
#include <vector>

#include "phom/complex.hpp"
#include "phom/errors.hpp"
#include "phom/homology.hpp"

namespace phom {

inline constexpr double infinite_death = std::numeric_limits<double>::infinity();

/// One homology class: born at `birth`, dead at `death` (+inf if essential).
struct PersistencePair {
  int dim = 0;
  double birth = 0.0;
  double death = infinite_death;

  bool essential() const noexcept { return std::isinf(death); }
  bool zero_persistence() const noexcept { return birth == death; }
  double persistence() const noexcept { return death - birth; }

  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
};

/// Sort key shared by barcodes and the pairs file.
inline bool bar_less(const PersistencePair& a, const PersistencePair& b) {
  return std::tie(a.dim, a.birth, a.death) < std::tie(b.dim, b.birth, b.death);
}

/// Scale-valued pairs for every index pair and essential class of `r`,
/// sorted by (dim, birth, death). Zero-persistence pairs are kept.
inline std::vector<PersistencePair> pairs_to_scales(const ReductionResult& r, const Filtration& f) {
  std::vector<PersistencePair> out;
  out.reserve(r.pairs.size() + r.essential.size());
  for (const auto& [b, d] : r.pairs)
    out.push_back({f[b].dimension(), f[b].value, f[d].value});
  for (Index e : r.essential)
    out.push_back({f[e].dimension(), f[e].value, infinite_death});
  std::sort(out.begin(), out.end(), bar_less);
  return out;
}

/// Pairs in dimensions whose homology the filtration fully determines.
/// Classes in the truncation dimension are artifacts of the missing cofaces.
inline std::vector<PersistencePair> restrict_to_valid_dimensions(std::vector<PersistencePair> pairs,
                                                                 const Filtration& f) {
  if (const auto top = f.max_homology_dimension())
    std::erase_if(pairs, [top](const PersistencePair& p) { return p.dim > *top; });
  return pairs;
}

inline std::vector<PersistencePair> drop_zero_persistence(std::vector<PersistencePair> pairs) {
  std::erase_if(pairs, [](const PersistencePair& p) { return p.zero_persistence(); });
  return pairs;
}

/// Replaces birth and death by 1-based positions in f.scales(), giving the
/// step-indexed diagram. Essentials keep an infinite death.
inline std::vector<PersistencePair> to_scale_indices(std::vector<PersistencePair> pairs, const Filtration& f) {
  const auto& scales = f.scales();
  auto position = [&](double v) {
    const auto it = std::lower_bound(scales.begin(), scales.end(), v);
    if (it == scales.end() || *it != v)
      throw InvalidArgument("value is not a scale of this filtration");
    return static_cast<double>(it - scales.begin() + 1);
  };
  for (auto& p : pairs) {
    p.birth = position(p.birth);
    if (!p.essential())
      p.death = position(p.death);
  }
  std::sort(pairs.begin(), pairs.end(), bar_less);
  return pairs;
}

/// Bars grouped by dimension, sorted by (dim, birth, death).
class Barcode {
public:
  Barcode() = default;
  explicit Barcode(std::vector<PersistencePair> bars) : bars_(std::move(bars)) {
    std::sort(bars_.begin(), bars_.end(), bar_less);
  }

  const std::vector<PersistencePair>& bars() const noexcept { return bars_; }
  std::size_t size() const noexcept { return bars_.size(); }
  bool empty() const noexcept { return bars_.empty(); }

  int max_dimension() const noexcept { return bars_.empty() ? -1 : bars_.back().dim; }

  std::vector<PersistencePair> in_dimension(int k) const {
    std::vector<PersistencePair> out;
    for (const auto& b : bars_)
      if (b.dim == k)
        out.push_back(b);
    return out;
  }

private:
  std::vector<PersistencePair> bars_;
};

struct DiagramPoint {
  double birth;
  double death;
  int dim;
  std::size_t multiplicity;

  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

/// Distinct (birth, death, dim) points with multiplicities. The diagonal is
/// implicit. `infinity_cap`, when set, is where essential points are drawn.
struct PersistenceDiagram {
  std::vector<DiagramPoint> points;
  std::optional<double> infinity_cap;

  std::size_t total_multiplicity(int dim) const {
    std::size_t n = 0;
    for (const auto& p : points)
      if (p.dim == dim)
        n += p.multiplicity;
    return n;
  }
};

inline PersistenceDiagram build_diagram(std::vector<PersistencePair> pairs, bool drop_zero = true,
                                        std::optional<double> infinity_cap = std::nullopt) {
  if (infinity_cap) {
    for (const auto& p : pairs)
      if (!p.essential() && p.death > *infinity_cap)
        throw InvalidArgument("infinity cap lies below a finite death value");
  }
  if (drop_zero)
    pairs = drop_zero_persistence(std::move(pairs));
  std::sort(pairs.begin(), pairs.end(), bar_less);

  PersistenceDiagram diagram;
  diagram.infinity_cap = infinity_cap;
  for (const auto& p : pairs) {
    if (!diagram.points.empty()) {
      auto& last = diagram.points.back();
      if (last.dim == p.dim && last.birth == p.birth && last.death == p.death) {
        ++last.multiplicity;
        continue;
      }
    }
    diagram.points.push_back({p.birth, p.death, p.dim, 1});
  }
  return diagram;
}

/// The n most persistent pairs: infinite persistence first, then by
/// decreasing persistence, ties broken by (dim, birth).
inline std::vector<PersistencePair> top_features(std::vector<PersistencePair> pairs, std::size_t n) {
  std::stable_sort(pairs.begin(), pairs.end(), [](const PersistencePair& a, const PersistencePair& b) {
    if (a.essential() != b.essential())
      return a.essential();
    if (!a.essential() && a.persistence() != b.persistence())
      return a.persistence() > b.persistence();
    return std::tie(a.dim, a.birth) < std::tie(b.dim, b.birth);
  });
  if (pairs.size() > n)
    pairs.resize(n);
  return pairs;
}

} // namespace phom
