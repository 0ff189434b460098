#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "phom/errors.hpp"
#include "phom/metric_space.hpp"

namespace phom {

using Vertex = std::uint32_t;

inline constexpr double unbounded = std::numeric_limits<double>::infinity();

/// A simplex is its strictly increasing vertex list plus the scale at which
/// it enters the filtration.
struct Simplex {
  std::vector<Vertex> vertices;
  double value = 0.0;

  Simplex() = default;
  Simplex(std::vector<Vertex> verts, double v) : vertices(std::move(verts)), value(v) {
    if (vertices.empty())
      throw InvalidArgument("a simplex needs at least one vertex");
    if (!std::is_sorted(vertices.begin(), vertices.end()) ||
        std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
      throw InvalidArgument("simplex vertices must be strictly increasing");
  }

  int dimension() const noexcept { return static_cast<int>(vertices.size()) - 1; }

  friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// Filtration order: (value, dimension, lexicographic vertices).
inline bool filtration_less(const Simplex& a, const Simplex& b) {
  if (a.value != b.value)
    return a.value < b.value;
  if (a.vertices.size() != b.vertices.size())
    return a.vertices.size() < b.vertices.size();
  return a.vertices < b.vertices;
}

/// The codimension-1 faces of `s`; face i omits the vertex at position i.
/// Face values are left at zero since a bare simplex does not know them.
inline std::vector<Simplex> face_enumeration(const Simplex& s) {
  std::vector<Simplex> faces;
  if (s.dimension() < 1)
    return faces;
  faces.reserve(s.vertices.size());
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    Simplex f;
    f.vertices.reserve(s.vertices.size() - 1);
    for (std::size_t j = 0; j < s.vertices.size(); ++j)
      if (j != i)
        f.vertices.push_back(s.vertices[j]);
    faces.push_back(std::move(f));
  }
  return faces;
}

struct VertexListHash {
  std::size_t operator()(const std::vector<Vertex>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Vertex x : v) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// An ordered simplex sequence in which every prefix is a simplicial complex.
///
/// `truncation()` is the largest simplex dimension the builder was allowed to
/// emit, or nullopt when the complex is complete in every dimension (as for
/// explicitly listed complexes). Homology is only meaningful strictly below a
/// truncation dimension.
class Filtration {
public:
  Filtration() = default;

  /// Sorts `simplices` into filtration order and checks closure. Throws
  /// InvalidArgument if some face is missing or enters later than its coface.
  static Filtration from_simplices(std::vector<Simplex> simplices,
                                   std::optional<int> truncation = std::nullopt) {
    std::sort(simplices.begin(), simplices.end(), filtration_less);
    Filtration f(std::move(simplices), truncation);
    f.check_closure();
    return f;
  }

  std::size_t size() const noexcept { return simplices_.size(); }
  bool empty() const noexcept { return simplices_.empty(); }
  const Simplex& operator[](std::size_t i) const { return simplices_[i]; }
  const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  auto begin() const noexcept { return simplices_.begin(); }
  auto end() const noexcept { return simplices_.end(); }

  /// Sorted distinct simplex values.
  const std::vector<double>& scales() const noexcept { return scales_; }
  std::optional<int> truncation() const noexcept { return truncation_; }

  int max_dimension() const noexcept {
    int d = -1;
    for (const auto& s : simplices_)
      d = std::max(d, s.dimension());
    return d;
  }

  /// Filtration position of the simplex with these vertices, if present.
  std::optional<std::size_t> index_of(const std::vector<Vertex>& vertices) const {
    const auto it = index_.find(vertices);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  /// Largest dimension whose homology this filtration determines, or
  /// nullopt when every dimension is determined.
  std::optional<int> max_homology_dimension() const noexcept {
    if (!truncation_)
      return std::nullopt;
    return *truncation_ - 1;
  }

private:
  friend Filtration build_vr_filtration(const DistanceMatrix&, int, double);

  Filtration(std::vector<Simplex> sorted, std::optional<int> truncation)
      : simplices_(std::move(sorted)), truncation_(truncation) {
    index_.reserve(simplices_.size());
    for (std::size_t i = 0; i < simplices_.size(); ++i) {
      if (!index_.emplace(simplices_[i].vertices, i).second)
        throw InvalidArgument("duplicate simplex in filtration");
      if (scales_.empty() || scales_.back() != simplices_[i].value)
        scales_.push_back(simplices_[i].value);
    }
  }

  void check_closure() const {
    for (std::size_t i = 0; i < simplices_.size(); ++i) {
      if (!(simplices_[i].value >= 0.0))
        throw InvalidArgument("simplex values must be nonnegative");
      for (const auto& face : face_enumeration(simplices_[i])) {
        const auto j = index_of(face.vertices);
        if (!j || *j >= i)
          throw InvalidArgument("filtration is not closed under faces");
      }
    }
  }

  std::vector<Simplex> simplices_;
  std::vector<double> scales_;
  std::optional<int> truncation_;
  std::unordered_map<std::vector<Vertex>, std::size_t, VertexListHash> index_;
};

/// Vietoris-Rips filtration: every vertex set of at most max_dim + 1 points
/// whose pairwise distances are all <= max_eps, valued at its diameter.
/// Vertices enter at 0.
///
/// Cliques are grown from the max_eps neighborhood graph by appending
/// lower-indexed common neighbors, so subsets that max_eps rules out are
/// never visited.
inline Filtration build_vr_filtration(const DistanceMatrix& dm, int max_dim = 2,
                                      double max_eps = unbounded) {
  if (max_dim < 0)
    throw InvalidArgument("max_dim must be nonnegative");
  const std::size_t m = dm.size();

  // lower_neighbors[v]: u < v with d(u, v) <= max_eps, ascending.
  std::vector<std::vector<Vertex>> lower_neighbors(m);
  for (std::size_t v = 1; v < m; ++v)
    for (std::size_t u = 0; u < v; ++u)
      if (dm(u, v) <= max_eps)
        lower_neighbors[v].push_back(static_cast<Vertex>(u));

  std::vector<Simplex> out;
  out.reserve(m);

  // Each clique is stored in decreasing vertex order while growing:
  // `candidates` holds the common lower neighbors of all its members.
  struct Frame {
    std::vector<Vertex> members;
    std::vector<Vertex> candidates;
    double diameter;
  };
  std::vector<Frame> stack;
  for (std::size_t v = 0; v < m; ++v) {
    stack.push_back({{static_cast<Vertex>(v)}, lower_neighbors[v], 0.0});
    while (!stack.empty()) {
      Frame frame = std::move(stack.back());
      stack.pop_back();
      Simplex s;
      s.vertices.assign(frame.members.rbegin(), frame.members.rend());
      s.value = frame.diameter;
      out.push_back(std::move(s));
      if (static_cast<int>(frame.members.size()) > max_dim)
        continue;
      for (Vertex u : frame.candidates) {
        double diameter = frame.diameter;
        for (Vertex w : frame.members)
          diameter = std::max(diameter, dm(u, w));
        std::vector<Vertex> next;
        const auto& nu = lower_neighbors[u];
        std::set_intersection(frame.candidates.begin(), frame.candidates.end(), nu.begin(), nu.end(),
                              std::back_inserter(next));
        auto members = frame.members;
        members.push_back(u);
        stack.push_back({std::move(members), std::move(next), diameter});
      }
    }
  }

  std::sort(out.begin(), out.end(), filtration_less);
  return Filtration(std::move(out), max_dim);
}

/// Number of simplices with value <= eps; that prefix is R_eps.
inline std::size_t complex_at(const Filtration& f, double eps) {
  const auto& s = f.simplices();
  return static_cast<std::size_t>(
      std::partition_point(s.begin(), s.end(), [eps](const Simplex& x) { return x.value <= eps; }) -
      s.begin());
}

/// Debug dump: "value dim v0 ... vk" per line, in filtration order.
inline void write_filtration(std::ostream& os, const Filtration& f) {
  char buf[64];
  for (const auto& s : f) {
    const auto r = std::to_chars(buf, buf + sizeof buf, s.value, std::chars_format::general, 12);
    os.write(buf, r.ptr - buf);
    os << ' ' << s.dimension();
    for (Vertex v : s.vertices)
      os << ' ' << v;
    os << '\n';
  }
}

} // namespace phom
