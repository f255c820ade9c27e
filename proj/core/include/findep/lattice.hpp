#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "findep/sampler.hpp"
#include "findep/word.hpp"

namespace findep {

using Vec = std::vector<int>;

/// One representative of each +-pair of nonzero vectors with l1 norm <= m,
/// the one whose first nonzero coordinate is positive. Ordered
/// lexicographically descending, so m = 1 gives e_1, ..., e_d.
std::vector<Vec> directions(int d, int m);

/// Coloring of a finite box where each vertex carries one color in [4] per
/// line direction.
class BoxColoring {
 public:
  BoxColoring(std::vector<int> dims, std::vector<Vec> directions);

  const std::vector<int>& dims() const noexcept { return dims_; }
  const std::vector<Vec>& directions() const noexcept { return directions_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t components() const noexcept { return directions_.size(); }

  /// Number of distinct composite colors, 4^|H|.
  std::uint64_t palette_size() const noexcept;

  Color component(std::size_t vertex, std::size_t direction) const { return colors_[vertex * components() + direction]; }
  void set_component(std::size_t vertex, std::size_t direction, Color c) { colors_[vertex * components() + direction] = c; }

  /// Composite color in [0, 4^|H|): sum_j (Y_j - 1) 4^j.
  std::uint64_t composite(std::size_t vertex) const;

  Vec coordinates(std::size_t vertex) const;
  /// Index of a point, or npos when it lies outside the box.
  std::size_t index(const Vec& point) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// One line per vertex: coordinates then composite color.
  std::string to_csv() const;

 private:
  std::vector<int> dims_;
  std::vector<Vec> directions_;
  std::size_t vertex_count_ = 1;
  std::vector<Color> colors_;
};

/// Places an independent 1-dependent 4-coloring (insertion sampler) on every
/// line segment of the box in each direction of directions(d, m). A segment's
/// anchor is its lexicographically smallest point; its stream is derived
/// from (seed, direction index, anchor index).
BoxColoring sample_box(int d, int m, const std::vector<int>& dims, std::uint64_t seed);

/// True iff X_u != X_v for all box points with 0 < ||u - v||_1 <= m.
bool verify_range(const BoxColoring& c, int m);

}  // namespace findep
