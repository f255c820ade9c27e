#include "findep/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace findep {

namespace {

int l1(const Vec& v) {
  int s = 0;
  for (int x : v) s += std::abs(x);
  return s;
}

bool lex_positive(const Vec& v) {
  for (int x : v) {
    if (x != 0) return x > 0;
  }
  return false;
}

// All nonzero vectors with l1 norm <= m.
std::vector<Vec> ball(int d, int m) {
  std::vector<Vec> out;
  Vec v(static_cast<std::size_t>(d), -m);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
    if (i == v.size()) {
      if (l1(v) > 0) out.push_back(v);
      return;
    }
    for (int x = -budget; x <= budget; ++x) {
      v[i] = x;
      rec(i + 1, budget - std::abs(x));
    }
  };
  rec(0, m);
  return out;
}

}  // namespace

std::vector<Vec> directions(int d, int m) {
  if (d < 1 || m < 1) throw std::invalid_argument("directions needs d >= 1 and m >= 1");
  std::vector<Vec> out;
  for (auto& h : ball(d, m)) {
    if (lex_positive(h)) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

BoxColoring::BoxColoring(std::vector<int> dims, std::vector<Vec> dirs)
    : dims_(std::move(dims)), directions_(std::move(dirs)) {
  if (dims_.empty()) throw std::invalid_argument("box needs at least one dimension");
  for (int n : dims_) {
    if (n < 1) throw std::invalid_argument("box dimensions must be positive");
    vertex_count_ *= static_cast<std::size_t>(n);
  }
  for (const auto& h : directions_) {
    if (h.size() != dims_.size()) throw std::invalid_argument("direction dimension mismatch");
  }
  colors_.assign(vertex_count_ * directions_.size(), 1);
}

std::uint64_t BoxColoring::palette_size() const noexcept { return std::uint64_t{1} << (2 * components()); }

std::uint64_t BoxColoring::composite(std::size_t vertex) const {
  std::uint64_t c = 0;
  for (std::size_t j = components(); j-- > 0;) c = 4 * c + (component(vertex, j) - 1u);
  return c;
}

Vec BoxColoring::coordinates(std::size_t vertex) const {
  Vec out(dims_.size());
  for (std::size_t i = dims_.size(); i-- > 0;) {
    out[i] = static_cast<int>(vertex % static_cast<std::size_t>(dims_[i]));
    vertex /= static_cast<std::size_t>(dims_[i]);
  }
  return out;
}

std::size_t BoxColoring::index(const Vec& point) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (point[i] < 0 || point[i] >= dims_[i]) return npos;
    idx = idx * static_cast<std::size_t>(dims_[i]) + static_cast<std::size_t>(point[i]);
  }
  return idx;
}

std::string BoxColoring::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < dims_.size(); ++i) out += "x" + std::to_string(i) + ",";
  out += "color\n";
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    for (int x : coordinates(v)) out += std::to_string(x) + ",";
    out += std::to_string(composite(v)) + "\n";
  }
  return out;
}

BoxColoring sample_box(int d, int m, const std::vector<int>& dims, std::uint64_t seed) {
  if (static_cast<int>(dims.size()) != d) throw std::invalid_argument("box dimension does not match d");
  BoxColoring box(dims, directions(d, m));

  for (std::size_t j = 0; j < box.components(); ++j) {
    const Vec& h = box.directions()[j];
    for (std::size_t anchor = 0; anchor < box.vertex_count(); ++anchor) {
      Vec p = box.coordinates(anchor);
      Vec before = p;
      for (std::size_t i = 0; i < before.size(); ++i) before[i] -= h[i];
      if (box.index(before) != BoxColoring::npos) continue;  // not the start of its segment

      std::vector<std::size_t> segment;
      for (std::size_t idx = anchor; idx != BoxColoring::npos; idx = box.index(p)) {
        segment.push_back(idx);
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += h[i];
      }
      auto rng = SeededRng::substream(seed, {static_cast<std::int64_t>(j), static_cast<std::int64_t>(anchor)});
      const Word colors = sample_insertion(4, segment.size(), rng);
      for (std::size_t t = 0; t < segment.size(); ++t) box.set_component(segment[t], j, colors[t]);
    }
  }
  return box;
}

bool verify_range(const BoxColoring& c, int m) {
  const auto offsets = directions(static_cast<int>(c.dims().size()), m);
  for (std::size_t u = 0; u < c.vertex_count(); ++u) {
    const Vec pu = c.coordinates(u);
    for (const auto& delta : offsets) {
      Vec pv = pu;
      for (std::size_t i = 0; i < pv.size(); ++i) pv[i] += delta[i];
      const std::size_t v = c.index(pv);
      if (v == BoxColoring::npos) continue;
      bool differ = false;
      for (std::size_t j = 0; j < c.components() && !differ; ++j) differ = c.component(u, j) != c.component(v, j);
      if (!differ) return false;
    }
  }
  return true;
}

}  // namespace findep
