#include "findep/hardcore.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "findep/measure.hpp"

namespace findep {

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t v = 0; v < universe; ++v) s.insert(v);
  return s;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t VertexSet::max() const {
  for (std::size_t i = bits_.size(); i-- > 0;) {
    if (bits_[i]) return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(bits_[i]));
  }
  throw std::logic_error("max() of empty vertex set");
}

std::size_t VertexSet::min() const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(bits_[i]));
  }
  throw std::logic_error("min() of empty vertex set");
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < universe_; ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

std::size_t VertexSet::Hash::operator()(const VertexSet& s) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto w : s.bits_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

void FiniteGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (u >= size() || v >= size()) throw std::out_of_range("edge endpoint outside graph");
  if (adjacent(u, v)) return;
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
}

bool FiniteGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& nb = adjacency_.at(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::size_t FiniteGraph::edge_count() const noexcept {
  std::size_t degree_sum = 0;
  for (const auto& nb : adjacency_) degree_sum += nb.size();
  return degree_sum / 2;
}

FiniteGraph grid(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("grid needs at least one dimension");
  std::size_t n = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("grid dimensions must be positive");
    n *= static_cast<std::size_t>(d);
  }
  // Row-major index with the first coordinate most significant, so index
  // order is lexicographic coordinate order.
  std::vector<std::size_t> stride(dims.size(), 1);
  for (std::size_t i = dims.size() - 1; i-- > 0;) stride[i] = stride[i + 1] * static_cast<std::size_t>(dims[i + 1]);

  FiniteGraph g(n);
  std::vector<std::vector<int>> coords(n, std::vector<int>(dims.size()));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < dims.size(); ++i) {
      coords[v][i] = static_cast<int>((v / stride[i]) % static_cast<std::size_t>(dims[i]));
    }
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (coords[v][i] + 1 < dims[i]) g.add_edge(v, v + stride[i]);
    }
  }
  g.set_coordinates(std::move(coords));
  return g;
}

FiniteGraph path_graph(std::size_t n) { return grid({static_cast<int>(n)}); }

IndependencePolynomial::IndependencePolynomial(const FiniteGraph& g, BigRational lambda, RemovalRule rule)
    : graph_(g), lambda_(std::move(lambda)), rule_(rule) {}

BigRational IndependencePolynomial::operator()(const VertexSet& a) {
  if (a.universe() != graph_.size()) throw std::invalid_argument("vertex set does not belong to this graph");
  return eval(a);
}

const BigRational& IndependencePolynomial::eval(const VertexSet& a) {
  if (a.empty()) return one_;
  if (auto it = memo_.find(a); it != memo_.end()) return it->second;

  const std::size_t u = rule_ == RemovalRule::LargestFirst ? a.max() : a.min();
  VertexSet without = a;
  without.erase(u);
  VertexSet closed = without;
  for (auto v : graph_.neighbors(u)) closed.erase(v);

  BigRational value = eval(without);
  value += lambda_ * eval(closed);
  return memo_.emplace(a, std::move(value)).first->second;
}

BigRational independence_poly(const FiniteGraph& g, const VertexSet& a, const BigRational& lambda, RemovalRule rule) {
  IndependencePolynomial z(g, lambda, rule);
  return z(a);
}

namespace {

struct PublishedBox {
  std::vector<int> dims;
  std::int64_t lambda_den;
  const char* value;
};

const PublishedBox kPublished[] = {
    {{3, 3}, 5, "-21/3125"},
    {{13, 10},
     8,
     "-60294169567161237625416728069877775945051113/"
     "25108406941546723055343157692830665664409421777856138051584"},
    {{12, 4, 4},
     11,
     "-463442954667789552122160489238852809787756684428362788275310889047735211360981028087687/"
     "9412343651268540526001186511911506574868063110469548823950876000379062365652829504091329792873336961"},
};

}  // namespace

WitnessResult ph_witness(std::size_t index) {
  if (index >= std::size(kPublished)) throw std::out_of_range("no such published box");
  const auto& box = kPublished[index];
  WitnessResult result;
  result.dims = box.dims;
  result.lambda = make_rational(-1, box.lambda_den);
  result.expected = box.value;

  const auto start = std::chrono::steady_clock::now();
  const FiniteGraph g = grid(box.dims);
  IndependencePolynomial z(g, result.lambda);
  result.value = z(g.all());
  result.memo_size = z.memo_size();
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<WitnessResult> ph_witnesses() {
  std::vector<WitnessResult> out;
  for (std::size_t i = 0; i < std::size(kPublished); ++i) out.push_back(ph_witness(i));
  return out;
}

bool coloring_hardcore_check(std::size_t n) {
  if (n > 16) throw std::invalid_argument("coloring_hardcore_check limited to n <= 16");
  const FiniteGraph path = path_graph(n);
  IndependencePolynomial z(path, make_rational(-1, 4));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet a(n);
    std::vector<BinaryPattern::Cell> cells(n, BinaryPattern::Cell::Any);
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1) {
        a.insert(i);
        cells[i] = BinaryPattern::Cell::Zero;
      }
    }
    if (single_color_prob(4, BinaryPattern(cells)) != z(a)) return false;
  }
  return true;
}

std::size_t tree_size(int degree, std::size_t depth) {
  if (degree < 2) throw std::invalid_argument("tree degree must be at least 2");
  std::size_t total = 0, level = 1;
  for (std::size_t l = 0; l <= depth; ++l) {
    total += level;
    level *= static_cast<std::size_t>(degree - 1);
  }
  return total;
}

std::vector<std::size_t> tree_children(int degree, std::size_t depth, std::size_t v) {
  const auto branching = static_cast<std::size_t>(degree - 1);
  const std::size_t n = tree_size(degree, depth);
  std::vector<std::size_t> out;
  for (std::size_t c = 1; c <= branching; ++c) {
    const std::size_t child = branching * v + c;
    if (child < n) out.push_back(child);
  }
  return out;
}

TreeHardcoreSample tree_hardcore(int degree, std::size_t depth, SeededRng& rng) {
  TreeHardcoreSample out;
  out.degree = degree;
  out.depth = depth;
  out.exact_marginal = tree_marginal(degree);

  const std::size_t n = tree_size(degree, depth);
  const std::size_t first_leaf = depth == 0 ? 0 : tree_size(degree, depth - 1);

  std::vector<std::uint8_t> label(n);
  for (auto& l : label) l = rng.bernoulli(1, static_cast<std::uint64_t>(degree));

  out.config.assign(n, 0);
  for (std::size_t v = 0; v < first_leaf; ++v) {
    bool on = label[v];
    for (auto c : tree_children(degree, depth, v)) on = on && !label[c];
    out.config[v] = on;
    ++out.interior;
    out.interior_ones += on;
  }
  return out;
}

BigRational tree_marginal(int degree) {
  if (degree < 2) throw std::invalid_argument("tree degree must be at least 2");
  return make_rational(pow_int(degree - 1, static_cast<unsigned>(degree - 1)),
                       pow_int(degree, static_cast<unsigned>(degree)));
}

BigRational tree_marginal_by_enumeration(int degree) {
  if (degree < 2 || degree > 20) throw std::invalid_argument("degree out of range for enumeration");
  const BigRational one = make_rational(1, degree);
  const BigRational zero = 1 - one;
  BigRational total = 0;
  // bit 0: own label, bits 1..degree-1: children.
  for (std::uint32_t mask = 0; mask < (1u << degree); ++mask) {
    BigRational weight = 1;
    for (int b = 0; b < degree; ++b) weight *= (mask >> b) & 1 ? one : zero;
    if (mask == 1) total += weight;
  }
  return total;
}

bool tree_config_is_independent(const TreeHardcoreSample& sample) {
  for (std::size_t v = 0; v < sample.config.size(); ++v) {
    if (!sample.config[v]) continue;
    for (auto c : tree_children(sample.degree, sample.depth, v)) {
      if (sample.config[c]) return false;
    }
  }
  return true;
}

namespace {

long ceil_rational(const BigRational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

long floor_rational(const BigRational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

}  // namespace

BoundsReport bounds_arithmetic(int d, bool verify_witness) {
  if (d < 1 || d > 4) throw std::invalid_argument("bounds_arithmetic supports 1 <= d <= 4");
  BoundsReport report;
  report.d = d;
  const auto ud = static_cast<unsigned>(d);
  report.zd_upper = make_rational(pow_int(d, ud), pow_int(d + 1, ud + 1));
  report.zd_lower = make_rational(pow_int(2 * d - 1, 2 * ud - 1), pow_int(2 * d, 2 * ud));
  report.colors_closed_form = ceil_rational(1 / report.zd_upper);

  if (d == 2 || d == 3) {
    report.witness = make_rational(1, d == 2 ? 8 : 11);
    report.colors_witness = floor_rational(1 / *report.witness) + 1;
    if (verify_witness) {
      const auto w = ph_witness(d == 2 ? 1 : 2);
      report.witness_verified = w.negative() && w.matches();
    }
  }
  return report;
}

long tree_color_bound(int degree) { return ceil_rational(1 / tree_marginal(degree)); }

}  // namespace findep
