#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "findep/rational.hpp"
#include "findep/sampler.hpp"

namespace findep {

/// Subset of a graph's vertices as a dynamic bitset over vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_((universe + 63) / 64, 0), universe_(universe) {}
  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(std::size_t v) const noexcept { return (bits_[v / 64] >> (v % 64)) & 1; }
  void insert(std::size_t v) noexcept { bits_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void erase(std::size_t v) noexcept { bits_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
  bool empty() const noexcept;
  std::size_t count() const noexcept;

  /// Largest / smallest member; the set must be nonempty.
  std::size_t max() const;
  std::size_t min() const;

  /// Members in ascending order.
  std::vector<std::size_t> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  struct Hash {
    std::size_t operator()(const VertexSet& s) const noexcept;
  };

 private:
  std::vector<std::uint64_t> bits_;
  std::size_t universe_ = 0;
};

/// Finite simple graph on vertices 0..n-1; index order is the canonical
/// (lexicographic) vertex order. Grid vertices carry their coordinates.
class FiniteGraph {
 public:
  explicit FiniteGraph(std::size_t n) : adjacency_(n) {}

  std::size_t size() const noexcept { return adjacency_.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const;
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t edge_count() const noexcept;

  void set_coordinates(std::vector<std::vector<int>> coords) { coords_ = std::move(coords); }
  const std::vector<std::vector<int>>& coordinates() const noexcept { return coords_; }

  VertexSet all() const { return VertexSet::full(size()); }

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::vector<int>> coords_;
};

/// Box prod_i [dims_i] in Z^d with l1-adjacency; vertices in lexicographic
/// order of coordinates (first coordinate most significant).
FiniteGraph grid(const std::vector<int>& dims);

/// Path on n vertices (grid({n})).
FiniteGraph path_graph(std::size_t n);

enum class RemovalRule { LargestFirst, SmallestFirst };

/// Z_A(lambda) = sum over independent B subset of A of lambda^|B|, through the
/// deletion recurrence Z_A = Z_{A-u} + lambda Z_{A-u-N(u)}.
///
/// Memoized on nonempty vertex sets for one (graph, lambda, rule) triple.
class IndependencePolynomial {
 public:
  IndependencePolynomial(const FiniteGraph& g, BigRational lambda, RemovalRule rule = RemovalRule::LargestFirst);

  BigRational operator()(const VertexSet& a);

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  const BigRational& eval(const VertexSet& a);

  const FiniteGraph& graph_;
  BigRational lambda_;
  RemovalRule rule_;
  std::unordered_map<VertexSet, BigRational, VertexSet::Hash> memo_;
  BigRational one_ = 1;
};

/// Convenience wrapper with a fresh memo. Throws std::invalid_argument when
/// `a` is over a different vertex universe.
BigRational independence_poly(const FiniteGraph& g, const VertexSet& a, const BigRational& lambda,
                              RemovalRule rule = RemovalRule::LargestFirst);

struct WitnessResult {
  std::vector<int> dims;
  BigRational lambda;
  BigRational value;
  std::string expected;  ///< published value, "num/den"
  std::size_t memo_size = 0;
  double seconds = 0;

  bool matches() const { return to_string(value) == expected; }
  bool negative() const { return sgn(value) < 0; }
};

/// The three published grid evaluations: [3]x[3] at -1/5, [13]x[10] at -1/8,
/// [12]x[4]x[4] at -1/11.
std::vector<WitnessResult> ph_witnesses();

/// Evaluates one published box. index 0..2 in the order above.
WitnessResult ph_witness(std::size_t index);

inline constexpr std::size_t kPublishedMemoSize3d = 89077;

/// P(no color 1 on A) for the 4-coloring equals Z_A(-1/4) on the path, for
/// every A subset of {1..n}.
bool coloring_hardcore_check(std::size_t n);

struct TreeHardcoreSample {
  int degree = 0;                 ///< Delta; each interior vertex has Delta-1 children
  std::size_t depth = 0;          ///< leaves sit at this level, the root at level 0
  std::vector<std::uint8_t> config;  ///< J per vertex in BFS order; leaves are 0
  std::size_t interior = 0;
  std::size_t interior_ones = 0;
  BigRational exact_marginal;
};

/// Children of vertex v in BFS order: (Delta-1) v + 1 ... (Delta-1) v + Delta - 1.
std::vector<std::size_t> tree_children(int degree, std::size_t depth, std::size_t v);
std::size_t tree_size(int degree, std::size_t depth);

/// Labels i.i.d. Bernoulli(1/Delta); J_v = 1 iff v's label is 1 and all its
/// children's labels are 0.
TreeHardcoreSample tree_hardcore(int degree, std::size_t depth, SeededRng& rng);

/// (Delta-1)^(Delta-1) / Delta^Delta.
BigRational tree_marginal(int degree);

/// P(J_v = 1) by summing over the 2^Delta labelings of v and its children.
BigRational tree_marginal_by_enumeration(int degree);

/// No two adjacent 1's in a sampled tree configuration.
bool tree_config_is_independent(const TreeHardcoreSample& sample);

struct BoundsReport {
  int d = 0;
  BigRational zd_upper;          ///< d^d / (d+1)^(d+1), upper bound on p_h(Z^d)
  BigRational zd_lower;          ///< (2d-1)^(2d-1) / (2d)^(2d)
  long colors_closed_form = 0;   ///< ceil((d+1)^(d+1) / d^d)
  std::optional<BigRational> witness;  ///< strict bound p_h < witness (d = 2, 3)
  std::optional<long> colors_witness;  ///< floor(1/witness) + 1
  bool witness_verified = false;

  long colors() const noexcept { return colors_witness.value_or(colors_closed_form); }
};

/// Lower bounds on the number of colors for a 1-dependent coloring of Z^d.
/// With verify_witness the negative box evaluation is recomputed.
BoundsReport bounds_arithmetic(int d, bool verify_witness = false);

/// ceil(Delta^Delta / (Delta-1)^(Delta-1)), the color bound on the Delta-regular tree.
long tree_color_bound(int degree);

}  // namespace findep
