#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "findep/buildings.hpp"
#include "findep/rational.hpp"
#include "findep/word.hpp"

namespace findep {

/// Cylinder law P(x) = B(x) / Sigma(q, |x|) on finite windows.
///
/// For q = 4 this is the 1-dependent 4-coloring and for q = 3 the 2-dependent
/// 3-coloring. Other q >= 2 give the generalized (not finitely dependent)
/// measure used for the negative results.
class CylinderMeasure {
 public:
  explicit CylinderMeasure(int q);

  int alphabet() const noexcept { return q_; }
  /// Declared dependence range: 1 for q = 4, 2 for q = 3, nullopt otherwise.
  std::optional<std::size_t> dependence_range() const noexcept;

  BigRational prob(const Word& x) const;

 private:
  int q_;
};

BigRational cylinder_prob(int q, const Word& x);

struct DependenceWitness {
  Word u;
  Word v;
  BigRational lhs;  ///< sum over w in [q]^k of P(u w v)
  BigRational rhs;  ///< P(u) P(v)
  BigRational gap() const { return lhs - rhs; }
};

struct DependenceReport {
  int q = 0;
  std::size_t k = 0;
  std::size_t max_len = 0;
  std::size_t pairs_checked = 0;
  std::size_t failures = 0;
  std::optional<DependenceWitness> witness;

  bool passed() const noexcept { return failures == 0; }
};

/// Checks sum_{w in [q]^k} P(u w v) = P(u) P(v) for all |u|, |v| <= max_len.
DependenceReport check_k_dependence(int q, std::size_t k, std::size_t max_len);

/// P3(x) * P4(no 4's in a window of length n) == P4(x) for all x in [3]^n.
bool check_conditional(std::size_t n);

/// Pattern over {0, 1, *} for the indicator J_i = 1[X_i = 1].
class BinaryPattern {
 public:
  enum class Cell : char { Zero = '0', One = '1', Any = '*' };

  BinaryPattern() = default;
  explicit BinaryPattern(std::vector<Cell> cells) : cells_(std::move(cells)) {}

  static BinaryPattern parse(std::string_view text);
  static BinaryPattern zeros(std::size_t n);

  std::size_t size() const noexcept { return cells_.size(); }
  Cell operator[](std::size_t i) const noexcept { return cells_[i]; }
  std::string str() const;

  BinaryPattern operator+(const BinaryPattern& rhs) const;

  friend bool operator==(const BinaryPattern&, const BinaryPattern&) = default;

 private:
  std::vector<Cell> cells_;
};

/// P(J_i = u_i for every non-* position), summed over matching words.
BigRational single_color_prob(int q, const BinaryPattern& u);

/// Taylor coefficients of G(s) = p s^2 / (1 - s + p s^2).
struct RenewalSeries {
  BigRational p;
  std::vector<BigRational> coefficients;  ///< coefficients[n] = p_n

  std::optional<std::size_t> first_negative() const;
};

RenewalSeries renewal_series(const BigRational& p, std::size_t n_max);

/// Coefficient of s^n in G as an integer polynomial in p, lowest degree first.
std::vector<BigInt> renewal_coefficient_polynomial(std::size_t n);

struct RenewalStructureReport {
  std::size_t n = 0;
  std::size_t compositions_checked = 0;
  std::size_t patterns_checked = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// For the 4-coloring with p = 1/4: the renewal product formula for every
/// composition with pattern length <= n, and agreement of every {0,1,*}
/// pattern of length <= n with the descent indicator of fair bits.
RenewalStructureReport check_renewal_structure(std::size_t n);

/// Probability that 1[B_i > B_{i+1}] matches u for n+1 i.i.d. fair bits.
BigRational fair_bit_descent_prob(const BinaryPattern& u);

struct QuarterBoundReport {
  bool quarter_nonnegative = false;     ///< p = 1/4 coefficients >= 0 up to n = 50
  std::optional<std::size_t> third_first_negative;
  BigRational third_value;              ///< coefficient at that index for p = 1/3
  BigRational probe_p;
  std::optional<std::size_t> probe_first_negative;
  BigRational probe_value;

  bool passed() const noexcept;
};

QuarterBoundReport check_quarter_bound(const BigRational& probe = make_rational(26, 100),
                                       std::size_t n_max = 50);

}  // namespace findep
