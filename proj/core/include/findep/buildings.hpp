#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "findep/rational.hpp"
#include "findep/word.hpp"

namespace findep {

/// Number of proper buildings of a word; always nonnegative and at most n!.
using BuildingCount = BigInt;

inline constexpr std::size_t kBuildingOracleCap = 8;

/// Counts proper buildings by enumerating every arrival permutation in S_n.
/// A permutation is a proper building when each arrival prefix, read in
/// position order, is a proper coloring. Throws std::invalid_argument when
/// |x| exceeds `cap`.
BuildingCount count_buildings_oracle(const Word& x, std::size_t cap = kBuildingOracleCap);

/// Memoized deletion recursion B(x) = sum_i B(x with i-th symbol removed).
///
/// The memo is keyed by the word relabeled in order of first appearance, since
/// B is invariant under color permutations. Not thread-safe: use one counter
/// per thread.
class BuildingCounter {
 public:
  BuildingCount count(const Word& x);
  BuildingCount count(std::span<const Color> x);

  std::size_t memo_size() const noexcept { return memo_.size(); }
  void clear() { memo_.clear(); }

 private:
  const BuildingCount& count_canonical(const std::string& key);

  std::unordered_map<std::string, BuildingCount> memo_;
};

/// B(x) through a thread-local BuildingCounter.
BuildingCount count_buildings(const Word& x);

/// Sigma(q, n) = prod_{k=1}^{n} [k(q-2)+2], the total over all of [q]^n.
BuildingCount total_buildings(int q, std::size_t n);

struct IdentityCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0; }
};

struct IdentityReport {
  int q = 0;
  std::size_t max_len = 0;
  std::vector<IdentityCheck> checks;

  bool passed() const noexcept;
};

/// sum_a B(xa) = [n(q-2)+q] B(x) for every x in [q]^n, n <= max_len.
IdentityCheck check_extension_identity(int q, std::size_t max_len);

/// For q = 4: sum_a B(xay) = 2 C(m+n+2, m+1) B(x) B(y).
/// For q = 3: sum_{a,b} B(xaby) = 2 C(m+n+4, m+2) B(x) B(y).
/// Checked for all x in [q]^m, y in [q]^n with m + n <= max_total.
IdentityCheck check_gap_identity(int q, std::size_t max_total);

struct TwoPointGap {
  BigInt lhs;  ///< sum over x in [q]^n of B(1x2) - B(1x1)
  BigInt rhs;  ///< 2 prod_{k=1}^{n} [k(q-2)-2]
};

TwoPointGap two_point_gap(int q, std::size_t n);

/// Two-point identity for every n <= max_len.
IdentityCheck check_two_point_identity(int q, std::size_t max_len);

/// Runs every identity that applies to q, with words up to max_len.
IdentityReport verify_identities(int q, std::size_t max_len);

}  // namespace findep
