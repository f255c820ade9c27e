#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "findep/buildings.hpp"
#include "findep/rational.hpp"
#include "findep/word.hpp"

namespace findep {

/// Number of permutations pi of S_{n+1} with pi_i < pi_{i+1} exactly where
/// y_i = +, computed by the prefix-rank dynamic program in O(n^2).
BigInt alpha(const SignWord& y);

/// alpha of a word with successive run lengths k_1..k_m. A zero entry merges
/// its two neighbouring runs.
BigInt alpha_runs(std::span<const std::size_t> lengths);

/// A word over {-, 0, +} made of Dyck words and runs of 0's.
class DispersedDyckWord {
 public:
  DispersedDyckWord() = default;
  /// Throws std::invalid_argument if the letters do not form a dispersed Dyck word.
  explicit DispersedDyckWord(std::vector<std::int8_t> letters);

  static DispersedDyckWord parse(std::string_view text);
  static bool is_valid(std::span<const std::int8_t> letters) noexcept;

  std::size_t size() const noexcept { return letters_.size(); }
  std::int8_t operator[](std::size_t i) const noexcept { return letters_[i]; }
  std::span<const std::int8_t> letters() const noexcept { return letters_; }

  /// Number of + letters.
  std::size_t weight() const noexcept;
  std::string str() const;

  friend bool operator==(const DispersedDyckWord&, const DispersedDyckWord&) = default;

 private:
  std::vector<std::int8_t> letters_;
};

/// All dispersed Dyck words of length m, in lexicographic order with - < 0 < +.
std::vector<DispersedDyckWord> enumerate_dd(std::size_t m);

/// Streams DD(m) without materializing it.
void for_each_dd(std::size_t m, const std::function<void(const DispersedDyckWord&)>& f);

/// y_w: flips whole interior runs of y so that the j-th sign change survives
/// iff w_j = 0. Requires |w| = runs(y) - 1.
SignWord transform_y_w(const SignWord& y, const DispersedDyckWord& w);

/// c(w, y, z): product over sign changes j of l_j (w_j = +), r_j (w_j = -) or
/// 1 (w_j = 0), where l_j, r_j are the z entries either side of the j-th
/// sign change of y.
int sign_factor(const DispersedDyckWord& w, const SignWord& y, const SignWord& z);

/// Alternating dispersed-Dyck sum for a 4-color word. Equals B(x). |x| <= 14.
BigInt q_formula(const Word& x);

/// The same sum with an arbitrary weight in place of alpha.
BigRational q_formula_with(const Word& x, const std::function<BigRational(const SignWord&)>& weight);

/// alpha'(y) = (n+1)! / 2^n, the weight of an i.i.d. fair-sign row.
BigRational iid_alpha(const SignWord& y);

/// O(n^3) evaluation of the dispersed-Dyck sum by the Q_r^k recurrence.
BigInt q_fast(const Word& x);

struct MarginalReport {
  std::size_t n = 0;
  std::vector<IdentityCheck> checks;
  bool passed() const noexcept;
};

/// sum_z Q(y; z) = 2^n alpha(y) for every y of length n.
IdentityCheck check_row_marginal(std::size_t n);

/// S(y) = product of {1,2} (y_i = -) and {3,4} (y_i = +);
/// sum_{x in S(y)} B(x) = 2^n alpha(y) for every y of length n.
IdentityCheck check_building_marginal(std::size_t n);

struct IdentitySides {
  BigRational lhs;
  BigRational rhs;
};

/// sum over odd compositions n = sum (2 t_j + 1) of prod(-C_{t_j}) alpha(2t_1+1, ...),
/// against 2^{n-1}.
IdentitySides catalan_identity(std::size_t n);

/// sum over ({1,2} x {3,4})^n of B against 4^n/(n+1) times the sum over
/// ({1,2} x {3})^n; both are words of length 2n.
IdentitySides curious_identity(std::size_t n);

/// All four checks at size n.
MarginalReport marginal_identities(std::size_t n);

/// q_m = P(U_1 < U_2 > U_3 < ... > U_{2m+1}) from (2m+1) q_m = sum_i q_{i-1} q_{m-i}.
BigRational peak_prob(std::size_t m);

}  // namespace findep
