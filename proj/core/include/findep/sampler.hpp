#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>

#include "findep/rational.hpp"
#include "findep/word.hpp"

namespace findep {

/// Deterministic random stream: std::mt19937_64 seeded with the 64-bit seed.
///
/// Bounded draws use rejection on raw 64-bit outputs rather than
/// std::uniform_int_distribution, whose algorithm differs between standard
/// libraries, so a seed produces the same stream everywhere.
class SeededRng {
 public:
  static constexpr int kVersion = 1;

  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// True with probability num/den.
  bool bernoulli(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  /// Independent stream derived from this seed and a key (splitmix64 mix).
  static SeededRng substream(std::uint64_t seed, std::initializer_list<std::int64_t> key);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Exact sampler for (X_1, ..., X_n) by random insertion.
///
/// Starting from one uniform color, a new symbol is inserted at an internal
/// gap with weight q-2 or at an end with weight q-1 (total n(q-2)+2 when the
/// result has length n), using a color that keeps the word proper.
Word sample_insertion(int q, std::size_t n, SeededRng& rng);

using WordLaw = std::map<Word, BigRational>;

/// Exact output law of the insertion sampler, obtained by pushing the
/// distribution through every insertion step. n <= 5 in practice.
WordLaw insertion_law(int q, std::size_t n);

/// One rejection trial: uniform Z in [q]^n and uniform arrival permutation;
/// returns Z when the permutation is a proper building of Z.
std::optional<Word> rejection_trial(int q, std::size_t n, SeededRng& rng);

struct RejectionSample {
  Word word;
  std::size_t attempts = 0;
};

RejectionSample sample_rejection(int q, std::size_t n, SeededRng& rng);

/// Acceptance probability Sigma(q, n) / (n! q^n).
BigRational rejection_acceptance_prob(int q, std::size_t n);

/// Conditional law of the rejection sampler by exhaustive enumeration of all
/// (Z, sigma) pairs. n <= 4.
WordLaw rejection_law(int q, std::size_t n);

/// Total-variation distance between the empirical law of N insertion samples
/// and the exact cylinder law, as an exact rational. N = 0 gives 1.
BigRational empirical_distance(int q, std::size_t n, std::size_t samples, SeededRng& rng);

}  // namespace findep
