#include "findep/sampler.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "findep/buildings.hpp"
#include "findep/measure.hpp"

namespace findep {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_q(int q) {
  if (q < 2 || q > 255) throw std::invalid_argument("q out of range: " + std::to_string(q));
}

// Colors allowed between neighbours left/right (0 = no neighbour).
std::vector<Color> admissible(int q, Color left, Color right) {
  std::vector<Color> out;
  for (int c = 1; c <= q; ++c) {
    if (c != left && c != right) out.push_back(static_cast<Color>(c));
  }
  return out;
}

}  // namespace

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % bound;
}

SeededRng SeededRng::substream(std::uint64_t seed, std::initializer_list<std::int64_t> key) {
  std::uint64_t h = splitmix64(seed);
  for (auto k : key) h = splitmix64(h ^ static_cast<std::uint64_t>(k));
  return SeededRng(h);
}

Word sample_insertion(int q, std::size_t n, SeededRng& rng) {
  check_q(q);
  if (n == 0) throw std::invalid_argument("sample length must be positive");
  std::vector<Color> s;
  s.reserve(n);
  s.push_back(static_cast<Color>(1 + rng.below(static_cast<std::uint64_t>(q))));
  for (std::size_t len = 2; len <= n; ++len) {
    // Weights: each of the len-2 internal gaps q-2, each end q-1.
    const auto internal = static_cast<std::uint64_t>(q - 2);
    const auto end = static_cast<std::uint64_t>(q - 1);
    const std::uint64_t total = (len - 2) * internal + 2 * end;
    std::uint64_t r = rng.below(total);
    std::size_t gap;  // insert before index gap, 0..len-1
    if (r < end) {
      gap = 0;
    } else if ((r -= end) < end) {
      gap = len - 1;
    } else {
      gap = 1 + (r - end) / internal;
    }
    const Color left = gap > 0 ? s[gap - 1] : 0;
    const Color right = gap < s.size() ? s[gap] : 0;
    const auto choices = admissible(q, left, right);
    const Color c = choices[rng.below(choices.size())];
    s.insert(s.begin() + static_cast<std::ptrdiff_t>(gap), c);
  }
  if (!is_proper(std::span<const Color>(s))) throw std::logic_error("insertion sampler produced an improper word");
  return Word(q, std::move(s));
}

WordLaw insertion_law(int q, std::size_t n) {
  check_q(q);
  if (n == 0) throw std::invalid_argument("law length must be positive");
  WordLaw law;
  for (int c = 1; c <= q; ++c) law[Word(q, {c})] = make_rational(1, q);
  for (std::size_t len = 2; len <= n; ++len) {
    WordLaw next;
    const long total = static_cast<long>(len) * (q - 2) + 2;
    for (const auto& [word, mass] : law) {
      const auto& s = word.symbols();
      for (std::size_t gap = 0; gap < len; ++gap) {
        const bool at_end = gap == 0 || gap == len - 1;
        const long weight = at_end ? q - 1 : q - 2;
        if (weight == 0) continue;
        const Color left = gap > 0 ? s[gap - 1] : 0;
        const Color right = gap < s.size() ? s[gap] : 0;
        const auto choices = admissible(q, left, right);
        const BigRational step = mass * make_rational(weight, total) /
                                 BigRational(static_cast<long>(choices.size()));
        for (Color c : choices) {
          std::vector<Color> t(s.begin(), s.end());
          t.insert(t.begin() + static_cast<std::ptrdiff_t>(gap), c);
          next[Word(q, std::move(t))] += step;
        }
      }
    }
    law = std::move(next);
  }
  return law;
}

namespace {

bool is_proper_building(std::span<const Color> z, std::span<const std::size_t> arrival_order) {
  std::vector<char> arrived(z.size(), 0);
  for (std::size_t pos : arrival_order) {
    for (std::size_t l = pos; l-- > 0;) {
      if (arrived[l]) {
        if (z[l] == z[pos]) return false;
        break;
      }
    }
    for (std::size_t r = pos + 1; r < z.size(); ++r) {
      if (arrived[r]) {
        if (z[r] == z[pos]) return false;
        break;
      }
    }
    arrived[pos] = 1;
  }
  return true;
}

}  // namespace

std::optional<Word> rejection_trial(int q, std::size_t n, SeededRng& rng) {
  check_q(q);
  std::vector<Color> z(n);
  for (auto& c : z) c = static_cast<Color>(1 + rng.below(static_cast<std::uint64_t>(q)));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  if (!is_proper_building(z, order)) return std::nullopt;
  return Word(q, std::move(z));
}

RejectionSample sample_rejection(int q, std::size_t n, SeededRng& rng) {
  if (n > 12) throw std::invalid_argument("rejection sampler limited to n <= 12");
  RejectionSample out;
  while (true) {
    ++out.attempts;
    if (auto w = rejection_trial(q, n, rng)) {
      out.word = std::move(*w);
      return out;
    }
  }
}

BigRational rejection_acceptance_prob(int q, std::size_t n) {
  return make_rational(total_buildings(q, n),
                       factorial(static_cast<unsigned>(n)) * pow_int(q, static_cast<unsigned>(n)));
}

WordLaw rejection_law(int q, std::size_t n) {
  check_q(q);
  if (n > 4) throw std::invalid_argument("exhaustive rejection law limited to n <= 4");
  std::map<Word, std::size_t> accepted;
  std::size_t total = 0;
  std::vector<std::size_t> order(n);
  for_each_word(q, n, [&](const Word& z) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
      if (is_proper_building(z.symbols(), order)) {
        ++accepted[z];
        ++total;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  });
  WordLaw law;
  for (const auto& [w, count] : accepted) {
    law[w] = make_rational(static_cast<std::int64_t>(count), static_cast<std::int64_t>(total));
  }
  return law;
}

BigRational empirical_distance(int q, std::size_t n, std::size_t samples, SeededRng& rng) {
  if (n > 6) throw std::invalid_argument("empirical distance limited to n <= 6");
  if (samples == 0) return 1;
  std::map<Word, std::size_t> counts;
  for (std::size_t i = 0; i < samples; ++i) ++counts[sample_insertion(q, n, rng)];

  const CylinderMeasure measure(q);
  const BigRational total = static_cast<unsigned long>(samples);
  BigRational distance = 0;
  for_each_proper_word(q, n, [&](const Word& x) {
    const auto it = counts.find(x);
    const BigRational empirical = it == counts.end() ? BigRational(0)
                                                     : BigRational(static_cast<unsigned long>(it->second)) / total;
    distance += abs(empirical - measure.prob(x));
  });
  return distance / 2;
}

}  // namespace findep
