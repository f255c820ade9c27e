#include "oracles.hpp"

#include <algorithm>
#include <numeric>

using findep::BigInt;
using findep::BigRational;
using findep::Color;
using findep::Word;

namespace oracle {

BigInt buildings(const Word& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  BigInt total = 0;
  do {
    bool ok = true;
    std::vector<bool> arrived(n, false);
    for (std::size_t t = 0; t < n && ok; ++t) {
      arrived[order[t]] = true;
      Color prev = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!arrived[i]) continue;
        if (x.symbols()[i] == prev) {
          ok = false;
          break;
        }
        prev = x.symbols()[i];
      }
    }
    if (ok) ++total;
  } while (std::next_permutation(order.begin(), order.end()));
  return total;
}

BigInt descent_class(const findep::SignWord& y) {
  std::vector<int> pi(y.size() + 1);
  std::iota(pi.begin(), pi.end(), 0);
  BigInt total = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < y.size() && ok; ++i) ok = (pi[i] < pi[i + 1]) == (y[i] > 0);
    if (ok) ++total;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return total;
}

BigRational independence_poly(const findep::FiniteGraph& g, const std::vector<std::size_t>& a,
                              const BigRational& lambda) {
  BigRational total = 0;
  const std::size_t k = a.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    bool independent = true;
    std::size_t size = 0;
    for (std::size_t i = 0; i < k && independent; ++i) {
      if (!((mask >> i) & 1)) continue;
      ++size;
      for (std::size_t j = i + 1; j < k; ++j) {
        if (((mask >> j) & 1) && g.adjacent(a[i], a[j])) {
          independent = false;
          break;
        }
      }
    }
    if (!independent) continue;
    BigRational term = 1;
    for (std::size_t i = 0; i < size; ++i) term *= lambda;
    total += term;
  }
  return total;
}

BigRational alternating_prob(std::size_t m) {
  std::vector<int> pi(2 * m + 1);
  std::iota(pi.begin(), pi.end(), 0);
  long hits = 0, all = 0;
  do {
    ++all;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < pi.size() && ok; ++i) ok = (i % 2 == 0) ? pi[i] < pi[i + 1] : pi[i] > pi[i + 1];
    if (ok) ++hits;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return findep::make_rational(hits, all);
}

BigRational cylinder(int q, const Word& x) {
  BigInt total = 0;
  findep::for_each_proper_word(q, x.size(), [&](const Word& y) { total += buildings(y); });
  BigRational r(buildings(x), total);
  r.canonicalize();
  return r;
}

}  // namespace oracle
