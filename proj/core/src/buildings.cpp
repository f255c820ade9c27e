#include "findep/buildings.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace findep {

namespace {

// Relabels colors in order of first appearance: 2,3,2,1 -> 1,2,1,3.
std::string canonical_key(std::span<const Color> x) {
  std::array<Color, 256> map{};
  Color next = 1;
  std::string key(x.size(), '\0');
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto& slot = map[x[i]];
    if (slot == 0) slot = next++;
    key[i] = static_cast<char>(slot);
  }
  return key;
}

bool arrival_is_proper(std::span<const Color> x, std::span<const std::size_t> order,
                       std::vector<char>& arrived) {
  std::fill(arrived.begin(), arrived.end(), 0);
  const std::size_t n = x.size();
  for (std::size_t pos : order) {
    for (std::size_t l = pos; l-- > 0;) {
      if (arrived[l]) {
        if (x[l] == x[pos]) return false;
        break;
      }
    }
    for (std::size_t r = pos + 1; r < n; ++r) {
      if (arrived[r]) {
        if (x[r] == x[pos]) return false;
        break;
      }
    }
    arrived[pos] = 1;
  }
  return true;
}

std::string describe(const Word& x) { return "(" + x.str() + ")"; }

}  // namespace

BuildingCount count_buildings_oracle(const Word& x, std::size_t cap) {
  if (x.size() > cap) {
    throw std::invalid_argument("oracle cap exceeded: |x| = " + std::to_string(x.size()) +
                                " > " + std::to_string(cap));
  }
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<char> arrived(x.size());
  BuildingCount total = 0;
  do {
    if (arrival_is_proper(x.symbols(), order, arrived)) ++total;
  } while (std::next_permutation(order.begin(), order.end()));
  return total;
}

BuildingCount BuildingCounter::count(const Word& x) { return count(x.symbols()); }

BuildingCount BuildingCounter::count(std::span<const Color> x) {
  if (!is_proper(x)) return 0;
  return count_canonical(canonical_key(x));
}

const BuildingCount& BuildingCounter::count_canonical(const std::string& key) {
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  BuildingCount total = 0;
  if (key.size() <= 1) {
    total = 1;
  } else {
    std::vector<Color> sub(key.size() - 1);
    for (std::size_t i = 0; i < key.size(); ++i) {
      // Removing an interior symbol between two equal neighbours is not proper.
      if (i > 0 && i + 1 < key.size() && key[i - 1] == key[i + 1]) continue;
      for (std::size_t j = 0, k = 0; j < key.size(); ++j) {
        if (j != i) sub[k++] = static_cast<Color>(key[j]);
      }
      total += count_canonical(canonical_key(sub));
    }
  }
  return memo_.emplace(key, std::move(total)).first->second;
}

BuildingCount count_buildings(const Word& x) {
  thread_local BuildingCounter counter;
  return counter.count(x);
}

BuildingCount total_buildings(int q, std::size_t n) {
  BuildingCount out = 1;
  for (std::size_t k = 1; k <= n; ++k) out *= static_cast<long>(k) * (q - 2) + 2;
  return out;
}

bool IdentityReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

IdentityCheck check_extension_identity(int q, std::size_t max_len) {
  IdentityCheck check{"extension: sum_a B(xa) = [n(q-2)+q] B(x)", 0, 0, {}};
  for (std::size_t n = 0; n <= max_len; ++n) {
    for_each_word(q, n, [&](const Word& x) {
      BuildingCount lhs = 0;
      for (int a = 1; a <= q; ++a) lhs += count_buildings(x.with_appended(static_cast<Color>(a)));
      const BuildingCount rhs = (static_cast<long>(n) * (q - 2) + q) * count_buildings(x);
      ++check.cases;
      if (lhs != rhs && check.failures++ == 0) {
        check.first_failure = "x=" + describe(x) + " lhs=" + lhs.get_str() + " rhs=" + rhs.get_str();
      }
    });
  }
  return check;
}

IdentityCheck check_gap_identity(int q, std::size_t max_total) {
  if (q != 3 && q != 4) throw std::invalid_argument("gap identity holds only for q = 3 or 4");
  IdentityCheck check{q == 4 ? "gap: sum_a B(xay) = 2 C(m+n+2,m+1) B(x) B(y)"
                             : "gap: sum_{a,b} B(xaby) = 2 C(m+n+4,m+2) B(x) B(y)", 0, 0, {}};
  const std::size_t gap = q == 4 ? 1 : 2;
  for (std::size_t m = 0; m <= max_total; ++m) {
    for (std::size_t n = 0; m + n <= max_total; ++n) {
      const BigInt factor = q == 4 ? 2 * binomial(static_cast<unsigned>(m + n + 2), static_cast<unsigned>(m + 1))
                                 : 2 * binomial(static_cast<unsigned>(m + n + 4), static_cast<unsigned>(m + 2));
      for_each_word(q, m, [&](const Word& x) {
        const auto bx = count_buildings(x);
        for_each_word(q, n, [&](const Word& y) {
          BuildingCount lhs = 0;
          for_each_word(q, gap, [&](const Word& a) { lhs += count_buildings(x + a + y); });
          const BuildingCount rhs = factor * bx * count_buildings(y);
          ++check.cases;
          if (lhs != rhs && check.failures++ == 0) {
            check.first_failure = "x=" + describe(x) + " y=" + describe(y) + " lhs=" + lhs.get_str() +
                                  " rhs=" + rhs.get_str();
          }
        });
      });
    }
  }
  return check;
}

TwoPointGap two_point_gap(int q, std::size_t n) {
  TwoPointGap out;
  const Word one(q, {1});
  const Word two(q, {2});
  out.lhs = 0;
  for_each_word(q, n, [&](const Word& x) {
    out.lhs += count_buildings(one + x + two) - count_buildings(one + x + one);
  });
  out.rhs = 2;
  for (std::size_t k = 1; k <= n; ++k) out.rhs *= static_cast<long>(k) * (q - 2) - 2;
  return out;
}

IdentityCheck check_two_point_identity(int q, std::size_t max_len) {
  IdentityCheck check{"two-point: sum_x [B(1x2) - B(1x1)] = 2 prod_k [k(q-2)-2]", 0, 0, {}};
  for (std::size_t n = 0; n <= max_len; ++n) {
    const auto gap = two_point_gap(q, n);
    ++check.cases;
    if (gap.lhs != gap.rhs && check.failures++ == 0) {
      check.first_failure = "n=" + std::to_string(n) + " lhs=" + gap.lhs.get_str() + " rhs=" + gap.rhs.get_str();
    }
  }
  return check;
}

IdentityReport verify_identities(int q, std::size_t max_len) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  IdentityReport report{q, max_len, {}};
  report.checks.push_back(check_extension_identity(q, max_len));
  if (q == 3 || q == 4) report.checks.push_back(check_gap_identity(q, max_len));
  report.checks.push_back(check_two_point_identity(q, max_len));
  return report;
}

}  // namespace findep
