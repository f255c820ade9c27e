#include "findep/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace findep {

BigInt alpha(const SignWord& y) {
  // ways[j]: arrangements of the first i+1 values whose last entry has rank j.
  std::vector<BigInt> ways{BigInt(1)};
  for (std::size_t i = 0; i < y.size(); ++i) {
    const std::size_t len = ways.size() + 1;
    std::vector<BigInt> next(len, BigInt(0));
    if (y[i] > 0) {
      BigInt prefix = 0;
      for (std::size_t j = 0; j < len; ++j) {
        next[j] = prefix;
        if (j < ways.size()) prefix += ways[j];
      }
    } else {
      BigInt suffix = 0;
      for (std::size_t j = len; j-- > 0;) {
        if (j < ways.size()) suffix += ways[j];
        next[j] = suffix;
      }
    }
    ways = std::move(next);
  }
  BigInt total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

BigInt alpha_runs(std::span<const std::size_t> lengths) { return alpha(from_runs(lengths)); }

DispersedDyckWord::DispersedDyckWord(std::vector<std::int8_t> letters) : letters_(std::move(letters)) {
  if (!is_valid(letters_)) throw std::invalid_argument("not a dispersed Dyck word: " + str());
}

bool DispersedDyckWord::is_valid(std::span<const std::int8_t> letters) noexcept {
  long depth = 0;
  for (auto c : letters) {
    if (c == 0) {
      if (depth != 0) return false;
    } else if (c > 0) {
      ++depth;
    } else {
      if (--depth < 0) return false;
    }
    if (c < -1 || c > 1) return false;
  }
  return depth == 0;
}

DispersedDyckWord DispersedDyckWord::parse(std::string_view text) {
  std::vector<std::int8_t> letters;
  for (char c : text) {
    switch (c) {
      case '+': letters.push_back(1); break;
      case '-': letters.push_back(-1); break;
      case '0': letters.push_back(0); break;
      case ',':
      case ' ': break;
      default: throw std::invalid_argument("malformed dispersed Dyck word: '" + std::string(text) + "'");
    }
  }
  return DispersedDyckWord(std::move(letters));
}

std::size_t DispersedDyckWord::weight() const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), std::int8_t{1}));
}

std::string DispersedDyckWord::str() const {
  std::string out;
  for (auto c : letters_) out += c > 0 ? '+' : (c < 0 ? '-' : '0');
  return out;
}

void for_each_dd(std::size_t m, const std::function<void(const DispersedDyckWord&)>& f) {
  std::vector<std::int8_t> letters;
  letters.reserve(m);
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    const std::size_t left = m - letters.size();
    if (left == 0) {
      if (depth == 0) f(DispersedDyckWord(letters));
      return;
    }
    if (depth > 0) {
      letters.push_back(-1);
      self(self, depth - 1);
      letters.pop_back();
    }
    if (depth == 0) {
      letters.push_back(0);
      self(self, depth);
      letters.pop_back();
    }
    if (depth + 1 <= left - 1) {
      letters.push_back(1);
      self(self, depth + 1);
      letters.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<DispersedDyckWord> enumerate_dd(std::size_t m) {
  std::vector<DispersedDyckWord> out;
  for_each_dd(m, [&](const DispersedDyckWord& w) { out.push_back(w); });
  return out;
}

SignWord transform_y_w(const SignWord& y, const DispersedDyckWord& w) {
  const auto lengths = runs(y);
  if (lengths.empty() ? w.size() != 0 : w.size() != lengths.size() - 1) {
    throw std::invalid_argument("dispersed Dyck word has " + std::to_string(w.size()) + " slots, y has " +
                                std::to_string(lengths.size()) + " runs");
  }
  std::vector<std::int8_t> out;
  out.reserve(y.size());
  std::int8_t sign = y.empty() ? 1 : y[0];
  for (std::size_t j = 0; j < lengths.size(); ++j) {
    if (j > 0 && w[j - 1] == 0) sign = static_cast<std::int8_t>(-sign);
    out.insert(out.end(), lengths[j], sign);
  }
  return SignWord(std::move(out));
}

int sign_factor(const DispersedDyckWord& w, const SignWord& y, const SignWord& z) {
  if (y.size() != z.size()) throw std::invalid_argument("sign_factor: y and z lengths differ");
  const auto lengths = runs(y);
  if (lengths.empty() ? w.size() != 0 : w.size() != lengths.size() - 1) {
    throw std::invalid_argument("sign_factor: slot count mismatch");
  }
  int c = 1;
  std::size_t boundary = 0;  // index of the first symbol of run j+1
  for (std::size_t j = 0; j + 1 < lengths.size(); ++j) {
    boundary += lengths[j];
    if (w[j] > 0) c *= z[boundary - 1];
    if (w[j] < 0) c *= z[boundary];
  }
  return c;
}

BigRational q_formula_with(const Word& x, const std::function<BigRational(const SignWord&)>& weight) {
  if (x.alphabet() != 4) throw std::invalid_argument("q_formula needs a 4-color word");
  if (!is_proper(x)) return 0;
  if (x.empty()) return 1;
  const auto [y, z] = to_rows(x);
  const std::size_t m = runs(y).size();
  BigRational sum = 0;
  for_each_dd(m - 1, [&](const DispersedDyckWord& w) {
    BigRational term = weight(transform_y_w(y, w)) * sign_factor(w, y, z);
    if (w.weight() % 2) term = -term;
    sum += term;
  });
  return sum * BigRational(pow_int(2, static_cast<unsigned>(x.size() - m)));
}

BigInt q_formula(const Word& x) {
  if (x.size() > 14) throw std::invalid_argument("q_formula limited to |x| <= 14");
  const auto value = q_formula_with(x, [](const SignWord& y) { return BigRational(alpha(y)); });
  return value.get_num();
}

BigRational iid_alpha(const SignWord& y) {
  return make_rational(factorial(static_cast<unsigned>(y.size() + 1)), pow_int(2, static_cast<unsigned>(y.size())));
}

BigInt q_fast(const Word& x) {
  if (x.alphabet() != 4) throw std::invalid_argument("q_fast needs a 4-color word");
  if (!is_proper(x)) return 0;
  const std::size_t n = x.size();
  if (n == 0) return 1;
  const auto [y, z] = to_rows(x);

  // table[r][k] for the current suffix, r in 1..L+1 (index r), k in 0..n+1.
  const std::size_t kmax = n + 2;
  using Table = std::vector<std::vector<BigInt>>;
  auto fresh = [&](std::size_t len) { return Table(len + 2, std::vector<BigInt>(kmax + 1, BigInt(0))); };

  const auto sign_of = [](std::size_t k) { return k % 2 == 0 ? 1 : -1; };

  // Suffix of length 1: the last symbol.
  Table prev = fresh(1);
  for (std::size_t r = 1; r <= 2; ++r) {
    if (y[n - 1] == -sign_of(r)) prev[r][0] = 1;  // y_1 = (-1)^{r+1}
  }

  for (std::size_t len = 2; len <= n; ++len) {
    const std::size_t first = n - len;  // zero-based start of the suffix
    const int y1 = y[first], y2 = y[first + 1];
    const int z1 = z[first], z2 = z[first + 1];

    // inner[s][k]: the bracketed summand for the shorter suffix, s in 1..len.
    Table inner = fresh(len - 1);
    for (std::size_t s = 1; s <= len; ++s) {
      for (std::size_t k = 0; k + 1 <= kmax; ++k) {
        BigInt v;
        if (y1 == y2) {
          v = 2 * prev[s][k];
        } else if (k == 0) {
          v = prev[s][0] - z1 * prev[s][1];
        } else {
          v = z2 * prev[s][k - 1] - z1 * prev[s][k + 1];
        }
        inner[s][k] = std::move(v);
      }
    }

    Table next = fresh(len);
    for (std::size_t k = 0; k + 1 <= kmax; ++k) {
      // prefix[s] = sum_{t <= s} inner[t][k]
      std::vector<BigInt> prefix(len + 1, BigInt(0));
      for (std::size_t s = 1; s <= len; ++s) prefix[s] = prefix[s - 1] + inner[s][k];
      const bool upper = y1 == sign_of(k);  // S = {r..len}, else {1..r-1}
      for (std::size_t r = 1; r <= len + 1; ++r) {
        next[r][k] = upper ? prefix[len] - prefix[r - 1] : prefix[r - 1];
      }
    }
    prev = std::move(next);
  }

  BigInt total = 0;
  for (std::size_t r = 1; r <= n + 1; ++r) total += prev[r][0];
  return total;
}

bool MarginalReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

IdentityCheck check_row_marginal(std::size_t n) {
  IdentityCheck check{"row marginal: sum_z Q(y;z) = 2^n alpha(y), n=" + std::to_string(n), 0, 0, {}};
  const BigInt scale = pow_int(2, static_cast<unsigned>(n));
  for_each_sign_word(n, [&](const SignWord& y) {
    BigInt lhs = 0;
    for_each_sign_word(n, [&](const SignWord& z) { lhs += q_formula(from_rows(y, z)); });
    const BigInt rhs = scale * alpha(y);
    ++check.cases;
    if (lhs != rhs && check.failures++ == 0) {
      check.first_failure = "y=" + y.str() + " lhs=" + lhs.get_str() + " rhs=" + rhs.get_str();
    }
  });
  return check;
}

IdentityCheck check_building_marginal(std::size_t n) {
  IdentityCheck check{"building marginal: sum_{x in S(y)} B(x) = 2^n alpha(y), n=" + std::to_string(n), 0, 0, {}};
  const BigInt scale = pow_int(2, static_cast<unsigned>(n));
  for_each_sign_word(n, [&](const SignWord& y) {
    BigInt lhs = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Color> s(n);
      for (std::size_t i = 0; i < n; ++i) {
        const Color base = y[i] > 0 ? 3 : 1;
        s[i] = static_cast<Color>(base + ((mask >> i) & 1));
      }
      lhs += count_buildings(Word(4, std::move(s)));
    }
    const BigInt rhs = scale * alpha(y);
    ++check.cases;
    if (lhs != rhs && check.failures++ == 0) {
      check.first_failure = "y=" + y.str() + " lhs=" + lhs.get_str() + " rhs=" + rhs.get_str();
    }
  });
  return check;
}

IdentitySides catalan_identity(std::size_t n) {
  if (n == 0) throw std::invalid_argument("catalan identity needs n >= 1");
  IdentitySides out{0, BigRational(pow_int(2, static_cast<unsigned>(n - 1)))};
  std::vector<std::size_t> parts;
  auto rec = [&](auto&& self, std::size_t remaining) -> void {
    if (remaining == 0) {
      BigInt term = alpha_runs(parts);
      for (auto part : parts) {
        const auto t = static_cast<unsigned>((part - 1) / 2);
        term *= binomial(2 * t, t) / (t + 1);
        if (t % 2) term = -term;
      }
      out.lhs += term;
      return;
    }
    for (std::size_t part = 1; part <= remaining; part += 2) {
      parts.push_back(part);
      self(self, remaining - part);
      parts.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

IdentitySides curious_identity(std::size_t n) {
  if (n == 0) throw std::invalid_argument("curious identity needs n >= 1");
  const std::size_t len = 2 * n;
  BigInt both = 0;
  BigInt single = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    std::vector<Color> s(len);
    bool threes = true;
    for (std::size_t i = 0; i < len; ++i) {
      const bool bit = (mask >> i) & 1;
      s[i] = static_cast<Color>(i % 2 == 0 ? 1 + bit : 3 + bit);
      if (i % 2 == 1 && bit) threes = false;
    }
    const auto b = count_buildings(Word(4, std::move(s)));
    both += b;
    if (threes) single += b;
  }
  return {BigRational(both),
          make_rational(pow_int(4, static_cast<unsigned>(n)), static_cast<long>(n + 1)) * BigRational(single)};
}

MarginalReport marginal_identities(std::size_t n) {
  MarginalReport report{n, {}};
  report.checks.push_back(check_row_marginal(n));
  report.checks.push_back(check_building_marginal(n));
  for (auto [name, sides] : {std::pair{"catalan", n >= 1 ? catalan_identity(n) : IdentitySides{1, 1}},
                             std::pair{"curious", n >= 1 ? curious_identity(n) : IdentitySides{1, 1}}}) {
    IdentityCheck check{std::string(name) + " identity, n=" + std::to_string(n), 1, 0, {}};
    if (sides.lhs != sides.rhs) {
      check.failures = 1;
      check.first_failure = "lhs=" + to_string(sides.lhs) + " rhs=" + to_string(sides.rhs);
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

BigRational peak_prob(std::size_t m) {
  std::vector<BigRational> q(m + 1);
  q[0] = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    BigRational sum = 0;
    for (std::size_t i = 1; i <= k; ++i) sum += q[i - 1] * q[k - i];
    q[k] = sum / static_cast<long>(2 * k + 1);
  }
  return q[m];
}

}  // namespace findep
