#include "findep/measure.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace findep {

CylinderMeasure::CylinderMeasure(int q) : q_(q) {
  if (q < 2) throw std::invalid_argument("cylinder measure needs q >= 2");
}

std::optional<std::size_t> CylinderMeasure::dependence_range() const noexcept {
  if (q_ == 4) return 1;
  if (q_ == 3) return 2;
  return std::nullopt;
}

BigRational CylinderMeasure::prob(const Word& x) const {
  if (x.alphabet() > q_) throw std::invalid_argument("word alphabet exceeds measure alphabet");
  return make_rational(count_buildings(x), total_buildings(q_, x.size()));
}

BigRational cylinder_prob(int q, const Word& x) { return CylinderMeasure(q).prob(x); }

DependenceReport check_k_dependence(int q, std::size_t k, std::size_t max_len) {
  const CylinderMeasure measure(q);
  DependenceReport report{q, k, max_len, 0, 0, std::nullopt};

  std::vector<std::pair<Word, BigRational>> windows;
  for (std::size_t n = 0; n <= max_len; ++n) {
    for_each_word(q, n, [&](const Word& w) { windows.emplace_back(w, measure.prob(w)); });
  }
  std::vector<Word> gaps;
  for_each_word(q, k, [&](const Word& w) { gaps.push_back(w); });

  for (const auto& [u, pu] : windows) {
    for (const auto& [v, pv] : windows) {
      BigRational lhs = 0;
      for (const auto& w : gaps) lhs += measure.prob(u + w + v);
      const BigRational rhs = pu * pv;
      ++report.pairs_checked;
      if (lhs != rhs && report.failures++ == 0) report.witness = DependenceWitness{u, v, lhs, rhs};
    }
  }
  return report;
}

bool check_conditional(std::size_t n) {
  const CylinderMeasure p3(3);
  const CylinderMeasure p4(4);
  BigRational no_fours = 0;
  for_each_word(3, n, [&](const Word& x) { no_fours += p4.prob(Word(4, {x.begin(), x.end()})); });
  bool ok = true;
  for_each_word(3, n, [&](const Word& x) {
    if (p3.prob(x) * no_fours != p4.prob(Word(4, {x.begin(), x.end()}))) ok = false;
  });
  return ok;
}

BinaryPattern BinaryPattern::parse(std::string_view text) {
  std::vector<Cell> cells;
  for (char c : text) {
    switch (c) {
      case '0': cells.push_back(Cell::Zero); break;
      case '1': cells.push_back(Cell::One); break;
      case '*': cells.push_back(Cell::Any); break;
      case ',':
      case ' ': break;
      default: throw std::invalid_argument("malformed pattern: '" + std::string(text) + "'");
    }
  }
  return BinaryPattern(std::move(cells));
}

BinaryPattern BinaryPattern::zeros(std::size_t n) { return BinaryPattern(std::vector<Cell>(n, Cell::Zero)); }

std::string BinaryPattern::str() const {
  std::string out;
  for (auto c : cells_) out += static_cast<char>(c);
  return out;
}

BinaryPattern BinaryPattern::operator+(const BinaryPattern& rhs) const {
  auto cells = cells_;
  cells.insert(cells.end(), rhs.cells_.begin(), rhs.cells_.end());
  return BinaryPattern(std::move(cells));
}

BigRational single_color_prob(int q, const BinaryPattern& u) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  const std::size_t n = u.size();
  BuildingCount total = 0;
  std::vector<Color> word;
  word.reserve(n);
  thread_local BuildingCounter counter;
  std::function<void()> rec = [&] {
    const std::size_t i = word.size();
    if (i == n) {
      total += counter.count(std::span<const Color>(word));
      return;
    }
    for (int c = 1; c <= q; ++c) {
      if (!word.empty() && word.back() == c) continue;
      if (u[i] == BinaryPattern::Cell::One && c != 1) continue;
      if (u[i] == BinaryPattern::Cell::Zero && c == 1) continue;
      word.push_back(static_cast<Color>(c));
      rec();
      word.pop_back();
    }
  };
  rec();
  return make_rational(total, total_buildings(q, n));
}

std::optional<std::size_t> RenewalSeries::first_negative() const {
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (sgn(coefficients[i]) < 0) return i;
  }
  return std::nullopt;
}

RenewalSeries renewal_series(const BigRational& p, std::size_t n_max) {
  if (sgn(p) <= 0 || p > 1) throw std::invalid_argument("renewal marginal must lie in (0, 1]");
  RenewalSeries out{p, std::vector<BigRational>(n_max + 1, BigRational(0))};
  auto& g = out.coefficients;
  for (std::size_t n = 2; n <= n_max; ++n) {
    g[n] = g[n - 1] - p * g[n - 2];
    if (n == 2) g[n] += p;
  }
  return out;
}

std::vector<BigInt> renewal_coefficient_polynomial(std::size_t n) {
  // Same recurrence as renewal_series with polynomials in p.
  std::vector<std::vector<BigInt>> g(std::max<std::size_t>(n + 1, 3));
  g[0] = {0};
  g[1] = {0};
  for (std::size_t k = 2; k <= n; ++k) {
    const auto& a = g[k - 1];
    const auto& b = g[k - 2];
    std::vector<BigInt> next(std::max(a.size(), b.size() + 1), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) next[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) next[i + 1] -= b[i];
    if (k == 2) next[1] += 1;
    while (next.size() > 1 && next.back() == 0) next.pop_back();
    g[k] = std::move(next);
  }
  return g[n];
}

RenewalStructureReport check_renewal_structure(std::size_t n) {
  RenewalStructureReport report;
  report.n = n;
  const BigRational p = make_rational(1, 4);
  const auto series = renewal_series(p, n + 1);

  // (a) renewal product over compositions; pattern length 1 + sum k_i <= n.
  std::vector<std::size_t> parts;
  std::function<void(std::size_t)> compose = [&](std::size_t length) {
    std::vector<BinaryPattern::Cell> cells{BinaryPattern::Cell::One};
    BigRational expected = p;
    for (auto k : parts) {
      cells.insert(cells.end(), k - 1, BinaryPattern::Cell::Zero);
      cells.push_back(BinaryPattern::Cell::One);
      expected *= series.coefficients[k];
    }
    const BinaryPattern pattern(std::move(cells));
    ++report.compositions_checked;
    if (const auto actual = single_color_prob(4, pattern); actual != expected) {
      report.failures.push_back("renewal product " + pattern.str() + ": " + to_string(actual) +
                                " != " + to_string(expected));
    }
    for (std::size_t k = 1; length + k <= n; ++k) {
      parts.push_back(k);
      compose(length + k);
      parts.pop_back();
    }
  };
  if (n >= 1) compose(1);

  // (b) every {0,1,*} pattern against the fair-bit descent process.
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<BinaryPattern::Cell> cells(len, BinaryPattern::Cell::Zero);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == len) {
        const BinaryPattern pattern(cells);
        ++report.patterns_checked;
        const auto lhs = single_color_prob(4, pattern);
        const auto rhs = fair_bit_descent_prob(pattern);
        if (lhs != rhs) {
          report.failures.push_back("descent law " + pattern.str() + ": " + to_string(lhs) + " != " +
                                    to_string(rhs));
        }
        return;
      }
      for (auto c : {BinaryPattern::Cell::Zero, BinaryPattern::Cell::One, BinaryPattern::Cell::Any}) {
        cells[i] = c;
        rec(i + 1);
      }
    };
    rec(0);
  }
  return report;
}

BigRational fair_bit_descent_prob(const BinaryPattern& u) {
  const std::size_t bits = u.size() + 1;
  if (bits > 40) throw std::invalid_argument("pattern too long for exhaustive fair-bit oracle");
  std::uint64_t hits = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    bool match = true;
    for (std::size_t i = 0; i < u.size() && match; ++i) {
      const bool b_i = (mask >> i) & 1;
      const bool b_next = (mask >> (i + 1)) & 1;
      const bool descent = b_i && !b_next;
      if (u[i] == BinaryPattern::Cell::One) match = descent;
      if (u[i] == BinaryPattern::Cell::Zero) match = !descent;
    }
    hits += match;
  }
  return make_rational(BigInt(static_cast<unsigned long>(hits)), pow_int(2, static_cast<unsigned>(bits)));
}

bool QuarterBoundReport::passed() const noexcept {
  return quarter_nonnegative && third_first_negative == std::size_t{8} && third_value == make_rational(-1, 81) &&
         probe_first_negative.has_value();
}

QuarterBoundReport check_quarter_bound(const BigRational& probe, std::size_t n_max) {
  QuarterBoundReport report;
  report.quarter_nonnegative = !renewal_series(make_rational(1, 4), n_max).first_negative().has_value();

  const auto third = renewal_series(make_rational(1, 3), n_max);
  report.third_first_negative = third.first_negative();
  if (report.third_first_negative) report.third_value = third.coefficients[*report.third_first_negative];

  report.probe_p = probe;
  const auto probed = renewal_series(probe, n_max);
  report.probe_first_negative = probed.first_negative();
  if (report.probe_first_negative) report.probe_value = probed.coefficients[*report.probe_first_negative];
  return report;
}

}  // namespace findep
