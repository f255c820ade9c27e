#include "findep/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "findep/buildings.hpp"
#include "findep/combinatorics.hpp"
#include "findep/hardcore.hpp"
#include "findep/lattice.hpp"
#include "findep/measure.hpp"
#include "findep/sampler.hpp"

namespace findep::acceptance {

namespace {

// (count - N p)^2 <= z^2 N p (1 - p), evaluated exactly.
bool within_sigma(std::uint64_t count, std::uint64_t trials, const BigRational& p, long z) {
  const BigRational n = static_cast<unsigned long>(trials);
  const BigRational dev = BigRational(static_cast<unsigned long>(count)) - n * p;
  return dev * dev <= BigRational(z * z) * n * p * (1 - p);
}

std::string fail_or(std::vector<std::string>& failures, const std::string& ok) {
  if (failures.empty()) return ok;
  std::string out = std::to_string(failures.size()) + " failure(s); first: " + failures.front();
  return out;
}

bool building_totals(std::string& detail) {
  std::vector<std::string> failures;
  std::size_t cases = 0;
  for (int q = 2; q <= 5; ++q) {
    for (std::size_t n = 1; n <= 8; ++n) {
      BuildingCount sum = 0;
      for_each_proper_word(q, n, [&](const Word& x) { sum += count_buildings(x); });
      ++cases;
      if (sum != total_buildings(q, n)) {
        failures.push_back("q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " + sum.get_str() +
                           " != " + total_buildings(q, n).get_str());
      }
    }
  }
  detail = fail_or(failures, std::to_string(cases) + " (q,n) totals match");
  return failures.empty();
}

bool oracle_equivalence(std::string& detail) {
  std::vector<std::string> failures;
  std::size_t words = 0;
  auto sweep = [&](int q, std::size_t max_n) {
    for (std::size_t n = 0; n <= max_n; ++n) {
      for_each_word(q, n, [&](const Word& x) {
        ++words;
        if (count_buildings(x) != count_buildings_oracle(x)) failures.push_back("x=" + x.str());
      });
    }
  };
  sweep(4, 6);
  sweep(3, 7);
  detail = fail_or(failures, std::to_string(words) + " words agree with permutation enumeration");
  return failures.empty();
}

bool identity_suite(std::string& detail) {
  std::vector<IdentityCheck> checks;
  for (int q = 2; q <= 5; ++q) checks.push_back(check_extension_identity(q, 5));
  checks.push_back(check_gap_identity(4, 6));
  checks.push_back(check_gap_identity(3, 5));
  for (int q = 2; q <= 6; ++q) checks.push_back(check_two_point_identity(q, 5));

  std::vector<std::string> failures;
  std::size_t cases = 0;
  for (const auto& c : checks) {
    cases += c.cases;
    if (!c.passed()) failures.push_back(c.name + ": " + c.first_failure);
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto gap = two_point_gap(5, n);
    if (sgn(gap.lhs) <= 0 || gap.lhs != gap.rhs) {
      failures.push_back("q=5 two-point gap not positive at n=" + std::to_string(n) + ": " + gap.lhs.get_str());
    }
  }
  detail = fail_or(failures, std::to_string(cases) + " identity cases; q=5 two-point gaps positive for n<=4");
  return failures.empty();
}

bool dependence(std::string& detail) {
  std::ostringstream out;
  bool ok = true;
  for (auto [q, k] : {std::pair{4, 1}, std::pair{3, 2}}) {
    const auto r = check_k_dependence(q, static_cast<std::size_t>(k), 3);
    out << "(" << q << "," << k << ") " << (r.passed() ? "holds" : "FAILS") << " on " << r.pairs_checked << " pairs; ";
    ok = ok && r.passed();
  }
  for (auto [q, k] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{5, 2}}) {
    const auto r = check_k_dependence(q, static_cast<std::size_t>(k), 3);
    if (r.passed() || !r.witness) {
      ok = false;
      out << "(" << q << "," << k << ") no witness; ";
    } else {
      out << "(" << q << "," << k << ") witness u=(" << r.witness->u.str() << ") v=(" << r.witness->v.str()
          << ") gap=" << to_string(r.witness->gap()) << "; ";
    }
  }
  detail = out.str();
  detail.resize(detail.size() - 2);
  return ok;
}

bool conditional_law(std::string& detail) {
  for (std::size_t n = 1; n <= 7; ++n) {
    if (!check_conditional(n)) {
      detail = "conditional law differs at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "P3 = P4 given no 4's for n=1..7";
  return true;
}

bool q_formula_equivalence(std::string& detail) {
  std::vector<std::string> failures;
  std::size_t exhaustive = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for_each_proper_word(4, n, [&](const Word& x) {
      ++exhaustive;
      const auto b = count_buildings(x);
      if (q_formula(x) != b || q_fast(x) != b) failures.push_back("x=" + x.str());
    });
  }
  SeededRng rng(kSeed);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng.below(12);
    std::vector<Color> s{static_cast<Color>(1 + rng.below(4))};
    while (s.size() < n) {
      const auto step = static_cast<Color>(1 + rng.below(3));
      s.push_back(static_cast<Color>((s.back() - 1 + step) % 4 + 1));
    }
    const Word x(4, std::move(s));
    BuildingCounter scoped;
    const auto b = scoped.count(x);
    if (q_formula(x) != b || q_fast(x) != b) failures.push_back("random x=" + x.str());
  }
  detail = fail_or(failures, std::to_string(exhaustive) + " exhaustive + 1000 random words agree");
  return failures.empty();
}

bool marginals(std::string& detail) {
  std::vector<std::string> failures;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& c : {check_row_marginal(n), check_building_marginal(n)}) {
      if (!c.passed()) failures.push_back(c.name + ": " + c.first_failure);
    }
  }
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto s = catalan_identity(n);
    if (s.lhs != s.rhs) failures.push_back("catalan n=" + std::to_string(n) + ": " + to_string(s.lhs));
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto s = curious_identity(n);
    if (s.lhs != s.rhs) failures.push_back("curious n=" + std::to_string(n));
  }
  detail = fail_or(failures, "row/building marginals n<=7, Catalan n<=9, curious n<=5");
  return failures.empty();
}

bool renewal(std::string& detail) {
  std::vector<std::string> failures;
  // p - 4p^2 + 3p^3 = p(1-p)(1-3p)
  if (renewal_coefficient_polynomial(7) != std::vector<BigInt>{0, 1, -4, 3}) failures.push_back("s^7 polynomial");
  for (auto p : {make_rational(1, 4), make_rational(1, 3), make_rational(1, 5), make_rational(2, 7),
                 make_rational(1, 10)}) {
    if (renewal_series(p, 7).coefficients[7] != p * (1 - p) * (1 - 3 * p)) failures.push_back("s^7 at " + to_string(p));
  }
  if (renewal_series(make_rational(1, 3), 8).coefficients[8] != make_rational(-1, 81)) failures.push_back("s^8 at 1/3");
  const auto quarter = renewal_series(make_rational(1, 4), 20);
  for (std::size_t n = 1; n <= 20; ++n) {
    if (quarter.coefficients[n] != make_rational(static_cast<long>(n) - 1, 1L << n)) {
      failures.push_back("p_" + std::to_string(n) + " at 1/4");
    }
  }
  const auto structure = check_renewal_structure(6);
  for (const auto& f : structure.failures) failures.push_back(f);
  detail = fail_or(failures, "coefficients exact; " + std::to_string(structure.compositions_checked) +
                                 " compositions, " + std::to_string(structure.patterns_checked) +
                                 " patterns match");
  return failures.empty();
}

bool one_color(std::string& detail) {
  std::vector<std::string> failures;
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto p = single_color_prob(4, BinaryPattern::zeros(n));
    if (p != make_rational(static_cast<long>(n) + 2, 1L << (n + 1))) failures.push_back("no-1 run n=" + std::to_string(n));
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    std::string pattern = "1";
    for (std::size_t i = 1; i < m; ++i) pattern += "*1";
    if (peak_prob(m) != single_color_prob(3, BinaryPattern::parse(pattern))) {
      failures.push_back("peak m=" + std::to_string(m));
    }
  }
  detail = fail_or(failures, "(n+2)/2^(n+1) for n<=8; peak laws for m<=3");
  return failures.empty();
}

bool hardcore_appendix(std::string& detail) {
  std::ostringstream out;
  bool ok = true;
  const auto results = ph_witnesses();
  for (const auto& r : results) {
    ok = ok && r.matches();
    out << "[";
    for (std::size_t i = 0; i < r.dims.size(); ++i) out << (i ? "x" : "") << r.dims[i];
    out << "] " << (r.matches() ? "match" : "MISMATCH") << " (" << r.memo_size << " sets); ";
  }
  ok = ok && results[1].negative() && results[2].negative();
  if (results[2].memo_size != kPublishedMemoSize3d) {
    ok = false;
    out << "3-d memo size " << results[2].memo_size << " != " << kPublishedMemoSize3d << "; ";
  }
  detail = out.str();
  detail.resize(detail.size() - 2);
  return ok;
}

bool coloring_bridge(std::string& detail) {
  const bool ok = coloring_hardcore_check(7);
  detail = ok ? "all 128 subsets of {1..7}" : "mismatch";
  return ok;
}

bool sampler_laws(std::string& detail) {
  std::vector<std::string> failures;
  for (int q : {3, 4}) {
    const CylinderMeasure measure(q);
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto law = insertion_law(q, n);
      for_each_word(q, n, [&](const Word& x) {
        const auto it = law.find(x);
        const BigRational mass = it == law.end() ? BigRational(0) : it->second;
        if (mass != measure.prob(x)) failures.push_back("insertion law q=" + std::to_string(q) + " x=" + x.str());
      });
    }
  }
  std::ostringstream out;
  for (int q : {3, 4}) {
    SeededRng rng(kSeed + static_cast<std::uint64_t>(q));
    const std::size_t trials = 100000;
    std::uint64_t accepted = 0;
    for (std::size_t t = 0; t < trials; ++t) accepted += rejection_trial(q, 6, rng).has_value();
    const auto p = rejection_acceptance_prob(q, 6);
    out << "q=" << q << " accepted " << accepted << "/" << trials << " (p=" << to_string(p) << "); ";
    if (!within_sigma(accepted, trials, p, 4)) failures.push_back("acceptance rate q=" + std::to_string(q));
  }
  SeededRng rng(kSeed);
  const auto tv = empirical_distance(4, 4, 1000000, rng);
  out << "TV=" << to_string(tv);
  if (!(tv < make_rational(1, 100))) failures.push_back("TV too large");
  detail = fail_or(failures, out.str());
  return failures.empty();
}

bool lattice(std::string& detail) {
  std::size_t bad = 0;
  std::map<std::pair<std::size_t, int>, std::uint64_t> counts;
  std::uint64_t vertices = 0;
  for (std::uint64_t b = 0; b < 1000; ++b) {
    const auto box = sample_box(2, 1, {8, 8}, kSeed + b);
    if (box.palette_size() != 16 || !verify_range(box, 1)) ++bad;
    for (std::size_t v = 0; v < box.vertex_count(); ++v) {
      for (std::size_t j = 0; j < box.components(); ++j) ++counts[{j, box.component(v, j)}];
    }
    vertices += box.vertex_count();
  }
  bool ok = bad == 0;
  for (const auto& [key, count] : counts) {
    if (!within_sigma(count, vertices, make_rational(1, 4), 3)) ok = false;
  }
  detail = std::to_string(bad) + " improper boxes of 1000; marginals over " + std::to_string(vertices) +
           " vertices " + (ok ? "within 3 sigma" : "OUT of range");
  return ok;
}

bool tree(std::string& detail) {
  std::vector<std::string> failures;
  for (int degree = 2; degree <= 5; ++degree) {
    if (tree_marginal(degree) != tree_marginal_by_enumeration(degree)) {
      failures.push_back("exact marginal at degree " + std::to_string(degree));
    }
  }
  SeededRng rng(kSeed);
  std::uint64_t interior = 0, ones = 0;
  std::size_t trees = 0;
  while (interior < 100000) {
    const auto sample = tree_hardcore(3, 10, rng);
    ++trees;
    if (!tree_config_is_independent(sample)) failures.push_back("dependent configuration");
    interior += sample.interior;
    ones += sample.interior_ones;
  }
  if (!within_sigma(ones, interior, tree_marginal(3), 3)) failures.push_back("empirical marginal outside 3 sigma");
  detail = fail_or(failures, std::to_string(ones) + "/" + std::to_string(interior) + " interior ones over " +
                                 std::to_string(trees) + " trees (exact 4/27)");
  return failures.empty();
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "building totals", 10, building_totals},
      {2, "oracle equivalence", 60, oracle_equivalence},
      {3, "identity suite", 0, identity_suite},
      {4, "dependence", 0, dependence},
      {5, "conditional law", 0, conditional_law},
      {6, "q-formula", 300, q_formula_equivalence},
      {7, "marginal identities", 0, marginals},
      {8, "renewal", 0, renewal},
      {9, "one-color consequences", 0, one_color},
      {10, "hard-core appendix reproduction", 900, hardcore_appendix},
      {11, "coloring/hard-core bridge", 0, coloring_bridge},
      {12, "sampler laws", 0, sampler_laws},
      {13, "lattice", 0, lattice},
      {14, "tree hard-core", 0, tree},
  };
  return all;
}

CriterionResult run_criterion(const Criterion& c) {
  CriterionResult r{c.id, c.name, false, {}, 0, c.time_limit_seconds};
  const auto start = std::chrono::steady_clock::now();
  try {
    r.passed = c.run(r.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.time_limit_seconds > 0 && r.seconds > c.time_limit_seconds) {
    r.passed = false;
    r.detail += " (exceeded time limit)";
  }
  return r;
}

std::vector<CriterionResult> run_all(const std::vector<int>& ids,
                                     const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  for (const auto& c : criteria()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), c.id) == ids.end()) continue;
    results.push_back(run_criterion(c));
    if (on_result) on_result(results.back());
  }
  return results;
}

std::string format_line(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s", r.seconds);
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + " (" + timing +
         "): " + r.detail;
}

}  // namespace findep::acceptance
