#pragma once

// Exact verification suites run by `hurwitz-lab verify`.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "hurwitz_lab/hurwitz_lab.hpp"

namespace hurwitz_lab::cli {

using nlohmann::json;

struct IntRange {
  int lo = 0;
  int hi = 0;
};

struct VerifyReport {
  std::string suite;
  std::int64_t checks = 0;
  std::int64_t failure_count = 0;
  json failures = json::array();
  json rows = json::array();

  bool passed() const { return failure_count == 0; }

  void check(bool ok, const std::string& what, const std::string& detail) {
    ++checks;
    if (ok) return;
    ++failure_count;
    if (failures.size() < 100) failures.push_back({{"suite", suite}, {"check", what}, {"detail", detail}});
  }
};

inline VerifyReport verify_inequalities(IntRange genus, IntRange degree, const Guards& guards) {
  VerifyReport report{"inequalities"};
  for (int g = genus.lo; g <= genus.hi; ++g) {
    for (const auto& row : inequality_report(g, degree.hi, guards)) {
      if (row.degree < degree.lo) continue;
      const std::string where = "g=" + std::to_string(g) + " d=" + std::to_string(row.degree);
      report.check(row.two_sided_ok, "two_sided", where);
      report.check(row.bound_ok, "four_to_the_d", where);
      report.rows.push_back({{"genus", g},
                             {"degree", row.degree},
                             {"lower", to_decimal(row.lower)},
                             {"total", to_decimal(row.total)},
                             {"upper", to_decimal(row.upper)},
                             {"simple", to_decimal(row.simple)},
                             {"bound", to_decimal(row.bound)},
                             {"two_sided_ok", row.two_sided_ok},
                             {"bound_ok", row.bound_ok}});
    }
  }
  return report;
}

inline VerifyReport verify_closed_forms(IntRange degree, const Guards& guards) {
  VerifyReport report{"closedforms"};
  for (int d = std::max(1, degree.lo); d <= degree.hi; ++d) {
    const auto one = CycleType::trivial(d), full = CycleType::full_cycle(d);
    const BigInt mono = double_hurwitz({0, one, full, HurwitzVariant::monotone, false}, guards).total();
    const BigInt classic = double_hurwitz({0, one, full, HurwitzVariant::classical, false}, guards).total();
    // d!/d^2 C(2d-2, d-1) and d! d^(d-3), both integers.
    const BigInt mono_expected = factorial(d) * binomial(2 * d - 2, d - 1) / (BigInt(d) * d);
    const BigInt classic_expected = d >= 3 ? factorial(d) * power(BigInt(d), d - 3)
                                           : factorial(d) / power(BigInt(d), 3 - d);
    const std::string where = "d=" + std::to_string(d);
    report.check(mono == mono_expected, "monotone", where);
    report.check(classic == classic_expected, "classical", where);
    report.rows.push_back({{"degree", d},
                           {"monotone", to_decimal(mono)},
                           {"monotone_closed_form", to_decimal(mono_expected)},
                           {"classical", to_decimal(classic)},
                           {"classical_closed_form", to_decimal(classic_expected)}});
  }
  return report;
}

namespace detail {

inline void check_coxeter_on(VerifyReport& report, const Walk& w) {
  const int r = w.length();
  const Permutation end = end_point(w);
  const bool transitive = is_transitive(w);
  for (int i = 1; i < r; ++i) {
    const Walk moved = apply_R(w, i);
    report.check(apply_R(moved, i) == w, "involution", w.str() + " i=" + std::to_string(i));
    Spectrum swapped = spectrum(w);
    std::swap(swapped[i - 1], swapped[i]);
    report.check(spectrum(moved) == swapped, "equivariance", w.str() + " i=" + std::to_string(i));
    report.check(end_point(moved) == end && moved.start == w.start, "endpoints", w.str());
    report.check(is_transitive(moved) == transitive, "transitivity", w.str());
    if (i + 1 < r)
      report.check(apply_word(w, {i, i + 1, i}) == apply_word(w, {i + 1, i, i + 1}), "braid",
                   w.str() + " i=" + std::to_string(i));
    for (int j = i + 2; j < r; ++j)
      report.check(apply_word(w, {i, j}) == apply_word(w, {j, i}), "commutation",
                   w.str() + " i=" + std::to_string(i) + " j=" + std::to_string(j));
  }
}

}  // namespace detail

inline VerifyReport verify_coxeter(IntRange degree, IntRange steps, bool exhaustive,
                                   std::int64_t samples, std::uint64_t seed, const Guards& guards) {
  VerifyReport report{"coxeter"};
  if (exhaustive) {
    for (int d = std::max(1, degree.lo); d <= degree.hi; ++d)
      for (const auto& start : all_permutations(d))
        for (int r = steps.lo; r <= steps.hi; ++r)
          for (const auto& w : enumerate_walks_from(start, r, WalkMode::any, false, guards))
            detail::check_coxeter_on(report, w);
  } else {
    std::mt19937_64 rng(seed);
    for (std::int64_t n = 0; n < samples; ++n) {
      const int d = std::max(2, degree.lo) + static_cast<int>(rng() % (degree.hi - std::max(2, degree.lo) + 1));
      const int r = steps.lo + static_cast<int>(rng() % (steps.hi - steps.lo + 1));
      std::vector<int> images(d);
      std::iota(images.begin(), images.end(), 1);
      std::shuffle(images.begin(), images.end(), rng);
      const auto gens = all_transpositions(d);
      std::vector<Transposition> walk_steps;
      for (int i = 0; i < r; ++i) walk_steps.push_back(gens[rng() % gens.size()]);
      detail::check_coxeter_on(report, Walk(Permutation(images), walk_steps));
    }
  }
  return report;
}

inline VerifyReport verify_roundtrip(IntRange genus, IntRange degree, const Guards& guards) {
  VerifyReport report{"roundtrip"};
  for (int g = genus.lo; g <= genus.hi; ++g) {
    for (int d = std::max(1, degree.lo); d <= degree.hi; ++d) {
      BigInt walks = 0;
      for (const auto& alpha : partitions_of(d)) {
        for (const auto& beta : partitions_of(d)) {
          const int r = step_count(g, alpha, beta);
          for (const auto& rho : permutations_of_type(alpha)) {
            for (const auto& w : enumerate_walks_from(rho, r, WalkMode::monotone, true, guards)) {
              if (cycle_type(end_point(w)) != beta) continue;
              ++walks;
              auto back = decode_from_loop(encode_to_loop(w, alpha, beta, g));
              report.check(back && back->walk == w && back->alpha == alpha && back->beta == beta,
                           "round_trip", w.str());
            }
          }
        }
      }
      BigInt pairs = 0;
      const auto id = Permutation::identity(d);
      for (const auto& loop : enumerate_walks(id, id, 2 * g - 2 + 2 * d, WalkMode::monotone, true, guards)) {
        const BigInt formula = valid_pair_count(loop);
        report.check(formula == count_decodable_pairs(loop), "valid_pair_count", loop.str());
        pairs += formula;
      }
      const std::string where = "g=" + std::to_string(g) + " d=" + std::to_string(d);
      report.check(pairs == walks, "pairs_equal_walks", where);
      report.rows.push_back({{"genus", g}, {"degree", d}, {"walks", to_decimal(walks)}, {"pairs", to_decimal(pairs)}});
    }
  }
  return report;
}

inline VerifyReport verify_oracle(IntRange degree, IntRange steps, const Guards& guards) {
  VerifyReport report{"oracle"};
  for (int d = std::max(1, degree.lo); d <= degree.hi; ++d) {
    for (const auto& rho : all_permutations(d)) {
      for (auto mode : {WalkMode::any, WalkMode::monotone, WalkMode::strict}) {
        for (int r = steps.lo; r <= steps.hi; ++r) {
          for (bool transitive : {false, true}) {
            std::map<std::pair<CycleType, int>, BigInt> brute;
            for (const auto& w : enumerate_walks_from(rho, r, mode, transitive, guards))
              ++brute[{cycle_type(end_point(w)), distinct_colours(w)}];
            WalkCounter counter(d, {mode, transitive, true}, guards);
            counter.seed(rho);
            counter.advance_to(r);
            const auto fast = counter.by_end_type();
            report.check(fast == brute, "dp_equals_enumeration",
                         rho.one_line() + " r=" + std::to_string(r) + " mode=" + to_string(mode) +
                             " transitive=" + std::to_string(transitive));
          }
        }
      }
    }
  }
  return report;
}

}  // namespace hurwitz_lab::cli
