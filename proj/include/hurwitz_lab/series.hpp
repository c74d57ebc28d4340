#pragma once

// Exact coefficient series for the fixed-genus generating functions, the
// 2F1(2/3, 4/3; 3/2; 27z/2) reference series, ratio/root diagnostics, and the
// colour-refined inequality report.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz_lab/exact.hpp"
#include "hurwitz_lab/guards.hpp"
#include "hurwitz_lab/hurwitz.hpp"

namespace hurwitz_lab {

struct CoefficientSeries {
  std::string label;
  /// Index of terms[0]: 1 for series in d, 0 for the hypergeometric series.
  int first_index = 1;
  std::vector<Rational> terms;

  int last_index() const { return first_index + static_cast<int>(terms.size()) - 1; }
  const Rational& term(int index) const { return terms.at(index - first_index); }
};

/// Term d is (sum over alpha, beta of monotone H_g(alpha, beta)) / d!.
inline CoefficientSeries fg_coefficients(int g, int d_max, const Guards& guards = {}) {
  if (d_max < 1) throw std::invalid_argument("d_max must be positive");
  detail::require_guard(d_max <= guards.max_dp_degree, "d_max " + std::to_string(d_max));
  CoefficientSeries s{"F_" + std::to_string(g), 1, {}};
  for (int d = 1; d <= d_max; ++d)
    s.terms.emplace_back(monotone_total(g, d, guards), factorial(d));
  return s;
}

/// Term d is monotone H_g(1^d, 1^d) / d!.
inline CoefficientSeries sg_coefficients(int g, int d_max, const Guards& guards = {}) {
  if (d_max < 1) throw std::invalid_argument("d_max must be positive");
  detail::require_guard(d_max <= guards.max_dp_degree, "d_max " + std::to_string(d_max));
  CoefficientSeries s{"S_" + std::to_string(g), 1, {}};
  for (int d = 1; d <= d_max; ++d) {
    const auto trivial = CycleType::trivial(d);
    BigInt simple = double_hurwitz({g, trivial, trivial, HurwitzVariant::monotone, false}, guards).total();
    s.terms.emplace_back(simple, factorial(d));
  }
  return s;
}

/// Term k is (2/3)_k (4/3)_k / ((3/2)_k k!) * (27/2)^k, built by the term ratio.
inline CoefficientSeries hypergeometric_coefficients(int k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be non-negative");
  const Rational a(2, 3), b(4, 3), c(3, 2), x(27, 2);
  CoefficientSeries s{"2F1(2/3,4/3;3/2;27z/2)", 0, {Rational(1)}};
  for (int k = 0; k < k_max; ++k)
    s.terms.push_back(s.terms.back() * (a + k) * (b + k) / ((c + k) * (k + 1)) * x);
  return s;
}

struct RatioEntry {
  int index;       ///< d
  Rational ratio;  ///< c_d / c_{d+1}
};

struct RootEntry {
  int index;        ///< d
  double estimate;  ///< |c_d|^(-1/d)
};

/// Heuristic radius indicators. Nothing here is a convergence claim.
struct RadiusDiagnostics {
  std::vector<RatioEntry> ratios;
  std::vector<RootEntry> root_estimates;
  /// Intercept of a least-squares fit ratio ~ A + B/d over the last `window`
  /// ratios; absent with fewer than two ratios in the window.
  std::optional<double> window_extrapolation;
};

inline RadiusDiagnostics radius_diagnostics(const CoefficientSeries& s, int window = 4) {
  int run = 0, best_run = 0;
  for (const auto& t : s.terms) {
    run = t != 0 ? run + 1 : 0;
    best_run = std::max(best_run, run);
  }
  if (best_run < 3) throw std::invalid_argument("radius_diagnostics needs three consecutive nonzero terms");

  RadiusDiagnostics out;
  for (int d = s.first_index; d < s.last_index(); ++d) {
    const Rational& now = s.term(d);
    const Rational& next = s.term(d + 1);
    if (now != 0 && next != 0) out.ratios.push_back({d, now / next});
  }
  for (int d = std::max(1, s.first_index); d <= s.last_index(); ++d) {
    const Rational& t = s.term(d);
    if (t == 0) continue;
    const double magnitude = std::abs(to_double(t));
    out.root_estimates.push_back({d, std::exp(-std::log(magnitude) / d)});
  }

  const int n = std::min<int>(window, static_cast<int>(out.ratios.size()));
  if (n >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = static_cast<int>(out.ratios.size()) - n; i < static_cast<int>(out.ratios.size()); ++i) {
      const double x = 1.0 / out.ratios[i].index;
      const double y = to_double(out.ratios[i].ratio);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    out.window_extrapolation = (sy - slope * sx) / n;
  }
  return out;
}

struct InequalityRow {
  int degree = 0;
  BigInt lower;   ///< sum_c 3^c H_g(1^d, 1^d; c)
  BigInt total;   ///< sum over alpha, beta of H_g(alpha, beta)
  BigInt upper;   ///< sum_c 4^c H_g(1^d, 1^d; c)
  BigInt simple;  ///< H_g(1^d, 1^d)
  BigInt bound;   ///< 4^d H_g(1^d, 1^d)
  bool two_sided_ok = false;
  bool bound_ok = false;
};

inline std::vector<InequalityRow> inequality_report(int g, int d_max, const Guards& guards = {}) {
  if (d_max < 1) throw std::invalid_argument("d_max must be positive");
  std::vector<InequalityRow> rows;
  for (int d = 1; d <= d_max; ++d) {
    InequalityRow row;
    row.degree = d;
    for (const auto& [c, count] : simple_colour_refined(g, d, guards)) {
      row.lower += power(BigInt(3), c) * count;
      row.upper += power(BigInt(4), c) * count;
      row.simple += count;
    }
    row.total = monotone_total(g, d, guards);
    row.bound = power(BigInt(4), d) * row.simple;
    row.two_sided_ok = row.lower <= row.total && row.total <= row.upper;
    row.bound_ok = row.total <= row.bound;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hurwitz_lab
