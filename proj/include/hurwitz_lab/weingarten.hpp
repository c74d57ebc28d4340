#pragma once

// Coefficients of the 1/N expansion of a unitary Weingarten function,
//   N^-d * sum_r (-1)^r w_r / N^r,
// where w_r counts r-step monotone walks (no transitivity condition) between
// permutations whose relative cycle type is the target type.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz_lab/counter.hpp"
#include "hurwitz_lab/exact.hpp"
#include "hurwitz_lab/guards.hpp"
#include "hurwitz_lab/permutation.hpp"

namespace hurwitz_lab {

struct WeingartenExpansion {
  int degree = 0;
  CycleType target_type;
  /// Unsigned walk counts w_0 .. w_rmax.
  std::vector<BigInt> coefficients;

  int r_max() const { return static_cast<int>(coefficients.size()) - 1; }
};

inline WeingartenExpansion expansion(int d, const CycleType& target_type, int r_max,
                                     const Guards& guards = {}) {
  if (target_type.degree() != d) throw std::invalid_argument("target type is not a partition of d");
  if (r_max < 0) throw std::invalid_argument("r_max must be non-negative");
  WeingartenExpansion e{d, target_type, {}};
  const Permutation target = Permutation::of_type(target_type);
  WalkCounter counter(d, {WalkMode::monotone, false, false}, guards);
  counter.seed(Permutation::identity(d));
  for (int r = 0; r <= r_max; ++r) {
    counter.advance_to(r);
    const auto ends = counter.by_end_point();
    auto it = ends.find(target);
    e.coefficients.push_back(it == ends.end() ? BigInt(0) : it->second);
  }
  return e;
}

struct WeingartenEvaluation {
  int N = 0;
  int r_max = 0;
  /// N^-d * sum_{r <= r_max} (-1)^r w_r / N^r, exact.
  Rational partial_sum;
  /// Ratio of the last two nonzero terms; heuristic.
  std::optional<double> observed_ratio;
  /// last term * ratio / (1 - ratio) when |ratio| < 1; heuristic.
  std::optional<double> tail_estimate;
};

inline WeingartenEvaluation evaluate(const WeingartenExpansion& e, int N, int r_max) {
  if (N < e.degree)
    throw std::domain_error("N = " + std::to_string(N) + " is below the degree " + std::to_string(e.degree));
  if (r_max < 0 || r_max > e.r_max()) throw std::invalid_argument("r_max outside the computed expansion");

  WeingartenEvaluation out{N, r_max, 0, std::nullopt, std::nullopt};
  const Rational inv_n(1, N);
  Rational scale = power(inv_n, e.degree);
  std::vector<Rational> nonzero;
  for (int r = 0; r <= r_max; ++r) {
    if (e.coefficients[r] != 0) {
      Rational term = scale * Rational(e.coefficients[r]);
      if (r % 2) term = -term;
      out.partial_sum += term;
      nonzero.push_back(term);
    }
    scale *= inv_n;
  }
  if (nonzero.size() >= 2) {
    const double last = to_double(nonzero.back());
    const double ratio = to_double(nonzero.back() / nonzero[nonzero.size() - 2]);
    out.observed_ratio = ratio;
    if (std::abs(ratio) < 1) out.tail_estimate = last * ratio / (1 - ratio);
  }
  return out;
}

}  // namespace hurwitz_lab
