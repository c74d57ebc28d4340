#pragma once

// Walks on the transposition Cayley graph and the exhaustive enumerator that
// serves as ground truth for the dynamic-programming counter.

#include <algorithm>
#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz_lab/guards.hpp"
#include "hurwitz_lab/permutation.hpp"

namespace hurwitz_lab {

enum class WalkMode { any, monotone, strict };

inline std::string to_string(WalkMode mode) {
  switch (mode) {
    case WalkMode::any: return "any";
    case WalkMode::monotone: return "monotone";
    case WalkMode::strict: return "strict";
  }
  return "?";
}

/// Colours of the steps of a walk, in order.
using Spectrum = std::vector<int>;

/// Whether a spectrum is allowed under the given mode.
inline bool admits(WalkMode mode, const Spectrum& colours) {
  for (std::size_t i = 1; i < colours.size(); ++i) {
    if (mode == WalkMode::monotone && colours[i - 1] > colours[i]) return false;
    if (mode == WalkMode::strict && colours[i - 1] >= colours[i]) return false;
  }
  return true;
}

struct Walk {
  Permutation start;
  std::vector<Transposition> steps;

  Walk() = default;
  Walk(Permutation start_, std::vector<Transposition> steps_)
      : start(start_), steps(std::move(steps_)) {
    for (auto tau : steps)
      if (tau.t() > start.degree()) throw std::invalid_argument("walk step outside degree");
  }

  int degree() const { return start.degree(); }
  int length() const { return static_cast<int>(steps.size()); }

  auto operator<=>(const Walk&) const = default;

  std::string str() const {
    std::string out = start.one_line() + ":";
    for (auto tau : steps) out += tau.str();
    return out;
  }
};

/// start * steps[0] * ... * steps[r-1].
inline Permutation end_point(const Walk& w) {
  Permutation p = w.start;
  for (auto tau : w.steps) p.multiply_right(tau);
  return p;
}

inline Spectrum spectrum(const Walk& w) {
  Spectrum out;
  out.reserve(w.steps.size());
  for (auto tau : w.steps) out.push_back(tau.colour());
  return out;
}

inline int distinct_colours(const Walk& w) {
  std::set<int> seen;
  for (auto tau : w.steps) seen.insert(tau.colour());
  return static_cast<int>(seen.size());
}

inline bool is_monotone(const Walk& w) { return admits(WalkMode::monotone, spectrum(w)); }

inline bool is_transitive(const Walk& w) { return is_transitive(w.start, w.steps); }

/// Every r-step walk from rho admitted by mode (and transitive, if asked), in
/// lexicographic order of the step sequence.
inline std::vector<Walk> enumerate_walks_from(const Permutation& rho, int r, WalkMode mode,
                                              bool transitive_only, const Guards& guards = {}) {
  if (r < 0) throw std::invalid_argument("enumerate_walks: negative length");
  detail::require_guard(rho.degree() <= guards.max_brute_degree,
                        "brute-force degree " + std::to_string(rho.degree()));
  detail::require_guard(r <= guards.max_brute_steps, "brute-force steps " + std::to_string(r));

  const auto generators = all_transpositions(rho.degree());
  std::vector<Walk> out;
  std::vector<Transposition> steps;
  steps.reserve(r);

  auto rec = [&](auto&& self, int last_colour) -> void {
    if (static_cast<int>(steps.size()) == r) {
      if (!transitive_only || is_transitive(rho, steps)) out.emplace_back(rho, steps);
      return;
    }
    for (auto tau : generators) {
      if (mode == WalkMode::monotone && tau.colour() < last_colour) continue;
      if (mode == WalkMode::strict && tau.colour() <= last_colour) continue;
      steps.push_back(tau);
      self(self, tau.colour());
      steps.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// The walks of enumerate_walks_from that end at sigma.
inline std::vector<Walk> enumerate_walks(const Permutation& rho, const Permutation& sigma, int r,
                                         WalkMode mode, bool transitive_only,
                                         const Guards& guards = {}) {
  if (rho.degree() != sigma.degree()) throw std::invalid_argument("enumerate_walks: degree mismatch");
  if (r < 0) throw std::invalid_argument("enumerate_walks: negative length");
  // Parity: each step flips the sign.
  if ((r % 2 == 0) != (rho.sign() == sigma.sign())) return {};
  auto all = enumerate_walks_from(rho, r, mode, transitive_only, guards);
  std::erase_if(all, [&](const Walk& w) { return end_point(w) != sigma; });
  return all;
}

}  // namespace hurwitz_lab
