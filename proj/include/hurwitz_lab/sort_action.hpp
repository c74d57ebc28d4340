#pragma once

// The sorting action of S(r) on r-step walks.
//
// R_i exchanges steps i and i+1 and conjugates the step of higher colour by
// the step of lower colour, so the product of the two steps is unchanged.
// Steps of equal colour are left alone. The spectrum map intertwines R_i with
// the plain swap of positions i and i+1.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz_lab/exact.hpp"
#include "hurwitz_lab/guards.hpp"
#include "hurwitz_lab/permutation.hpp"
#include "hurwitz_lab/walk.hpp"

namespace hurwitz_lab {

/// Applies R_i in place; i is 1-based.
inline void apply_R_inplace(Walk& w, int i) {
  if (i < 1 || i >= w.length())
    throw std::out_of_range("R_" + std::to_string(i) + " undefined on a walk of length " +
                            std::to_string(w.length()));
  Transposition& first = w.steps[i - 1];
  Transposition& second = w.steps[i];
  if (first.colour() < second.colour()) {
    Transposition moved = conjugate_by(second, first);
    second = first;
    first = moved;
  } else if (first.colour() > second.colour()) {
    Transposition moved = conjugate_by(first, second);
    first = second;
    second = moved;
  }
}

inline Walk apply_R(Walk w, int i) {
  apply_R_inplace(w, i);
  return w;
}

/// Applies R_{word[0]}, then R_{word[1]}, and so on.
inline Walk apply_word(Walk w, const std::vector<int>& word) {
  for (int i : word) apply_R_inplace(w, i);
  return w;
}

struct SortResult {
  Walk sorted;
  /// Indices i of the R_i applied, in order. Only adjacent strict inversions
  /// are swapped, so this is a reduced word.
  std::vector<int> witness;
};

/// Stable insertion sort of the spectrum, carried out by the action.
inline SortResult apply_sort(const Walk& w) {
  SortResult out{w, {}};
  auto& steps = out.sorted.steps;
  for (int j = 1; j < static_cast<int>(steps.size()); ++j) {
    for (int k = j; k > 0 && steps[k - 1].colour() > steps[k].colour(); --k) {
      apply_R_inplace(out.sorted, k);
      out.witness.push_back(k);
    }
  }
  return out;
}

/// The orbit member whose spectrum is `target`, which must be a rearrangement
/// of the spectrum of w.
inline Walk move_to_spectrum(const Walk& w, const Spectrum& target) {
  Spectrum have = spectrum(w);
  Spectrum want = target;
  std::sort(have.begin(), have.end());
  std::sort(want.begin(), want.end());
  if (have != want) throw std::invalid_argument("target is not a rearrangement of the spectrum");
  // Sorting `target` by adjacent swaps gives a word u with S_u(target) sorted;
  // the reverse of u carries the sorted walk to the one with spectrum `target`.
  Spectrum scratch = target;
  std::vector<int> word;
  for (int j = 1; j < static_cast<int>(scratch.size()); ++j) {
    for (int k = j; k > 0 && scratch[k - 1] > scratch[k]; --k) {
      std::swap(scratch[k - 1], scratch[k]);
      word.push_back(k);
    }
  }
  std::reverse(word.begin(), word.end());
  return apply_word(apply_sort(w).sorted, word);
}

struct WalkOrbit {
  std::set<Walk> members;
  /// The unique monotone member.
  Walk representative;
};

/// Breadth-first closure of {w} under all R_i.
inline WalkOrbit orbit(const Walk& w, const Guards& guards = {}) {
  detail::require_guard(w.length() <= guards.max_orbit_steps,
                        "orbit length " + std::to_string(w.length()));
  WalkOrbit out;
  std::deque<Walk> frontier{w};
  out.members.insert(w);
  while (!frontier.empty()) {
    Walk current = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 1; i < current.length(); ++i) {
      Walk next = apply_R(current, i);
      if (out.members.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  out.representative = apply_sort(w).sorted;
  return out;
}

/// r! / prod m_c! for the colour multiplicities m_c of a spectrum.
inline BigInt spectrum_orbit_size(const Spectrum& colours) {
  std::map<int, int> multiplicity;
  for (int c : colours) ++multiplicity[c];
  BigInt size = factorial(static_cast<int>(colours.size()));
  for (const auto& [c, m] : multiplicity) size /= factorial(m);
  return size;
}

/// The unique walk from the identity to sigma with strictly increasing colours.
/// Its last step has colour m, the largest point moved by sigma, and partner
/// sigma(m); peeling that step fixes m and the rest follows recursively.
inline Walk strictly_monotone_factorization(const Permutation& sigma) {
  std::vector<Transposition> reversed;
  Permutation rest = sigma;
  for (int m = sigma.degree(); m >= 2; --m) {
    if (rest(m) == m) continue;
    Transposition tau(rest(m), m);
    reversed.push_back(tau);
    rest.multiply_right(tau);
  }
  return Walk(Permutation::identity(sigma.degree()),
              std::vector<Transposition>(reversed.rbegin(), reversed.rend()));
}

}  // namespace hurwitz_lab
