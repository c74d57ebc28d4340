#pragma once

// Double Hurwitz numbers (monotone and classical) and the correspondence
// between monotone transitive walks and sorted identity-based loops decorated
// with two colour sets.
//
// H_g(alpha, beta) counts transitive walks of r_g(alpha, beta) steps starting
// at any permutation of type alpha and ending at a permutation of type beta.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz_lab/counter.hpp"
#include "hurwitz_lab/exact.hpp"
#include "hurwitz_lab/guards.hpp"
#include "hurwitz_lab/permutation.hpp"
#include "hurwitz_lab/sort_action.hpp"
#include "hurwitz_lab/walk.hpp"

namespace hurwitz_lab {

enum class HurwitzVariant { monotone, classical };

inline std::string to_string(HurwitzVariant v) {
  return v == HurwitzVariant::monotone ? "monotone" : "classical";
}

struct HurwitzQuery {
  int genus = 0;
  CycleType alpha;
  CycleType beta;
  HurwitzVariant variant = HurwitzVariant::monotone;
  bool colour_refined = false;
};

/// r_g(alpha, beta) = 2g - 2 + l(alpha) + l(beta).
inline int step_count(int g, const CycleType& alpha, const CycleType& beta) {
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  if (alpha.degree() != beta.degree()) throw std::invalid_argument("alpha and beta differ in degree");
  int r = 2 * g - 2 + alpha.length() + beta.length();
  if (r < 0) throw std::invalid_argument("negative step count");
  return r;
}

namespace detail {

inline void check_genus(int g, const Guards& guards) {
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  require_guard(g <= guards.max_genus, "genus " + std::to_string(g) + " > " +
                                           std::to_string(guards.max_genus));
}

inline WalkMode mode_of(HurwitzVariant v) {
  return v == HurwitzVariant::monotone ? WalkMode::monotone : WalkMode::any;
}

/// Fills `table` with H_g(alpha, beta) for one alpha and every beta in `betas`,
/// using a single counter seeded at every permutation of type alpha.
inline void add_row(CountTable& table, int g, const CycleType& alpha,
                    const std::vector<CycleType>& betas, HurwitzVariant variant, bool refined,
                    const Guards& guards) {
  std::map<int, std::vector<CycleType>> by_length;
  for (const auto& beta : betas) by_length[step_count(g, alpha, beta)].push_back(beta);

  WalkCounter counter(alpha.degree(), {mode_of(variant), true, refined}, guards);
  for (const auto& rho : permutations_of_type(alpha)) counter.seed(rho);
  for (const auto& [r, wanted] : by_length) {
    counter.advance_to(r);
    const auto layer = counter.by_end_type();
    for (const auto& beta : wanted)
      for (const auto& [key, count] : layer)
        if (key.first == beta) table.add({g, alpha, beta, key.second}, count);
  }
}

}  // namespace detail

inline CountTable double_hurwitz(const HurwitzQuery& q, const Guards& guards = {}) {
  detail::check_genus(q.genus, guards);
  step_count(q.genus, q.alpha, q.beta);
  CountTable table;
  detail::add_row(table, q.genus, q.alpha, {q.beta}, q.variant, q.colour_refined, guards);
  return table;
}

/// H_g(alpha, beta) for all alpha, beta partitions of d.
inline CountTable hurwitz_table(int g, int d, HurwitzVariant variant, bool refined,
                                const Guards& guards = {}) {
  detail::check_genus(g, guards);
  if (d < 1) throw std::invalid_argument("degree must be positive");
  const auto types = partitions_of(d);
  CountTable table;
  for (const auto& alpha : types) detail::add_row(table, g, alpha, types, variant, refined, guards);
  return table;
}

/// Sum of monotone H_g(alpha, beta) over all alpha, beta partitions of d.
inline BigInt monotone_total(int g, int d, const Guards& guards = {}) {
  return hurwitz_table(g, d, HurwitzVariant::monotone, false, guards).total();
}

/// Monotone H_g(1^d, 1^d; c) by number c of distinct colours. The empty loop
/// (d = 1, g = 0) is recorded at c = 0.
inline std::map<int, BigInt> simple_colour_refined(int g, int d, const Guards& guards = {}) {
  const auto trivial = CycleType::trivial(d);
  auto table = double_hurwitz({g, trivial, trivial, HurwitzVariant::monotone, true}, guards);
  std::map<int, BigInt> out;
  for (const auto& [key, count] : table.cells()) out[key.colours] += count;
  return out;
}

/// A sorted identity-based loop together with the colour sets of the two
/// strict factorizations it was built from.
struct LoopEncoding {
  Walk loop;
  std::set<int> c_rho;
  std::set<int> c_sigma;

  bool operator==(const LoopEncoding&) const = default;
};

struct DecodedWalk {
  Walk walk;
  CycleType alpha;
  CycleType beta;

  bool operator==(const DecodedWalk&) const = default;
};

namespace detail {

inline std::set<int> colour_set(const Walk& w) {
  std::set<int> out;
  for (auto tau : w.steps) out.insert(tau.colour());
  return out;
}

inline std::map<int, int> colour_multiplicities(const Walk& w) {
  std::map<int, int> out;
  for (auto tau : w.steps) ++out[tau.colour()];
  return out;
}

}  // namespace detail

/// Prepends the strict factorization of the start, appends the strict
/// factorization of the end in reverse, then sorts the resulting loop.
inline LoopEncoding encode_to_loop(const Walk& w, const CycleType& alpha, const CycleType& beta,
                                   int g) {
  if (!is_monotone(w)) throw std::invalid_argument("encode: walk is not monotone");
  if (!is_transitive(w)) throw std::invalid_argument("encode: walk is not transitive");
  const Permutation sigma = end_point(w);
  if (cycle_type(w.start) != alpha || cycle_type(sigma) != beta)
    throw std::invalid_argument("encode: walk does not match the cycle types");
  if (w.length() != step_count(g, alpha, beta))
    throw std::invalid_argument("encode: walk length is not r_g(alpha, beta)");

  const Walk head = strictly_monotone_factorization(w.start);
  const Walk tail = strictly_monotone_factorization(sigma);
  std::vector<Transposition> steps = head.steps;
  steps.insert(steps.end(), w.steps.begin(), w.steps.end());
  steps.insert(steps.end(), tail.steps.rbegin(), tail.steps.rend());

  const int d = w.degree();
  Walk loop(Permutation::identity(d), std::move(steps));
  if (loop.length() != 2 * g - 2 + 2 * d) throw std::logic_error("encode: loop length mismatch");
  return {apply_sort(loop).sorted, detail::colour_set(head), detail::colour_set(tail)};
}

/// Inverse of encode_to_loop. Returns nullopt exactly when some colour lies in
/// both sets but occurs only once in the loop. Throws on structurally invalid
/// input (loop not sorted, not identity-based, or sets not drawn from its colours).
inline std::optional<DecodedWalk> decode_from_loop(const LoopEncoding& e) {
  const Walk& loop = e.loop;
  const int d = loop.degree();
  if (!loop.start.is_identity() || !end_point(loop).is_identity())
    throw std::invalid_argument("decode: not an identity-based loop");
  if (!is_monotone(loop)) throw std::invalid_argument("decode: loop is not sorted");
  auto multiplicity = detail::colour_multiplicities(loop);
  for (int c : e.c_rho)
    if (!multiplicity.count(c)) throw std::invalid_argument("decode: C_rho colour absent from loop");
  for (int c : e.c_sigma)
    if (!multiplicity.count(c)) throw std::invalid_argument("decode: C_sigma colour absent from loop");

  for (int c : e.c_rho)
    if (e.c_sigma.count(c) && multiplicity[c] < 2) return std::nullopt;

  // Target spectrum: C_rho ascending, the remaining colours ascending, C_sigma descending.
  Spectrum target(e.c_rho.begin(), e.c_rho.end());
  for (int c : e.c_rho) --multiplicity[c];
  for (int c : e.c_sigma) --multiplicity[c];
  for (const auto& [c, m] : multiplicity) target.insert(target.end(), m, c);
  target.insert(target.end(), e.c_sigma.rbegin(), e.c_sigma.rend());

  const Walk unsorted = move_to_spectrum(loop, target);
  const auto head_len = static_cast<std::ptrdiff_t>(e.c_rho.size());
  const auto tail_len = static_cast<std::ptrdiff_t>(e.c_sigma.size());
  const auto& steps = unsorted.steps;

  Walk head(Permutation::identity(d), {steps.begin(), steps.begin() + head_len});
  const Permutation rho = end_point(head);
  Walk middle(rho, {steps.begin() + head_len, steps.end() - tail_len});
  const Permutation sigma = end_point(middle);
  return DecodedWalk{middle, cycle_type(rho), cycle_type(sigma)};
}

/// Number of (C_rho, C_sigma) pairs that decode: the product over distinct
/// colours of 4 if the colour repeats and 3 otherwise.
inline BigInt valid_pair_count(const Walk& loop) {
  BigInt count = 1;
  for (const auto& [c, m] : detail::colour_multiplicities(loop)) count *= (m >= 2 ? 4 : 3);
  return count;
}

/// valid_pair_count by direct trial of all 4^c subset pairs through decode_from_loop.
inline BigInt count_decodable_pairs(const Walk& loop) {
  const std::set<int> colours = detail::colour_set(loop);
  const std::vector<int> list(colours.begin(), colours.end());
  const std::size_t c = list.size();
  BigInt count = 0;
  for (std::size_t a = 0; a < (std::size_t{1} << c); ++a) {
    for (std::size_t b = 0; b < (std::size_t{1} << c); ++b) {
      LoopEncoding e{loop, {}, {}};
      for (std::size_t i = 0; i < c; ++i) {
        if (a >> i & 1) e.c_rho.insert(list[i]);
        if (b >> i & 1) e.c_sigma.insert(list[i]);
      }
      if (decode_from_loop(e)) ++count;
    }
  }
  return count;
}

}  // namespace hurwitz_lab
