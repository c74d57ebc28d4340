#pragma once

// Layered dynamic-programming walk counter.
//
// A state records the current position, the colour of the last step, the
// orbit partition generated so far and a colour tag (a bitmask of used colours
// in `any` mode, the number of distinct colours otherwise). Each call to
// step() extends every walk by one transposition. Unused components are held
// constant so that equivalent states merge.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hurwitz_lab/exact.hpp"
#include "hurwitz_lab/guards.hpp"
#include "hurwitz_lab/permutation.hpp"
#include "hurwitz_lab/walk.hpp"

namespace hurwitz_lab {

struct CountOptions {
  WalkMode mode = WalkMode::monotone;
  bool transitive_only = false;
  bool refine_colours = false;
};

/// Key of a CountTable cell. Fields that a query does not use hold -1 (genus,
/// colours) or an empty cycle type.
struct CountKey {
  int genus = -1;
  CycleType alpha;
  CycleType beta;
  int colours = -1;

  auto operator<=>(const CountKey&) const = default;
};

/// Exact non-negative counts keyed by (genus, alpha, beta, colour count).
class CountTable {
 public:
  void add(const CountKey& key, const BigInt& value) {
    if (value == 0) return;
    cells_[key] += value;
  }

  BigInt at(const CountKey& key) const {
    auto it = cells_.find(key);
    return it == cells_.end() ? BigInt(0) : it->second;
  }

  BigInt total() const {
    BigInt sum = 0;
    for (const auto& [key, value] : cells_) sum += value;
    return sum;
  }

  /// Non-zero cells in key order.
  const std::map<CountKey, BigInt>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }

 private:
  std::map<CountKey, BigInt> cells_;
};

class WalkCounter {
 public:
  WalkCounter(int degree, CountOptions options, const Guards& guards = {})
      : degree_(degree), options_(options) {
    if (degree < 1 || degree > kMaxDegree) throw std::invalid_argument("counter degree out of range");
    detail::require_guard(degree <= guards.max_dp_degree,
                          "DP degree " + std::to_string(degree) + " > " +
                              std::to_string(guards.max_dp_degree));
    generators_ = all_transpositions(degree);
  }

  /// Adds `weight` walks of length zero at `start`. Only valid before step().
  void seed(const Permutation& start, const BigInt& weight = 1) {
    if (start.degree() != degree_) throw std::invalid_argument("seed: degree mismatch");
    if (steps_ != 0) throw std::logic_error("seed after step");
    State state;
    state.position = start;
    state.orbits = options_.transitive_only ? OrbitPartition::cycles_of(start)
                                            : OrbitPartition::singletons(degree_);
    layer_[state] += weight;
  }

  void step() {
    Layer next;
    next.reserve(layer_.size() * 2);
    for (const auto& [state, count] : layer_) {
      for (auto tau : generators_) {
        const int colour = tau.colour();
        if (options_.mode == WalkMode::monotone && colour < state.last_colour) continue;
        if (options_.mode == WalkMode::strict && colour <= state.last_colour) continue;
        State out = state;
        out.position.multiply_right(tau);
        if (options_.transitive_only) out.orbits = state.orbits.merged(tau.s(), tau.t());
        if (options_.mode != WalkMode::any) out.last_colour = static_cast<std::uint8_t>(colour);
        if (options_.refine_colours) {
          if (options_.mode == WalkMode::any)
            out.colour_tag |= 1u << (colour - 2);
          else if (colour != state.last_colour)
            ++out.colour_tag;
        }
        next[out] += count;
      }
    }
    layer_ = std::move(next);
    ++steps_;
  }

  void advance_to(int r) {
    if (r < steps_) throw std::logic_error("counter cannot step backwards");
    while (steps_ < r) step();
  }

  int steps_taken() const { return steps_; }
  std::size_t state_count() const { return layer_.size(); }

  /// Counts in the current layer by (endpoint cycle type, colour count); the
  /// colour count is -1 when colours are not refined.
  std::map<std::pair<CycleType, int>, BigInt> by_end_type() {
    std::map<std::pair<CycleType, int>, BigInt> out;
    for (const auto& [state, count] : layer_) {
      if (options_.transitive_only && !state.orbits.is_single_block()) continue;
      out[{type_of(state.position), colour_count(state)}] += count;
    }
    return out;
  }

  /// Counts in the current layer by exact endpoint, colours aggregated.
  std::map<Permutation, BigInt> by_end_point() const {
    std::map<Permutation, BigInt> out;
    for (const auto& [state, count] : layer_) {
      if (options_.transitive_only && !state.orbits.is_single_block()) continue;
      out[state.position] += count;
    }
    return out;
  }

 private:
  struct State {
    Permutation position;
    OrbitPartition orbits;
    std::uint8_t last_colour = 0;
    std::uint32_t colour_tag = 0;

    bool operator==(const State&) const = default;
  };

  struct StateHash {
    std::size_t operator()(const State& s) const {
      std::uint64_t h = s.position.code() * 0x9E3779B97F4A7C15ull;
      h ^= s.orbits.code() + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
      h ^= (static_cast<std::uint64_t>(s.last_colour) << 32 | s.colour_tag) + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  using Layer = std::unordered_map<State, BigInt, StateHash>;

  int colour_count(const State& s) const {
    if (!options_.refine_colours) return -1;
    return options_.mode == WalkMode::any ? std::popcount(s.colour_tag)
                                          : static_cast<int>(s.colour_tag);
  }

  const CycleType& type_of(const Permutation& p) {
    auto [it, inserted] = type_cache_.try_emplace(p.code());
    if (inserted) it->second = cycle_type(p);
    return it->second;
  }

  int degree_;
  CountOptions options_;
  std::vector<Transposition> generators_;
  Layer layer_;
  int steps_ = 0;
  std::unordered_map<std::uint64_t, CycleType> type_cache_;
};

/// Walks of length r from rho whose endpoint has cycle type end_type, split by
/// number of distinct colours when refine_colours is set.
inline CountTable count_walks(const Permutation& rho, const CycleType& end_type, int r,
                              WalkMode mode, bool transitive_only, bool refine_colours,
                              const Guards& guards = {}) {
  if (r < 0) throw std::invalid_argument("count_walks: negative length");
  if (end_type.degree() != rho.degree()) throw std::invalid_argument("count_walks: degree mismatch");
  WalkCounter counter(rho.degree(), {mode, transitive_only, refine_colours}, guards);
  counter.seed(rho);
  counter.advance_to(r);
  CountTable table;
  const CycleType start_type = cycle_type(rho);
  for (const auto& [key, count] : counter.by_end_type()) {
    if (key.first != end_type) continue;
    table.add({-1, start_type, end_type, key.second}, count);
  }
  return table;
}

/// Number of r-step monotone walks from the identity to Permutation::of_type(target),
/// with no transitivity condition.
inline BigInt monotone_count_by_target_type(int d, int r, const CycleType& target,
                                            const Guards& guards = {}) {
  if (target.degree() != d) throw std::invalid_argument("target type is not a partition of d");
  if (r < 0) throw std::invalid_argument("negative length");
  WalkCounter counter(d, {WalkMode::monotone, false, false}, guards);
  counter.seed(Permutation::identity(d));
  counter.advance_to(r);
  const auto ends = counter.by_end_point();
  auto it = ends.find(Permutation::of_type(target));
  return it == ends.end() ? BigInt(0) : it->second;
}

}  // namespace hurwitz_lab
