#pragma once

// Permutations of {1..d}, transpositions with their colour, cycle types and
// orbit partitions.
//
// Multiplication convention: products are applied left to right, so
// (p * q)(x) = q(p(x)). A walk step multiplies the current position on the
// right, i.e. the position after steps t1..tr is start * t1 * ... * tr.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz_lab/guards.hpp"

namespace hurwitz_lab {

class Transposition {
 public:
  /// Builds (a b) with the points stored in increasing order.
  Transposition(int a, int b) : s_(std::min(a, b)), t_(std::max(a, b)) {
    if (a == b) throw std::invalid_argument("transposition needs two distinct points");
    if (s_ < 1) throw std::invalid_argument("transposition points are 1-indexed");
  }

  int s() const { return s_; }
  int t() const { return t_; }
  /// The larger point; the edge label of the Cayley graph.
  int colour() const { return t_; }

  int operator()(int x) const { return x == s_ ? t_ : (x == t_ ? s_ : x); }

  auto operator<=>(const Transposition&) const = default;

  std::string str() const {
    return "(" + std::to_string(s_) + " " + std::to_string(t_) + ")";
  }

 private:
  int s_;
  int t_;
};

/// All transpositions of S(d) ordered lexicographically by (s, t).
inline std::vector<Transposition> all_transpositions(int d) {
  std::vector<Transposition> out;
  for (int s = 1; s <= d; ++s)
    for (int t = s + 1; t <= d; ++t) out.emplace_back(s, t);
  return out;
}

/// A partition of d stored as weakly decreasing parts.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 1) throw std::invalid_argument("cycle type parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  /// 1^d
  static CycleType trivial(int d) { return CycleType(std::vector<int>(d, 1)); }
  /// (d)
  static CycleType full_cycle(int d) { return CycleType(std::vector<int>{d}); }

  const std::vector<int>& parts() const { return parts_; }
  int degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  /// Sign of any permutation with this cycle type.
  int sign() const { return (degree() - length()) % 2 == 0 ? 1 : -1; }

  auto operator<=>(const CycleType&) const = default;

  /// Comma separated parts, e.g. "2,1,1".
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

 private:
  std::vector<int> parts_;
};

/// Parses "2,1,1", "1^3" or mixed forms such as "3,1^2".
inline CycleType parse_cycle_type(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string item;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad cycle type '" + text + "'");
    }
    if (used != s.size() || v < 1) throw std::invalid_argument("bad cycle type '" + text + "'");
    return v;
  };
  while (std::getline(in, item, ',')) {
    auto caret = item.find('^');
    if (caret == std::string::npos) {
      parts.push_back(to_int(item));
    } else {
      int part = to_int(item.substr(0, caret));
      int times = to_int(item.substr(caret + 1));
      parts.insert(parts.end(), times, part);
    }
  }
  if (parts.empty()) throw std::invalid_argument("empty cycle type");
  return CycleType(std::move(parts));
}

/// All partitions of d, in decreasing lexicographic order starting at (d).
inline std::vector<CycleType> partitions_of(int d) {
  std::vector<CycleType> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(d, d);
  return out;
}

/// A bijection of {1..d} in one-line form.
class Permutation {
 public:
  Permutation() = default;

  /// images[i-1] is the image of i. Throws unless the images form a bijection.
  explicit Permutation(const std::vector<int>& images) {
    const int d = static_cast<int>(images.size());
    if (d < 1 || d > kMaxDegree)
      throw std::invalid_argument("permutation degree must lie in 1.." + std::to_string(kMaxDegree));
    std::array<bool, kMaxDegree + 1> seen{};
    for (int v : images) {
      if (v < 1 || v > d || seen[v]) throw std::invalid_argument("images are not a bijection");
      seen[v] = true;
    }
    degree_ = static_cast<std::uint8_t>(d);
    for (int i = 0; i < d; ++i) images_[i] = static_cast<std::uint8_t>(images[i]);
  }

  static Permutation identity(int d) {
    std::vector<int> images(d);
    std::iota(images.begin(), images.end(), 1);
    return Permutation(images);
  }

  static Permutation from_transposition(int d, Transposition tau) {
    if (tau.t() > d) throw std::invalid_argument("transposition outside degree");
    Permutation p = identity(d);
    std::swap(p.images_[tau.s() - 1], p.images_[tau.t() - 1]);
    return p;
  }

  /// Builds a permutation from disjoint cycles; each cycle (a b c) maps a->b->c->a.
  static Permutation from_cycles(int d, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(d);
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(d + 1, false);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        int x = cycle[i];
        if (x < 1 || x > d || used[x]) throw std::invalid_argument("cycles are not disjoint");
        used[x] = true;
        images[x - 1] = cycle[(i + 1) % cycle.size()];
      }
    }
    return Permutation(images);
  }

  /// A fixed representative of a cycle type: consecutive runs (1..a1)(a1+1..)...
  static Permutation of_type(const CycleType& type) {
    const int d = type.degree();
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int part : type.parts()) {
      std::vector<int> cycle;
      for (int k = 0; k < part; ++k) cycle.push_back(next++);
      cycles.push_back(std::move(cycle));
    }
    return from_cycles(d, cycles);
  }

  int degree() const { return degree_; }
  int operator()(int x) const { return images_[x - 1]; }

  std::vector<int> images() const {
    return std::vector<int>(images_.begin(), images_.begin() + degree_);
  }

  Permutation inverse() const {
    Permutation out = *this;
    for (int i = 0; i < degree_; ++i) out.images_[images_[i] - 1] = static_cast<std::uint8_t>(i + 1);
    return out;
  }

  bool is_identity() const {
    for (int i = 0; i < degree_; ++i)
      if (images_[i] != i + 1) return false;
    return true;
  }

  /// Right multiplication by a transposition: the new image of x is tau(old image of x).
  void multiply_right(Transposition tau) {
    const auto s = static_cast<std::uint8_t>(tau.s());
    const auto t = static_cast<std::uint8_t>(tau.t());
    for (int i = 0; i < degree_; ++i) {
      if (images_[i] == s)
        images_[i] = t;
      else if (images_[i] == t)
        images_[i] = s;
    }
  }

  Permutation operator*(Transposition tau) const {
    Permutation out = *this;
    out.multiply_right(tau);
    return out;
  }

  int sign() const;

  /// Concatenated images ("2314"); images above 9 are separated by spaces.
  std::string one_line() const {
    std::string out;
    for (int i = 0; i < degree_; ++i) {
      if (degree_ > 9 && i) out += ' ';
      out += std::to_string(images_[i]);
    }
    return out;
  }

  /// Four bits per image; unique for a fixed degree.
  std::uint64_t code() const {
    std::uint64_t c = 0;
    for (int i = 0; i < degree_; ++i) c |= static_cast<std::uint64_t>(images_[i] - 1) << (4 * i);
    return c;
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::uint8_t degree_ = 0;
  std::array<std::uint8_t, kMaxDegree> images_{};
};

/// Left-to-right product: compose(p, q)(x) = q(p(x)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> images(p.degree());
  for (int x = 1; x <= p.degree(); ++x) images[x - 1] = q(p(x));
  return Permutation(images);
}

inline CycleType cycle_type(const Permutation& p) {
  std::vector<int> parts;
  std::array<bool, kMaxDegree + 1> seen{};
  for (int x = 1; x <= p.degree(); ++x) {
    if (seen[x]) continue;
    int length = 0;
    for (int y = x; !seen[y]; y = p(y)) {
      seen[y] = true;
      ++length;
    }
    parts.push_back(length);
  }
  return CycleType(std::move(parts));
}

inline int Permutation::sign() const { return cycle_type(*this).sign(); }

/// by * inner * by, returned in canonical order.
inline Transposition conjugate_by(Transposition inner, Transposition by) {
  return Transposition(by(inner.s()), by(inner.t()));
}

/// Every permutation of degree d in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(int d) {
  std::vector<int> images(d);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

inline std::vector<Permutation> permutations_of_type(const CycleType& type) {
  std::vector<Permutation> out;
  for (auto& p : all_permutations(type.degree()))
    if (cycle_type(p) == type) out.push_back(p);
  return out;
}

/// A set partition of {1..d}, stored as a restricted growth string: the block
/// label of point x, with blocks numbered in order of their smallest element.
class OrbitPartition {
 public:
  OrbitPartition() = default;

  static OrbitPartition singletons(int d) {
    if (d < 1 || d > kMaxDegree) throw std::invalid_argument("orbit partition degree out of range");
    OrbitPartition out;
    out.degree_ = static_cast<std::uint8_t>(d);
    for (int i = 0; i < d; ++i) out.labels_[i] = static_cast<std::uint8_t>(i);
    return out;
  }

  /// The partition into cycles of p.
  static OrbitPartition cycles_of(const Permutation& p) {
    OrbitPartition out = singletons(p.degree());
    for (int x = 1; x <= p.degree(); ++x) out = out.merged(x, p(x));
    return out;
  }

  int degree() const { return degree_; }
  int block_of(int x) const { return labels_[x - 1]; }
  bool same_block(int x, int y) const { return labels_[x - 1] == labels_[y - 1]; }

  int block_count() const {
    int top = -1;
    for (int i = 0; i < degree_; ++i) top = std::max<int>(top, labels_[i]);
    return top + 1;
  }

  bool is_single_block() const {
    for (int i = 0; i < degree_; ++i)
      if (labels_[i] != 0) return false;
    return true;
  }

  /// Blocks as sorted point lists, ordered by smallest element.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(block_count());
    for (int x = 1; x <= degree_; ++x) out[labels_[x - 1]].push_back(x);
    return out;
  }

  /// Joins the blocks of a and b. Labels stay a restricted growth string.
  OrbitPartition merged(int a, int b) const {
    int la = labels_[a - 1];
    int lb = labels_[b - 1];
    if (la == lb) return *this;
    if (la > lb) std::swap(la, lb);
    OrbitPartition out = *this;
    for (int i = 0; i < degree_; ++i) {
      if (out.labels_[i] == lb)
        out.labels_[i] = static_cast<std::uint8_t>(la);
      else if (out.labels_[i] > lb)
        --out.labels_[i];
    }
    return out;
  }

  std::uint64_t code() const {
    std::uint64_t c = 0;
    for (int i = 0; i < degree_; ++i) c |= static_cast<std::uint64_t>(labels_[i]) << (4 * i);
    return c;
  }

  auto operator<=>(const OrbitPartition&) const = default;

 private:
  std::uint8_t degree_ = 0;
  std::array<std::uint8_t, kMaxDegree> labels_{};
};

inline OrbitPartition merge(const OrbitPartition& orbits, Transposition tau) {
  if (tau.t() > orbits.degree()) throw std::invalid_argument("merge: transposition outside degree");
  return orbits.merged(tau.s(), tau.t());
}

/// True iff start together with the steps generates a transitive subgroup.
/// The endpoint is a product of these generators, so it adds nothing.
inline bool is_transitive(const Permutation& start, std::span<const Transposition> steps) {
  OrbitPartition orbits = OrbitPartition::cycles_of(start);
  for (auto tau : steps) orbits = merge(orbits, tau);
  return orbits.is_single_block();
}

}  // namespace hurwitz_lab
