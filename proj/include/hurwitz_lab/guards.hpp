#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz_lab {

/// Hard upper bound imposed by the packed permutation representation.
inline constexpr int kMaxDegree = 16;

/// Raised when a request exceeds a configured size guard. Guards are never
/// enforced by silently truncating output.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Size limits for the exponential parts of the library.
struct Guards {
  int max_dp_degree = 6;
  int max_brute_degree = 4;
  int max_brute_steps = 8;
  int max_orbit_steps = 8;
  int max_genus = 3;
  int max_cayley_degree = 6;

  /// True when any limit is raised above the defaults.
  bool exceeds_defaults() const {
    Guards d;
    return max_dp_degree > d.max_dp_degree ||
           max_brute_degree > d.max_brute_degree ||
           max_brute_steps > d.max_brute_steps ||
           max_orbit_steps > d.max_orbit_steps || max_genus > d.max_genus ||
           max_cayley_degree > d.max_cayley_degree;
  }
};

namespace detail {

inline void require_guard(bool ok, const std::string& what) {
  if (!ok) throw GuardError("size guard exceeded: " + what);
}

}  // namespace detail

}  // namespace hurwitz_lab
