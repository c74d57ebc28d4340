#pragma once

// Graphviz export of the transposition Cayley graph of S(d), each edge
// labelled by the colour (larger point) of its transposition.

#include <string>

#include "hurwitz_lab/guards.hpp"
#include "hurwitz_lab/permutation.hpp"

namespace hurwitz_lab {

inline std::string cayley_dot_export(int d, const Guards& guards = {}) {
  if (d < 1) throw std::invalid_argument("cayley: degree must be positive");
  detail::require_guard(d <= guards.max_cayley_degree,
                        "cayley degree " + std::to_string(d) + " > " +
                            std::to_string(guards.max_cayley_degree));
  const auto vertices = all_permutations(d);
  const auto generators = all_transpositions(d);

  std::string out = "graph S" + std::to_string(d) + " {\n";
  for (const auto& p : vertices) out += "  \"" + p.one_line() + "\";\n";
  // p * tau * tau = p, so each undirected edge is emitted from its smaller end.
  for (const auto& p : vertices) {
    for (auto tau : generators) {
      Permutation q = p * tau;
      if (p < q)
        out += "  \"" + p.one_line() + "\" -- \"" + q.one_line() +
               "\" [label=" + std::to_string(tau.colour()) + "];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace hurwitz_lab
