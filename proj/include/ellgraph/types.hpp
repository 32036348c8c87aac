#pragma once

#include <cstdint>
#include <optional>

namespace ellgraph {

// Non-negative, stable for the lifetime of a graph instance. For generated
// graphs ids are assigned in breadth-first discovery order from the origin,
// so identical runs produce identical ids.
using VertexId = std::int64_t;

// Weight and valence bounds over a declared or materialized scope:
//   weight_sup = a = Gamma,  weight_inf = gamma,  valence_sup = M.
struct GeometryBounds {
  std::optional<double> weight_sup;
  std::optional<double> weight_inf;
  std::optional<int> valence_sup;
  bool declared = false;  // true when supplied globally by a generator
};

}  // namespace ellgraph
