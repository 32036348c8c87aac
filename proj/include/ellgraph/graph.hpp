#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ellgraph/errors.hpp"
#include "ellgraph/types.hpp"

namespace ellgraph {

struct Neighbor {
  VertexId vertex;
  double weight;  // a_{x,y} > 0, mirrored bit-exactly on the reverse edge
};

using EdgeSpec = std::tuple<VertexId, VertexId, double>;

// Undirected weighted graph without loops or multiple edges. Finite graphs
// are fully materialized at construction. Infinite graphs are backed by a
// generator and materialize lazily, one neighbor list at a time; only the
// finitely many vertices touched so far exist in memory.
//
// Instances share state through a handle, so copies are cheap and view the
// same materialization cache. Reads of materialized data are safe from any
// thread; materialization itself (ball growth) follows a single-writer
// contract and must be serialized by the caller.
class WeightedGraph {
 public:
  // Structural key of a generated vertex -> neighbor keys with weights.
  // Enumeration must be finite, deterministic, and symmetric in weight.
  using KeyNeighborFn =
      std::function<std::vector<std::pair<std::string, double>>(const std::string&)>;

  WeightedGraph() = default;

  // Errors: LoopEdge, DuplicateEdge, NonpositiveWeight.
  static WeightedGraph from_edges(const std::vector<EdgeSpec>& edges);

  // The integer lattice Z^d with constant edge weight. Declared bounds:
  // M = 2d, gamma = Gamma = weight.
  static WeightedGraph integer_lattice(int dimension, double weight = 1.0);

  // Infinite tree in which every vertex has the given valence.
  static WeightedGraph regular_tree(int degree, double weight = 1.0);

  // Custom generator over caller-chosen keys. `declared` may supply global
  // weight/valence bounds when the caller knows them.
  static WeightedGraph from_generator(KeyNeighborFn fn, std::string origin_key,
                                      std::string descriptor,
                                      std::optional<GeometryBounds> declared = {});

  bool is_finite() const;
  std::optional<std::size_t> finite_vertex_count() const;

  // Canonical origin: the generator's seed vertex, or the smallest id of a
  // finite graph. Used as the default exhaustion origin.
  VertexId origin() const;

  bool has_vertex(VertexId v) const;

  // Neighbor list of v; materializes it first if needed. Error: UnknownVertex.
  std::span<const Neighbor> neighbors(VertexId v) const;

  // Valence m(x). Materializes like neighbors().
  int valence(VertexId v) const;

  double weight(VertexId x, VertexId y) const;  // Error: NotAdjacent
  bool adjacent(VertexId x, VertexId y) const;

  // Structural label for reports: the generator key ("3,-1" on Z^2) or the
  // decimal id on finite graphs.
  std::string label(VertexId v) const;

  // Declared generator bounds when available, else bounds observed on the
  // materialized portion (valence counted only over complete neighbor lists).
  GeometryBounds bounds() const;
  GeometryBounds observed_bounds() const;

  std::size_t materialized_count() const;
  const std::vector<VertexId>& materialized_vertices() const;  // discovery order

  const std::string& descriptor() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

// Finite vertex set U with interior/boundary split against the ambient graph:
// x is interior iff every ambient neighbor of x lies in U.
class Region {
 public:
  // Ball {x : d(center,x) <= radius} via breadth-first expansion; vertices
  // come out in (distance, discovery) order. Error: UnknownVertex.
  static Region ball(const WeightedGraph& g, VertexId center, int radius);

  // Explicit vertex set (order kept, duplicates rejected).
  static Region of_vertices(const WeightedGraph& g, std::vector<VertexId> vertices);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<VertexId>& interior() const { return interior_; }
  const std::vector<VertexId>& boundary() const { return boundary_; }

  bool contains(VertexId v) const { return members_.count(v) > 0; }
  bool is_interior(VertexId v) const { return interior_set_.count(v) > 0; }

  // Distance from the ball center (ball-constructed regions only).
  std::optional<int> distance_to_center(VertexId v) const;

  bool interior_connected(const WeightedGraph& g) const;

  // Ball metadata; radius = -1 for explicit regions. `stabilized` means the
  // ball stopped growing strictly before the requested radius (finite
  // component exhausted).
  VertexId center = -1;
  int radius = -1;
  bool stabilized = false;

 private:
  void classify(const WeightedGraph& g);

  std::vector<VertexId> vertices_;
  std::vector<VertexId> interior_;
  std::vector<VertexId> boundary_;
  std::unordered_set<VertexId> members_;
  std::unordered_set<VertexId> interior_set_;
  std::unordered_map<VertexId, int> dist_;
};

// Combinatorial distance by breadth-first search, capped for infinite graphs.
// Returns nullopt when d(x,y) > cap. Error: UnknownVertex.
std::optional<int> distance(const WeightedGraph& g, VertexId x, VertexId y, int cap);

// Exhaustion V_n = ball(origin, n). Levels are nested by construction; the
// interior of every level is checked connected. On a disconnected finite
// graph the exhaustion silently restricts to the component of the origin and
// flags it.
class Exhaustion {
 public:
  Exhaustion(WeightedGraph g, VertexId origin);

  Region level(int n) const;
  bool restricted_to_component() const;  // materializes until stable; finite only
  VertexId origin() const { return origin_; }

 private:
  WeightedGraph graph_;
  VertexId origin_;
};

}  // namespace ellgraph
