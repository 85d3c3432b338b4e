#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dmb/roots.hpp"

namespace dmb {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

/// Oriented edge from the lower to the higher canonical root index.
struct Edge {
  std::size_t tail;  // alpha(e)
  std::size_t head;  // beta(e)
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the r distinct roots, stored with the
/// orientation induced by canonical root order. Isolated vertices are kept.
class RootGraph {
 public:
  /// Throws GraphError naming the edge for loops, duplicates or
  /// out-of-range indices.
  static RootGraph orient(std::size_t vertex_count, std::span<const std::pair<std::size_t, std::size_t>> edges);
  static RootGraph orient(const EdgeList& edges, const RootSet& roots) {
    return orient(roots.distinct_count(), edges);
  }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& in_degrees() const { return in_degree_; }
  std::size_t in_degree(std::size_t j) const { return in_degree_[j]; }
  std::size_t total_degree(std::size_t j) const { return total_degree_[j]; }
  /// Tails of the edges finishing at j, in edge order.
  std::vector<std::size_t> incoming(std::size_t j) const;
  EdgeList unordered_edges() const;

  friend bool operator==(const RootGraph&, const RootGraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> in_degree_;
  std::vector<std::size_t> total_degree_;
};

struct Admissibility {
  bool cond1 = false;  // every edge goes from smaller to larger modulus
  bool cond2 = false;  // acyclic
  bool cond3 = false;  // in-degree at most one
  bool all() const { return cond1 && cond2 && cond3; }
};

/// Conditions of the classical theorem. cond1 is checked against root
/// moduli when roots are supplied; it holds by construction otherwise.
Admissibility check_classical_admissible(const RootGraph& g, const RootSet* roots = nullptr);

bool is_acyclic(const RootGraph& g);

/// min_j (in-degree + out-degree); 0 when some vertex is isolated.
std::size_t min_total_degree(const RootGraph& g);

enum class GraphPreset { path, star_max, complete, nearest_neighbor };

std::optional<GraphPreset> parse_preset(const std::string& name);
std::string preset_name(GraphPreset p);

/// path: i -- i+1; star_max: every vertex joined to r-1; complete;
/// nearest_neighbor: each vertex joined to its sep partner, deduplicated.
EdgeList preset_edges(GraphPreset preset, const RootSet& roots);
/// Presets that only need the vertex count (nearest_neighbor is rejected).
EdgeList preset_edges(GraphPreset preset, std::size_t vertex_count);

}  // namespace dmb
