#include "dmb/graph.hpp"

#include <algorithm>
#include <set>

namespace dmb {

namespace {

std::string edge_str(std::size_t a, std::size_t b) {
  return "{" + std::to_string(a) + ", " + std::to_string(b) + "}";
}

}  // namespace

RootGraph RootGraph::orient(std::size_t vertex_count, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  RootGraph g;
  g.vertex_count_ = vertex_count;
  g.in_degree_.assign(vertex_count, 0);
  g.total_degree_.assign(vertex_count, 0);
  std::set<Edge> seen;
  for (const auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      throw GraphError("edge " + edge_str(a, b) + " has an index outside 0.." + std::to_string(vertex_count - 1));
    }
    if (a == b) throw GraphError("edge " + edge_str(a, b) + " is a loop");
    Edge e{std::min(a, b), std::max(a, b)};
    if (!seen.insert(e).second) throw GraphError("edge " + edge_str(a, b) + " is duplicated");
  }
  g.edges_.assign(seen.begin(), seen.end());
  for (const auto& e : g.edges_) {
    ++g.in_degree_[e.head];
    ++g.total_degree_[e.head];
    ++g.total_degree_[e.tail];
  }
  return g;
}

std::vector<std::size_t> RootGraph::incoming(std::size_t j) const {
  std::vector<std::size_t> out;
  for (const auto& e : edges_) {
    if (e.head == j) out.push_back(e.tail);
  }
  return out;
}

EdgeList RootGraph::unordered_edges() const {
  EdgeList out;
  for (const auto& e : edges_) out.emplace_back(e.tail, e.head);
  return out;
}

bool is_acyclic(const RootGraph& g) {
  // Kahn's algorithm on the oriented edges.
  std::vector<std::size_t> indeg = g.in_degrees();
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++visited;
    for (const auto& e : g.edges()) {
      if (e.tail == v && --indeg[e.head] == 0) ready.push_back(e.head);
    }
  }
  return visited == g.vertex_count();
}

Admissibility check_classical_admissible(const RootGraph& g, const RootSet* roots) {
  Admissibility a;
  a.cond1 = true;
  if (roots != nullptr) {
    for (const auto& e : g.edges()) {
      if (abs((*roots)[e.tail].value) > abs((*roots)[e.head].value)) a.cond1 = false;
    }
  }
  a.cond2 = is_acyclic(g);
  const auto& d = g.in_degrees();
  a.cond3 = std::all_of(d.begin(), d.end(), [](std::size_t x) { return x <= 1; });
  return a;
}

std::size_t min_total_degree(const RootGraph& g) {
  std::size_t best = g.vertex_count() == 0 ? 0 : g.total_degree(0);
  for (std::size_t j = 1; j < g.vertex_count(); ++j) best = std::min(best, g.total_degree(j));
  return best;
}

std::optional<GraphPreset> parse_preset(const std::string& name) {
  if (name == "path") return GraphPreset::path;
  if (name == "star_max") return GraphPreset::star_max;
  if (name == "complete") return GraphPreset::complete;
  if (name == "nearest_neighbor") return GraphPreset::nearest_neighbor;
  return std::nullopt;
}

std::string preset_name(GraphPreset p) {
  switch (p) {
    case GraphPreset::path: return "path";
    case GraphPreset::star_max: return "star_max";
    case GraphPreset::complete: return "complete";
    case GraphPreset::nearest_neighbor: return "nearest_neighbor";
  }
  return "unknown";
}

EdgeList preset_edges(GraphPreset preset, std::size_t r) {
  EdgeList out;
  switch (preset) {
    case GraphPreset::path:
      for (std::size_t i = 0; i + 1 < r; ++i) out.emplace_back(i, i + 1);
      break;
    case GraphPreset::star_max:
      for (std::size_t i = 0; i + 1 < r; ++i) out.emplace_back(i, r - 1);
      break;
    case GraphPreset::complete:
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) out.emplace_back(i, j);
      break;
    case GraphPreset::nearest_neighbor:
      throw GraphError("the nearest_neighbor preset needs the root set");
  }
  return out;
}

EdgeList preset_edges(GraphPreset preset, const RootSet& roots) {
  if (preset != GraphPreset::nearest_neighbor) return preset_edges(preset, roots.distinct_count());
  std::set<std::pair<std::size_t, std::size_t>> edges;
  if (roots.distinct_count() >= 2) {
    for (std::size_t j = 0; j < roots.distinct_count(); ++j) {
      std::size_t k = sep_partner(roots, j);
      edges.emplace(std::min(j, k), std::max(j, k));
    }
  }
  return {edges.begin(), edges.end()};
}

}  // namespace dmb
