#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace dams {

enum class TopologyKind { Complete, Grid, Cycle };

const char* to_string(TopologyKind kind);
TopologyKind topology_from_string(std::string_view name);

/// Undirected simple connected graph with sorted per-node neighbor lists.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adjacency;
  std::int64_t edge_count = 0;

  int degree(int v) const { return static_cast<int>(adjacency[static_cast<std::size_t>(v)].size()); }
};

/// Clique on n >= 2 nodes.
Graph build_complete(int n);

/// Non-toroidal r x c lattice with r*c = n and |r - c| minimal (r <= c),
/// row-major numbering. Prime n > 3 has no valid 2-D shape.
Graph build_grid(int n);

/// Ring on n >= 3 nodes.
Graph build_cycle(int n);

/// Engine entry point; n == 1 with Complete yields the single-node graph.
Graph build_topology(TopologyKind kind, int n);

/// The grid shape rule, exposed for inspection. nullopt when no valid shape.
std::optional<std::pair<int, int>> grid_shape(int n);

bool is_connected(const Graph& g);

/// Checks simplicity, symmetry, connectivity and the edge count; throws on
/// violation.
void validate_graph(const Graph& g);

/// Plain-text edge list, one "u v" line per edge with u < v.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace dams
