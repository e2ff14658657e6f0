#include "dams/topology.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dams {

const char* to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Complete:
      return "complete";
    case TopologyKind::Grid:
      return "grid";
    case TopologyKind::Cycle:
      return "cycle";
  }
  return "?";
}

TopologyKind topology_from_string(std::string_view name) {
  if (name == "complete") return TopologyKind::Complete;
  if (name == "grid") return TopologyKind::Grid;
  if (name == "cycle") return TopologyKind::Cycle;
  throw std::invalid_argument("unknown topology: " + std::string(name));
}

namespace {

Graph finalize(int n, std::vector<std::vector<int>> adjacency) {
  Graph g;
  g.n = n;
  g.adjacency = std::move(adjacency);
  std::int64_t degree_sum = 0;
  for (auto& neighbors : g.adjacency) {
    std::sort(neighbors.begin(), neighbors.end());
    degree_sum += static_cast<std::int64_t>(neighbors.size());
  }
  g.edge_count = degree_sum / 2;
  validate_graph(g);
  return g;
}

}  // namespace

Graph build_complete(int n) {
  if (n < 2) {
    throw std::invalid_argument("build_complete: n must be >= 2");
  }
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (v != u) {
        adjacency[static_cast<std::size_t>(u)].push_back(v);
      }
    }
  }
  return finalize(n, std::move(adjacency));
}

std::optional<std::pair<int, int>> grid_shape(int n) {
  if (n < 2) {
    return std::nullopt;
  }
  // Factor pair r <= c with minimal c - r; prefer r >= 2 when possible.
  std::optional<std::pair<int, int>> best;
  for (int r = 2; r * r <= n; ++r) {
    if (n % r == 0) {
      best = {r, n / r};  // increasing r shrinks |r - c|
    }
  }
  if (best) {
    return best;
  }
  if (n <= 3) {
    return std::pair<int, int>{1, n};  // no 2-D shape exists; fall back to a path
  }
  return std::nullopt;  // prime n > 3
}

Graph build_grid(int n) {
  if (n < 2) {
    throw std::invalid_argument("build_grid: n must be >= 2");
  }
  const auto shape = grid_shape(n);
  if (!shape) {
    throw std::invalid_argument("build_grid: no r x c shape for n = " + std::to_string(n));
  }
  const auto [rows, cols] = *shape;
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
  auto id = [cols = cols](int i, int j) { return i * cols + j; };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) {
        adjacency[static_cast<std::size_t>(id(i, j))].push_back(id(i, j + 1));
        adjacency[static_cast<std::size_t>(id(i, j + 1))].push_back(id(i, j));
      }
      if (i + 1 < rows) {
        adjacency[static_cast<std::size_t>(id(i, j))].push_back(id(i + 1, j));
        adjacency[static_cast<std::size_t>(id(i + 1, j))].push_back(id(i, j));
      }
    }
  }
  return finalize(n, std::move(adjacency));
}

Graph build_cycle(int n) {
  if (n < 3) {
    throw std::invalid_argument("build_cycle: n must be >= 3");
  }
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const int next = (v + 1) % n;
    adjacency[static_cast<std::size_t>(v)].push_back(next);
    adjacency[static_cast<std::size_t>(next)].push_back(v);
  }
  return finalize(n, std::move(adjacency));
}

Graph build_topology(TopologyKind kind, int n) {
  if (n == 1 && kind == TopologyKind::Complete) {
    Graph g;
    g.n = 1;
    g.adjacency.resize(1);
    g.edge_count = 0;
    return g;
  }
  switch (kind) {
    case TopologyKind::Complete:
      return build_complete(n);
    case TopologyKind::Grid:
      return build_grid(n);
    case TopologyKind::Cycle:
      return build_cycle(n);
  }
  throw std::invalid_argument("build_topology: unknown kind");
}

bool is_connected(const Graph& g) {
  if (g.n == 0) {
    return false;
  }
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++visited;
        stack.push_back(v);
      }
    }
  }
  return visited == g.n;
}

void validate_graph(const Graph& g) {
  if (g.n < 1 || static_cast<int>(g.adjacency.size()) != g.n) {
    throw std::invalid_argument("graph: adjacency size mismatch");
  }
  std::int64_t degree_sum = 0;
  for (int u = 0; u < g.n; ++u) {
    const auto& neighbors = g.adjacency[static_cast<std::size_t>(u)];
    degree_sum += static_cast<std::int64_t>(neighbors.size());
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
      const int v = neighbors[i];
      if (v < 0 || v >= g.n || v == u) {
        throw std::invalid_argument("graph: self-loop or out-of-range neighbor");
      }
      if (i > 0 && neighbors[i - 1] >= v) {
        throw std::invalid_argument("graph: neighbor list not sorted/unique");
      }
      const auto& back = g.adjacency[static_cast<std::size_t>(v)];
      if (!std::binary_search(back.begin(), back.end(), u)) {
        throw std::invalid_argument("graph: missing reverse edge");
      }
    }
  }
  if (degree_sum != 2 * g.edge_count) {
    throw std::invalid_argument("graph: edge count mismatch");
  }
  if (!is_connected(g)) {
    throw std::invalid_argument("graph: not connected");
  }
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (int u = 0; u < g.n; ++u) {
    for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
      if (u < v) {
        out << u << ' ' << v << '\n';
      }
    }
  }
}

}  // namespace dams
