#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "caterpillar/errors.hpp"
#include "caterpillar/spine.hpp"

namespace caterpillar {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph on vertices 0..n-1. Construction rejects
// out-of-range indices, self-loops and repeated edges; it does not require
// the graph to be a tree.
class Tree {
 public:
  Tree(std::size_t n_vertices, std::vector<Edge> edges) : n_(n_vertices), edges_(std::move(edges)) {
    if (n_ == 0) throw InputError("graph must have at least one vertex");
    if (n_ > std::size_t{UINT32_MAX}) throw InputError("too many vertices");
    adjacency_.resize(n_);
    for (const auto& [u, v] : edges_) {
      if (u >= n_ || v >= n_) {
        throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") references a vertex outside 0.." + std::to_string(n_ - 1));
      }
      if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    std::vector<Vertex> sorted;
    for (Vertex u = 0; u < n_; ++u) {
      sorted.assign(adjacency_[u].begin(), adjacency_[u].end());
      std::sort(sorted.begin(), sorted.end());
      const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      if (dup != sorted.end()) {
        throw InputError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(*dup) + ")");
      }
    }
  }

  std::size_t n_vertices() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& a = adjacency_[u];
    return std::find(a.begin(), a.end(), v) != a.end();
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// ---- graph utilities ----

// BFS distances from `source`; unreachable vertices get SIZE_MAX.
inline std::vector<std::size_t> bfs_distances(const Tree& g, Vertex source) {
  std::vector<std::size_t> dist(g.n_vertices(), SIZE_MAX);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Tree& g) {
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == SIZE_MAX; });
}

inline bool is_tree(const Tree& g) {
  return g.edges().size() + 1 == g.n_vertices() && is_connected(g);
}

// Number of vertices on a longest path of a tree (double BFS).
inline std::size_t longest_path_vertices(const Tree& g) {
  auto farthest = [&](Vertex from) {
    const auto dist = bfs_distances(g, from);
    const auto it = std::max_element(dist.begin(), dist.end());
    return std::pair{static_cast<Vertex>(it - dist.begin()), *it};
  };
  const auto [end, ignored] = farthest(0);
  return farthest(end).second + 1;
}

// ---- classification ----

struct NotATree {
  std::string reason;
};
struct TreeNotCaterpillar {};
struct IsCaterpillar {
  CanonicalSpine spine;
};
struct DegenerateSmall {
  std::size_t n_vertices;
};

using Classification = std::variant<NotATree, TreeNotCaterpillar, IsCaterpillar, DegenerateSmall>;

inline std::string_view tag_name(const Classification& c) {
  struct Visitor {
    std::string_view operator()(const NotATree&) const { return "not_a_tree"; }
    std::string_view operator()(const TreeNotCaterpillar&) const { return "tree_not_caterpillar"; }
    std::string_view operator()(const IsCaterpillar&) const { return "caterpillar"; }
    std::string_view operator()(const DegenerateSmall&) const { return "degenerate_small"; }
  };
  return std::visit(Visitor{}, c);
}

namespace detail {

// Raw spine read along the core left by one round of leaf deletion, or
// nullopt when that core is not a path. Requires a tree with n >= 3.
inline std::optional<Spine> core_spine(const Tree& g) {
  const std::size_t n = g.n_vertices();
  std::vector<bool> in_core(n);
  std::size_t core_size = 0;
  for (Vertex v = 0; v < n; ++v) {
    in_core[v] = g.degree(v) >= 2;
    core_size += in_core[v];
  }

  std::vector<std::size_t> core_degree(n, 0);
  std::optional<Vertex> start;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_core[v]) continue;
    for (Vertex w : g.neighbors(v)) core_degree[v] += in_core[w];
    if (core_degree[v] > 2) return std::nullopt;
    if (core_degree[v] <= 1 && !start) start = v;
  }
  // A cycle is impossible in a tree, so a core with all core-degrees <= 2 has an end.
  if (!start) return std::nullopt;

  std::vector<Weight> raw;
  raw.reserve(core_size);
  std::optional<Vertex> prev;
  Vertex cur = *start;
  while (true) {
    raw.push_back(g.degree(cur) - 2);
    std::optional<Vertex> next;
    for (Vertex w : g.neighbors(cur)) {
      if (in_core[w] && w != prev) next = w;
    }
    if (!next) break;
    prev = cur;
    cur = *next;
  }
  if (raw.size() != core_size) return std::nullopt;
  return Spine(std::move(raw));
}

}  // namespace detail

// Caterpillar recognition: a tree is a caterpillar when deleting all of its
// leaves leaves a path. Trees on 1 or 2 vertices are reported separately.
inline Classification recognize(const Tree& g) {
  if (g.edges().size() + 1 != g.n_vertices()) {
    return NotATree{"edge count " + std::to_string(g.edges().size()) + " != n-1 = " +
                    std::to_string(g.n_vertices() - 1)};
  }
  if (!is_connected(g)) return NotATree{"graph is disconnected"};
  if (g.n_vertices() <= 2) return DegenerateSmall{g.n_vertices()};
  auto raw = detail::core_spine(g);
  if (!raw) return TreeNotCaterpillar{};
  return IsCaterpillar{canonicalize(*raw)};
}

// Spine certificate of a caterpillar with at least 3 vertices.
inline CanonicalSpine encode(const Tree& g) {
  auto c = recognize(g);
  if (auto* cat = std::get_if<IsCaterpillar>(&c)) return cat->spine;
  throw ContractError("encode requires a caterpillar with at least 3 vertices, got " +
                      std::string(tag_name(c)));
}

// Caterpillar induced by a spine. Vertex numbering: 0 is the left endpoint
// leaf, 1..k the spine left to right, k+1 the right endpoint leaf, then the
// pendant leaves grouped by spine position.
inline Tree decode(const Spine& s) {
  const std::size_t k = s.size();
  const std::size_t n = s.sum() + k + 2;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t v = 0; v <= k; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  }
  Vertex next_leaf = static_cast<Vertex>(k + 2);
  for (std::size_t i = 0; i < k; ++i) {
    for (Weight j = 0; j < s[i]; ++j) {
      edges.emplace_back(static_cast<Vertex>(i + 1), next_leaf++);
    }
  }
  return Tree(n, std::move(edges));
}

inline Tree decode(const CanonicalSpine& s) { return decode(s.spine()); }

// ---- isomorphism certificate ----

// AHU canonical form of a free tree rooted at its center; for bicentral trees
// the lesser of the two rooted forms.
struct IsoCertificate {
  std::string canonical_form;

  friend bool operator==(const IsoCertificate&, const IsoCertificate&) = default;
  friend auto operator<=>(const IsoCertificate&, const IsoCertificate&) = default;
};

namespace detail {

inline std::vector<Vertex> tree_centers(const Tree& g) {
  const std::size_t n = g.n_vertices();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : g.neighbors(leaf)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

inline std::string rooted_ahu(const Tree& g, Vertex root) {
  const std::size_t n = g.n_vertices();
  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(n, root);
  std::vector<bool> visited(n, false);
  visited[root] = true;
  order.reserve(n);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex u = order[head];
    for (Vertex w : g.neighbors(u)) {
      if (visited[w]) continue;
      visited[w] = true;
      parent[w] = u;
      order.push_back(w);
    }
  }
  std::vector<std::vector<std::string>> child_forms(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& kids = child_forms[*it];
    std::sort(kids.begin(), kids.end());
    std::string f = "(";
    for (auto& k : kids) f += k;
    f += ')';
    kids.clear();
    kids.shrink_to_fit();
    if (*it == root) return f;
    child_forms[parent[*it]].push_back(std::move(f));
  }
  return {};
}

}  // namespace detail

inline IsoCertificate iso_certificate(const Tree& g) {
  if (!is_tree(g)) throw ContractError("isomorphism certificate requires a tree");
  const auto centers = detail::tree_centers(g);
  std::string best = detail::rooted_ahu(g, centers.front());
  if (centers.size() == 2) best = std::min(best, detail::rooted_ahu(g, centers.back()));
  return {std::move(best)};
}

}  // namespace caterpillar
