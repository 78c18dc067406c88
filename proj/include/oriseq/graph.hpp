#pragma once

#include <utility>
#include <vector>

namespace oriseq::graph {

/// Vertices are opaque ordered keys; the engine only compares them.
/// De Bruijn-style vertices encode as their symbol lists.
using VertexKey = std::vector<int>;

enum class TieBreak { smallest_head, largest_head };

/// Directed multigraph with stable, deterministic iteration order.
class DirectedMultigraph {
  public:
    /// Registers a vertex (idempotent) and returns its id.
    int add_vertex(const VertexKey& key);

    /// Adds one arc; endpoints are registered on demand.
    void add_arc(const VertexKey& tail, const VertexKey& head);

    int vertex_count() const { return static_cast<int>(keys_.size()); }
    long long arc_count() const { return arcs_; }
    const VertexKey& key(int id) const { return keys_[static_cast<size_t>(id)]; }
    bool has_vertex(const VertexKey& key) const;
    int out_degree(int id) const { return static_cast<int>(out_[static_cast<size_t>(id)].size()); }
    int in_degree(int id) const { return indeg_[static_cast<size_t>(id)]; }
    const std::vector<int>& out_arcs(int id) const { return out_[static_cast<size_t>(id)]; }

    /// Id of the smallest vertex key with nonzero degree, -1 if none.
    int smallest_active_vertex() const;

    bool balanced() const;

    /// All vertices with nonzero degree lie in one component of the
    /// underlying undirected graph (with balance this is strong connectivity).
    bool connected_on_support() const;

  private:
    std::vector<VertexKey> keys_;
    std::vector<std::vector<int>> out_;  // head ids, insertion order
    std::vector<int> indeg_;
    long long arcs_ = 0;
    // Ordered key -> id map kept as a sorted vector of (key, id).
    std::vector<std::pair<VertexKey, int>> index_;
};

/// A closed walk: walk.front() == walk.back() when arcs > 0, and
/// consecutive entries are joined by one multigraph arc each.
struct CircuitResult {
    std::vector<VertexKey> walk;
    long long arcs = 0;
};

/// Deterministic Hierholzer Euler circuit over a private copy of the arc
/// lists. Successor ties are broken by head key order (ascending for
/// smallest_head). Throws std::runtime_error "not Eulerian (degree)" /
/// "not Eulerian (connectivity)" on violated preconditions and
/// std::invalid_argument for a missing or isolated start vertex.
CircuitResult eulerian_circuit(const DirectedMultigraph& g, const VertexKey& start,
                               TieBreak tie_break = TieBreak::smallest_head);

/// Euler circuit of an undirected multigraph on vertices 0..vertex_count-1.
/// Edges are undirected pairs consumed once each (not doubled arcs).
/// Requires all degrees even and the support connected.
CircuitResult undirected_eulerian_circuit(int vertex_count,
                                          const std::vector<std::pair<int, int>>& edges,
                                          int start,
                                          TieBreak tie_break = TieBreak::smallest_head);

}  // namespace oriseq::graph
