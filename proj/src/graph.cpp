#include "oriseq/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oriseq::graph {

int DirectedMultigraph::add_vertex(const VertexKey& key) {
    auto it = std::lower_bound(index_.begin(), index_.end(), key,
                               [](const auto& entry, const VertexKey& k) { return entry.first < k; });
    if (it != index_.end() && it->first == key) return it->second;
    const int id = static_cast<int>(keys_.size());
    keys_.push_back(key);
    out_.emplace_back();
    indeg_.push_back(0);
    index_.insert(it, {key, id});
    return id;
}

bool DirectedMultigraph::has_vertex(const VertexKey& key) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), key,
                               [](const auto& entry, const VertexKey& k) { return entry.first < k; });
    return it != index_.end() && it->first == key;
}

void DirectedMultigraph::add_arc(const VertexKey& tail, const VertexKey& head) {
    const int t = add_vertex(tail);
    const int h = add_vertex(head);
    out_[static_cast<size_t>(t)].push_back(h);
    ++indeg_[static_cast<size_t>(h)];
    ++arcs_;
}

int DirectedMultigraph::smallest_active_vertex() const {
    for (const auto& [key, id] : index_) {
        if (!out_[static_cast<size_t>(id)].empty() || indeg_[static_cast<size_t>(id)] > 0)
            return id;
    }
    return -1;
}

bool DirectedMultigraph::balanced() const {
    for (size_t v = 0; v < keys_.size(); ++v) {
        if (static_cast<int>(out_[v].size()) != indeg_[v]) return false;
    }
    return true;
}

bool DirectedMultigraph::connected_on_support() const {
    const int n = vertex_count();
    std::vector<std::vector<int>> undirected(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        for (int h : out_[static_cast<size_t>(v)]) {
            undirected[static_cast<size_t>(v)].push_back(h);
            undirected[static_cast<size_t>(h)].push_back(v);
        }
    }
    int root = -1;
    for (int v = 0; v < n; ++v) {
        if (!undirected[static_cast<size_t>(v)].empty()) {
            root = v;
            break;
        }
    }
    if (root == -1) return true;  // no arcs at all
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{root};
    seen[static_cast<size_t>(root)] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : undirected[static_cast<size_t>(v)]) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!undirected[static_cast<size_t>(v)].empty() && !seen[static_cast<size_t>(v)])
            return false;
    }
    return true;
}

CircuitResult eulerian_circuit(const DirectedMultigraph& g, const VertexKey& start,
                               TieBreak tie_break) {
    if (!g.has_vertex(start)) throw std::invalid_argument("unknown start vertex");
    if (!g.balanced()) throw std::runtime_error("not Eulerian (degree)");
    if (!g.connected_on_support()) throw std::runtime_error("not Eulerian (connectivity)");

    const int n = g.vertex_count();
    // Private copy of the successor lists, ordered by head key per tie-break.
    std::vector<std::vector<int>> succ(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        succ[static_cast<size_t>(v)] = g.out_arcs(v);
        auto& list = succ[static_cast<size_t>(v)];
        std::stable_sort(list.begin(), list.end(),
                         [&](int a, int b) { return g.key(a) < g.key(b); });
        if (tie_break == TieBreak::largest_head) std::reverse(list.begin(), list.end());
    }

    int start_id = -1;
    for (int v = 0; v < n; ++v) {
        if (g.key(v) == start) {
            start_id = v;
            break;
        }
    }
    if (g.out_degree(start_id) == 0 && g.in_degree(start_id) == 0)
        throw std::invalid_argument("start vertex has no arcs");

    std::vector<size_t> cursor(static_cast<size_t>(n), 0);
    std::vector<int> stack{start_id};
    std::vector<int> circuit;
    while (!stack.empty()) {
        const int v = stack.back();
        auto& c = cursor[static_cast<size_t>(v)];
        if (c < succ[static_cast<size_t>(v)].size()) {
            stack.push_back(succ[static_cast<size_t>(v)][c++]);
        } else {
            circuit.push_back(v);
            stack.pop_back();
        }
    }
    std::reverse(circuit.begin(), circuit.end());

    if (static_cast<long long>(circuit.size()) != g.arc_count() + 1)
        throw std::runtime_error("not Eulerian (connectivity)");

    CircuitResult result;
    result.arcs = g.arc_count();
    result.walk.reserve(circuit.size());
    for (int v : circuit) result.walk.push_back(g.key(v));
    return result;
}

CircuitResult undirected_eulerian_circuit(int vertex_count,
                                          const std::vector<std::pair<int, int>>& edges,
                                          int start, TieBreak tie_break) {
    if (start < 0 || start >= vertex_count) throw std::invalid_argument("unknown start vertex");
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(vertex_count));
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        auto [a, b] = edges[static_cast<size_t>(e)];
        if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        adj[static_cast<size_t>(a)].push_back({b, e});
        adj[static_cast<size_t>(b)].push_back({a, e});
    }
    for (auto& list : adj) {
        std::stable_sort(list.begin(), list.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        if (tie_break == TieBreak::largest_head) std::reverse(list.begin(), list.end());
        if (list.size() % 2 != 0) throw std::runtime_error("not Eulerian (degree)");
    }

    // Connectivity on support.
    {
        int root = -1;
        for (int v = 0; v < vertex_count; ++v) {
            if (!adj[static_cast<size_t>(v)].empty()) {
                root = v;
                break;
            }
        }
        if (root != -1) {
            std::vector<char> seen(static_cast<size_t>(vertex_count), 0);
            std::vector<int> stack{root};
            seen[static_cast<size_t>(root)] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (auto [w, e] : adj[static_cast<size_t>(v)]) {
                    if (!seen[static_cast<size_t>(w)]) {
                        seen[static_cast<size_t>(w)] = 1;
                        stack.push_back(w);
                    }
                }
            }
            for (int v = 0; v < vertex_count; ++v) {
                if (!adj[static_cast<size_t>(v)].empty() && !seen[static_cast<size_t>(v)])
                    throw std::runtime_error("not Eulerian (connectivity)");
            }
        }
    }
    if (adj[static_cast<size_t>(start)].empty() && !edges.empty())
        throw std::invalid_argument("start vertex has no edges");

    std::vector<char> used(edges.size(), 0);
    std::vector<size_t> cursor(static_cast<size_t>(vertex_count), 0);
    std::vector<int> stack{start};
    std::vector<int> circuit;
    while (!stack.empty()) {
        const int v = stack.back();
        auto& c = cursor[static_cast<size_t>(v)];
        const auto& list = adj[static_cast<size_t>(v)];
        while (c < list.size() && used[static_cast<size_t>(list[c].second)]) ++c;
        if (c < list.size()) {
            used[static_cast<size_t>(list[c].second)] = 1;
            stack.push_back(list[c].first);
        } else {
            circuit.push_back(v);
            stack.pop_back();
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    if (circuit.size() != edges.size() + 1)
        throw std::runtime_error("not Eulerian (connectivity)");

    CircuitResult result;
    result.arcs = static_cast<long long>(edges.size());
    result.walk.reserve(circuit.size());
    for (int v : circuit) result.walk.push_back(VertexKey{v});
    return result;
}

}  // namespace oriseq::graph
