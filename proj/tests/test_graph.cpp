#include "oriseq/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

using namespace oriseq::graph;

namespace {

// Multiset of arcs actually traversed by a walk.
std::map<std::pair<VertexKey, VertexKey>, int> walk_arcs(const CircuitResult& r) {
    std::map<std::pair<VertexKey, VertexKey>, int> used;
    for (size_t i = 0; i + 1 < r.walk.size(); ++i) used[{r.walk[i], r.walk[i + 1]}] += 1;
    return used;
}

}  // namespace

TEST_CASE("vertex registration is idempotent and ordered") {
    DirectedMultigraph g;
    const int a = g.add_vertex({1, 0});
    const int b = g.add_vertex({0, 1});
    CHECK(g.add_vertex({1, 0}) == a);
    CHECK(g.vertex_count() == 2);
    CHECK(g.key(a) == VertexKey{1, 0});
    CHECK(g.key(b) == VertexKey{0, 1});
    CHECK(g.has_vertex({0, 1}));
    CHECK_FALSE(g.has_vertex({2, 2}));

    g.add_arc({1, 0}, {0, 1});
    CHECK(g.arc_count() == 1);
    CHECK(g.out_degree(a) == 1);
    CHECK(g.in_degree(b) == 1);
    CHECK(g.smallest_active_vertex() == b);
}

TEST_CASE("euler circuit covers every arc exactly once") {
    DirectedMultigraph g;
    // Two triangles sharing vertex {0}: 0->1->2->0 and 0->3->4->0.
    for (auto [t, h] : {std::pair{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}})
        g.add_arc({t}, {h});
    auto r = eulerian_circuit(g, {0});
    CHECK(r.arcs == 6);
    REQUIRE(r.walk.size() == 7);
    CHECK(r.walk.front() == VertexKey{0});
    CHECK(r.walk.back() == VertexKey{0});
    auto used = walk_arcs(r);
    CHECK(used.size() == 6);
    for (const auto& [arc, count] : used) CHECK(count == 1);
    // smallest_head leaves vertex 0 through {1} first.
    CHECK(r.walk[1] == VertexKey{1});

    auto rl = eulerian_circuit(g, {0}, TieBreak::largest_head);
    CHECK(rl.arcs == 6);
    CHECK(rl.walk[1] == VertexKey{3});
}

TEST_CASE("parallel arcs are all consumed") {
    DirectedMultigraph g;
    g.add_arc({0}, {1});
    g.add_arc({0}, {1});
    g.add_arc({1}, {0});
    g.add_arc({1}, {0});
    auto r = eulerian_circuit(g, {1});
    CHECK(r.arcs == 4);
    CHECK(walk_arcs(r)[{VertexKey{0}, VertexKey{1}}] == 2);
}

TEST_CASE("euler circuit precondition failures") {
    DirectedMultigraph unbalanced;
    unbalanced.add_arc({0}, {1});
    CHECK_FALSE(unbalanced.balanced());
    CHECK_THROWS_WITH_AS(eulerian_circuit(unbalanced, {0}), "not Eulerian (degree)",
                         std::runtime_error);

    DirectedMultigraph split;
    split.add_arc({0}, {0});
    split.add_arc({5}, {5});
    CHECK(split.balanced());
    CHECK_FALSE(split.connected_on_support());
    CHECK_THROWS_WITH_AS(eulerian_circuit(split, {0}), "not Eulerian (connectivity)",
                         std::runtime_error);

    DirectedMultigraph ok;
    ok.add_arc({0}, {0});
    ok.add_vertex({7});
    CHECK(ok.connected_on_support());  // isolated vertices do not disconnect
    CHECK_THROWS_AS(eulerian_circuit(ok, {3}), std::invalid_argument);
    CHECK_THROWS_AS(eulerian_circuit(ok, {7}), std::invalid_argument);
}

TEST_CASE("deterministic walk under the smallest-head rule") {
    DirectedMultigraph g;
    // K3 with both directions on every edge.
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) g.add_arc({a}, {b});
    auto r1 = eulerian_circuit(g, {0});
    auto r2 = eulerian_circuit(g, {0});
    CHECK(r1.walk == r2.walk);
    CHECK(r1.walk[1] == VertexKey{1});
}

TEST_CASE("undirected euler circuit") {
    // Triangle 0-1-2.
    auto r = undirected_eulerian_circuit(3, {{0, 1}, {0, 2}, {1, 2}}, 0);
    CHECK(r.arcs == 3);
    REQUIRE(r.walk.size() == 4);
    CHECK(r.walk.front() == VertexKey{0});
    CHECK(r.walk.back() == VertexKey{0});
    // Each undirected edge appears once in either direction.
    auto used = walk_arcs(r);
    int edge01 = used[{VertexKey{0}, VertexKey{1}}] + used[{VertexKey{1}, VertexKey{0}}];
    CHECK(edge01 == 1);

    CHECK_THROWS_WITH_AS(undirected_eulerian_circuit(2, {{0, 1}}, 0), "not Eulerian (degree)",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(
        undirected_eulerian_circuit(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}, 0),
        "not Eulerian (connectivity)", std::runtime_error);
    CHECK_THROWS_AS(undirected_eulerian_circuit(3, {{0, 1}, {1, 0}}, 2), std::invalid_argument);
}

TEST_CASE("undirected circuit consumes parallel edges once each") {
    auto r = undirected_eulerian_circuit(2, {{0, 1}, {1, 0}}, 0);
    CHECK(r.arcs == 2);
    REQUIRE(r.walk.size() == 3);
    CHECK(r.walk == std::vector<VertexKey>{{0}, {1}, {0}});
}
