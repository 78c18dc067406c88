#include "oriseq/construct.hpp"

#include "oriseq/counting.hpp"
#include "oriseq/verify.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace oriseq::construct {

const char* method_name(Method m) {
    switch (m) {
        case Method::os2: return "os2";
        case Method::nos2_circuits: return "nos2";
        case Method::nos_pseudoweight: return "nos-pw";
        case Method::nos_zerofree: return "nos-zf";
        case Method::os_lift: return "os-lift";
    }
    return "?";
}

namespace {

void require_verdict(const verify::Verdict& v, const char* what) {
    if (!v.holds) throw std::logic_error(std::string("internal error: ") + what);
}

void require_period(long long actual, const BigInt& predicted, const char* what) {
    if (BigInt(actual) != predicted)
        throw std::logic_error(std::string("internal error: ") + what +
                               " period does not match its predicted value");
}

// Ring sequence read off a de Bruijn-style circuit: the first symbol of
// each tail vertex along the walk.
Symbols read_off(const graph::CircuitResult& circuit) {
    Symbols out;
    out.reserve(static_cast<size_t>(circuit.arcs));
    for (long long i = 0; i < circuit.arcs; ++i)
        out.push_back(circuit.walk[static_cast<size_t>(i)].front());
    return out;
}

// Shared engine for the two filtered de Bruijn constructions: keep is
// called on every q-ary n-tuple (as symbols) and selects the arcs.
template <typename Keep>
RingSequence filtered_debruijn_sequence(int q, int n, Keep keep, graph::TieBreak tie_break) {
    graph::DirectedMultigraph g;
    Symbols tuple(static_cast<size_t>(n), 0);
    while (true) {
        if (keep(tuple)) {
            graph::VertexKey tail(tuple.begin(), tuple.end() - 1);
            graph::VertexKey head(tuple.begin() + 1, tuple.end());
            g.add_arc(tail, head);
        }
        int i = n - 1;
        while (i >= 0 && tuple[static_cast<size_t>(i)] == q - 1) {
            tuple[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++tuple[static_cast<size_t>(i)];
    }
    if (g.arc_count() == 0) throw std::logic_error("internal error: empty filtered graph");
    const int start = g.smallest_active_vertex();
    auto circuit = graph::eulerian_circuit(g, g.key(start), tie_break);
    return RingSequence(q, read_off(circuit));
}

}  // namespace

std::pair<RingSequence, ConstructionReport> maximal_os2(int q, graph::TieBreak tie_break) {
    check_modulus_nonbinary(q);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < q; ++a) {
        for (int b = a + 1; b < q; ++b) {
            // Even q: drop the perfect matching {2i, 2i+1}.
            if (q % 2 == 0 && b == a + 1 && a % 2 == 0) continue;
            edges.push_back({a, b});
        }
    }
    auto circuit = graph::undirected_eulerian_circuit(q, edges, 0, tie_break);
    RingSequence s(q, read_off(circuit));

    ConstructionReport report;
    report.method = Method::os2;
    report.q = q;
    report.n = 2;
    report.period = s.period();
    report.weight_mod_q = weight_mod_q(s);
    report.predicted_period = counting::os2_max_period(q);
    report.bound = counting::os2_max_period(q);
    report.gap = report.bound - report.period;
    require_period(report.period, report.predicted_period, "os2");
    require_verdict(verify::is_orientable(s, 2), "os2 output failed orientability");
    return {std::move(s), report};
}

std::vector<std::vector<int>> construction1_circuits(int q) {
    check_modulus_nonbinary(q);
    // Families circle the low half of the alphabet: C_0 strings the loops
    // (j, j) together through 0; C_i alternates i with +-j for j > i; even q
    // closes each C_i through q/2.
    const int m = q % 2 == 1 ? (q - 1) / 2 : (q - 2) / 2;
    std::vector<std::vector<int>> circuits;

    std::vector<int> c0;
    for (int j = 1; j <= m; ++j) {
        c0.push_back(0);
        c0.push_back(j);
        c0.push_back(j);
    }
    circuits.push_back(std::move(c0));

    for (int i = 1; i < m; ++i) {
        std::vector<int> ci;
        for (int j = i + 1; j <= m; ++j) {
            ci.push_back(i);
            ci.push_back(j);
            ci.push_back(i);
            ci.push_back(q - j);
        }
        if (q % 2 == 0) {
            ci.push_back(i);
            ci.push_back(q / 2);
        }
        circuits.push_back(std::move(ci));
    }
    if (q % 2 == 0) circuits.push_back({m, q / 2});
    return circuits;
}

std::pair<RingSequence, ConstructionReport> nos2_construction1(int q, graph::TieBreak tie_break) {
    check_modulus_nonbinary(q);
    graph::DirectedMultigraph g;
    std::set<std::pair<int, int>> seen;
    for (const auto& ring : construction1_circuits(q)) {
        const int len = static_cast<int>(ring.size());
        for (int i = 0; i < len; ++i) {
            const int x = ring[static_cast<size_t>(i)];
            const int y = ring[static_cast<size_t>((i + 1) % len)];
            if (y == (q - x) % q)
                throw std::logic_error("internal error: circuit family uses a forbidden arc");
            if (!seen.insert({x, y}).second)
                throw std::logic_error("internal error: circuit families are not arc-disjoint");
            g.add_arc({x}, {y});
        }
    }
    auto circuit = graph::eulerian_circuit(g, {0}, tie_break);
    RingSequence s(q, read_off(circuit));

    ConstructionReport report;
    report.method = Method::nos2_circuits;
    report.q = q;
    report.n = 2;
    report.period = s.period();
    report.weight_mod_q = weight_mod_q(s);
    report.predicted_period = static_cast<long long>(q) * (q - 1) / 2 - (q % 2 == 0 ? 1 : 0);
    report.bound = counting::nos_bound(q, 2);
    report.gap = report.bound - report.period;
    require_period(report.period, report.predicted_period, "nos2");
    require_verdict(verify::is_negative_orientable(s, 2), "nos2 output failed verification");
    return {std::move(s), report};
}

std::pair<RingSequence, ConstructionReport> nos_construction2(int q, int n,
                                                              graph::TieBreak tie_break) {
    check_modulus_nonbinary(q);
    if (n < 2) throw std::invalid_argument("nos_construction2 requires n >= 2");
    const long long boundary_doubled = static_cast<long long>(n) * q;  // 2 * (nq/2)
    RingSequence s = filtered_debruijn_sequence(
        q, n,
        [&](const Symbols& t) {
            long long doubled = 0;
            for (int v : t) doubled += v == 0 ? q : 2LL * v;
            return doubled < boundary_doubled;
        },
        tie_break);

    ConstructionReport report;
    report.method = Method::nos_pseudoweight;
    report.q = q;
    report.n = n;
    report.period = s.period();
    report.weight_mod_q = weight_mod_q(s);
    report.predicted_period = counting::construction2_period(q, n);
    report.bound = counting::nos_bound(q, n);
    report.gap = report.bound - report.period;
    require_period(report.period, report.predicted_period, "nos-pw");
    require_verdict(verify::is_negative_orientable(s, n), "nos-pw output failed verification");
    return {std::move(s), report};
}

std::pair<RingSequence, ConstructionReport> nos_construction3(int q, int n,
                                                              graph::TieBreak tie_break) {
    check_modulus_nonbinary(q);
    if (n < 2) throw std::invalid_argument("nos_construction3 requires n >= 2");
    const long long boundary_doubled = static_cast<long long>(n) * q;
    RingSequence s = filtered_debruijn_sequence(
        q, n,
        [&](const Symbols& t) {
            long long doubled = 0;
            for (int v : t) {
                if (v == 0) return false;
                doubled += 2LL * v;
            }
            return doubled < boundary_doubled;
        },
        tie_break);

    ConstructionReport report;
    report.method = Method::nos_zerofree;
    report.q = q;
    report.n = n;
    report.period = s.period();
    report.weight_mod_q = weight_mod_q(s);
    report.predicted_period = counting::construction3_period(q, n);
    report.bound = counting::nos_bound(q, n);
    report.gap = report.bound - report.period;
    require_period(report.period, report.predicted_period, "nos-zf");
    require_verdict(verify::is_negative_orientable(s, n), "nos-zf output failed verification");
    if (BigInt(weight(s)) != counting::construction3_weight(q, n))
        throw std::logic_error("internal error: nos-zf weight does not match its predicted value");
    return {std::move(s), report};
}

}  // namespace oriseq::construct
