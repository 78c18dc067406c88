#pragma once

#include "oriseq/core.hpp"
#include "oriseq/graph.hpp"

#include <utility>
#include <vector>

namespace oriseq::construct {

enum class Method { os2, nos2_circuits, nos_pseudoweight, nos_zerofree, os_lift };

/// What a construction produced and how it compares to the theory.
/// `bound` is the class maximum for the NOS/OS2 constructions (gap >= 0);
/// for lifted orientable sequences it is the guaranteed floor, so gap <= 0.
struct ConstructionReport {
    Method method;
    int q = 0;
    int n = 0;
    long long period = 0;
    int weight_mod_q = 0;
    BigInt predicted_period;
    BigInt bound;
    BigInt gap;  // bound - period
};

const char* method_name(Method m);

/// Orientable sequence of order 2 and maximum period: an Euler circuit of
/// K_q for odd q, or of K_q minus the perfect matching {2i, 2i+1} for even q.
std::pair<RingSequence, ConstructionReport> maximal_os2(
    int q, graph::TieBreak tie_break = graph::TieBreak::smallest_head);

/// The explicit circuit families whose union is consumed by
/// nos2_construction1, as ring symbol lists.
std::vector<std::vector<int>> construction1_circuits(int q);

/// Maximum-period negative orientable sequence of order 2: one Euler pass
/// over the union of the construction1_circuits arc families.
std::pair<RingSequence, ConstructionReport> nos2_construction1(
    int q, graph::TieBreak tie_break = graph::TieBreak::smallest_head);

/// Negative orientable sequence of order n whose windows are exactly the
/// n-tuples with pseudoweight strictly below nq/2 (Euler circuit of the
/// filtered de Bruijn graph).
std::pair<RingSequence, ConstructionReport> nos_construction2(
    int q, int n, graph::TieBreak tie_break = graph::TieBreak::smallest_head);

/// Negative orientable sequence of order n whose windows are exactly the
/// zero-free n-tuples with weight strictly below nq/2.
std::pair<RingSequence, ConstructionReport> nos_construction3(
    int q, int n, graph::TieBreak tie_break = graph::TieBreak::smallest_head);

}  // namespace oriseq::construct
