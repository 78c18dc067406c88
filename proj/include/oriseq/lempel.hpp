#pragma once

#include "oriseq/construct.hpp"
#include "oriseq/core.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace oriseq::lempel {

/// Symbol-wise difference: d(s)_j = beta * (s_{j+1} - s_j) mod q, indices
/// cyclic. beta must be a unit mod q. The output keeps the input length,
/// which may be a multiple of its least period.
RingSequence d_beta(const RingSequence& s, int beta = 1);

/// Additive order of w in Z_q: q / gcd(w, q).
int additive_order(int w, int q);

struct LiftResult {
    RingSequence output;
    long long input_period = 0;
    int weight = 0;  // w_q of the input
    int h = 1;       // additive order of the weight; output period = h * input_period
    int start = 0;
    int beta = 1;
};

/// Integrates s from a_0 = start via a_{j+1} = a_j + beta^{-1} s_j over
/// h * period steps, h the additive order of w_q(s). The input must verify
/// as negative orientable or orientable at order n; the output is verified
/// to hold the dual property at order n + 1 (std::logic_error otherwise).
LiftResult inverse_lift(const RingSequence& s, int n, int start = 0, int beta = 1);

/// Symbols to delete so the weight becomes a unit mod q: empty when it
/// already is; otherwise the smallest i in [1, q/2) with w - i a unit, except
/// that q = 6 needs its own table (w 0,2 -> {1}; 3 -> {2}; 4 -> {1, 2}).
std::vector<int> find_unit_adjustment(int q, int w);

/// Removes one `symbol` from inside the first (smallest start index) cyclic
/// run of `symbol` of length >= n. The result is re-verified to stay
/// negative orientable at order n.
RingSequence delete_from_uniform_run(const RingSequence& s, int symbol, int n);

/// find_unit_adjustment applied to s (no-op for unit weight).
RingSequence ensure_unit_weight(const RingSequence& s, int n);

/// Run extension E_a: inserts one extra a at the smallest index starting a
/// maximal (longest) run of a. Requires a to occur in s.
RingSequence extend_run(const RingSequence& s, int a);

struct TowerRow {
    int order = 0;
    long long period = 0;
    int weight = 0;
    std::optional<int> inserted;  // symbol added by E_a; empty on the seed row
    bool orientable = false;      // false: negative orientable at this order
};

struct TowerResult {
    RingSequence sequence;
    std::vector<TowerRow> trace;
};

/// Alternating lift-extend recursion S <- E_a(D^{-1}(S)) with
/// a = 1 - w_q(D^{-1}(S)), from a good seed of unit weight that verifies as
/// negative orientable or orientable at seed_order. The insertion scans the
/// maximal runs of a in start order and keeps the first one whose extension
/// verifies (extending the earliest run can flank the new run with equal
/// symbols and create a palindromic window). Every stage is verified:
/// period q*m + 1, the parity-appropriate property, and goodness.
TowerResult recursive_tower(const RingSequence& seed, int seed_order, int target_order);

/// Closed-form tower period after s steps from period m: q^s m + (q^s-1)/(q-1).
BigInt predicted_tower_period(const BigInt& m, int q, int s);

/// Orientable sequence of order 3: nos2_construction1, unit-weight
/// adjustment, one lift. The report bound is the guaranteed period floor
/// q(q(q-1)/2 - 1) for odd q, q(q(q-1)/2 - 2) for even q != 6, and
/// q(q(q-1)/2 - 3) for q = 6, so report.gap <= 0.
std::pair<RingSequence, construct::ConstructionReport> build_os3(int q);

/// Orientable sequence of order n >= 3: nos_construction2 at order n - 1,
/// unit-weight adjustment, one lift. Bound floor
/// q(q^{n-1} - r_{q,n-1,(n-1)q/2} - c)/2 with c = 2 (q != 6) or 4 (q = 6).
std::pair<RingSequence, construct::ConstructionReport> build_os_n(int q, int n);

}  // namespace oriseq::lempel
