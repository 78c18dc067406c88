#pragma once

#include "oriseq/core.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace oriseq::verify {

enum class Property { n_window, orientable, negative_orientable, good };

/// Outcome of a property check. For the window properties a failure witness
/// is the first violating pair of window start indices in scan order
/// (i ascending, then j). For `good` the witness is (run start, run length)
/// of the first over-long zero run.
struct Verdict {
    Property property;
    bool holds = false;
    std::optional<std::pair<int, int>> witness;
};

/// All n-windows pairwise distinct.
Verdict is_n_window(const RingSequence& s, int n);

/// n-window, and no window equals the reverse of any window (self pairs
/// included, so palindromic windows are violations on their own).
Verdict is_orientable(const RingSequence& s, int n);

/// n-window, and no window equals the negated reverse of any window
/// (negasymmetric windows are self-violations).
Verdict is_negative_orientable(const RingSequence& s, int n);

/// One maximal cyclic run of equal symbols.
struct Run {
    int symbol = 0;
    int start = 0;   // index of the first symbol; wrap-around runs start near the end
    int length = 0;
};

/// Cyclic run decomposition, ordered by start index, plus the longest run
/// length per symbol. Constant sequences have no finite run structure and
/// are rejected.
struct RunProfile {
    std::vector<Run> runs;
    std::vector<int> max_run_length;  // indexed by symbol, 0 when absent
};

RunProfile run_profile(const RingSequence& s);

/// Every cyclic run of 0 has length <= n - 2 (vacuously true without zeros;
/// an all-zero sequence fails). Requires n >= 2.
Verdict is_good(const RingSequence& s, int n);

/// Negasymmetric tuples of the given length in lexicographic order.
/// Length 1 is allowed (used by parity_check); the closed-form counter
/// count_negasymmetric covers n >= 2.
std::vector<Tuple> negasymmetric_tuples(int q, int length);

/// For every negasymmetric (n-1)-tuple v, the number of n-windows of S
/// starting with v plus the number of n-windows of -S^R starting with v is
/// even. Requires S to verify as negative orientable at order n.
bool parity_check(const RingSequence& s, int n);

}  // namespace oriseq::verify
