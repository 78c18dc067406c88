#pragma once

#include "oriseq/core.hpp"

#include <optional>

namespace oriseq::oracle {

enum class TargetProperty { orientable, negative_orientable };

struct SearchResult {
    long long max_period = 0;
    std::optional<RingSequence> witness;
    long long states_explored = 0;
};

/// Exact maximum period of a cyclic sequence with the property at order n,
/// by exhaustive DFS over distinct-window closed walks. The search
/// canonicalizes on the lexicographically least window and prunes on the
/// count of still-usable windows. Refuses (std::invalid_argument) when
/// q^n exceeds the cap rather than truncating.
SearchResult exhaustive_max(int q, int n, TargetProperty property, long long cap = 256);

/// Direct scans over all q^n tuples, for cross-checking the closed forms.
BigInt exhaustive_negasymmetric_count(int q, int n, long long cap = 2000000);
BigInt exhaustive_pseudoweight_count(int q, int n, HalfInt s, long long cap = 2000000);
BigInt exhaustive_zerofree_weight_count(int q, int n, long long w, long long cap = 2000000);

}  // namespace oriseq::oracle
