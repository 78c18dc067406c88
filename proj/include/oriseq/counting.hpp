#pragma once

#include "oriseq/core.hpp"

#include <map>
#include <vector>

namespace oriseq::counting {

enum class CountKind { pseudoweight, zerofree };

/// Per-(kind, q) table of tuple counts by length and weight, filled row by
/// row in n. Weights are keyed by their doubled value so pseudoweight grids
/// with half-integer entries share the machinery with plain integer weights.
class CountTable {
  public:
    CountTable(CountKind kind, int q);

    CountKind kind() const { return kind_; }
    int q() const { return q_; }

    /// Count of length-n tuples with (doubled) weight d; 0 off support.
    /// Rows are built on demand.
    const BigInt& value(int n, long long doubled_weight);

    /// Smallest and largest doubled weight with a nonzero count for row n.
    std::pair<long long, long long> support(int n) const;

  private:
    void ensure_rows(int n);

    CountKind kind_;
    int q_;
    std::vector<std::map<long long, BigInt>> rows_;  // rows_[n-1]
};

/// r_{q,n,s}: number of q-ary n-tuples with pseudoweight s. For even q the
/// grid is integral, so a half-integer s is rejected; for odd q any multiple
/// of 0.5 is a valid query. Out-of-range s returns 0.
BigInt r_count(int q, int n, HalfInt s);

/// k_{q,n,w}: number of zero-free q-ary n-tuples with weight w; 0 out of range.
BigInt k_count(int q, int n, long long w);

/// Coefficient of x^r in (1 + x + ... + x^m)^k; 0 out of range.
BigInt polynomial_coefficient(int m, long long r, int k);

/// Maximum period of a negative orientable sequence of order n over Z_q:
///   (q^n - q^(n/2)) / 2 - 1                        q even, n even
///   (q^n - 2 q^((n-1)/2)) / 2 - 1                  q even, n odd
///   (q^n - q^(floor(n/2)) - q^(floor((n-1)/2)) + 1) / 2   q odd
BigInt nos_bound(int q, int n);

/// Counting bound (q^n - #negasymmetric) / 2 without the parity refinement.
BigInt simple_nos_bound(int q, int n);

/// Maximum period of an orientable sequence of order 2: q(q-1)/2 for odd q,
/// q(q-2)/2 for even q. Requires q >= 3.
long long os2_max_period(int q);

/// Period of the pseudoweight-filtered de Bruijn construction:
/// (q^n - r_{q,n,nq/2}) / 2.
BigInt construction2_period(int q, int n);

/// Period of the zero-free weight-filtered construction:
/// ((q-1)^n - k_{q,n,nq/2}) / 2, the k term dropping out for odd nq.
BigInt construction3_period(int q, int n);

/// Integer weight of one period of the zero-free construction:
/// (1/n) * sum over 2w < nq of w * k_{q,n,w}.
BigInt construction3_weight(int q, int n);

}  // namespace oriseq::counting
