#include "oriseq/counting.hpp"

#include <mutex>
#include <stdexcept>

namespace oriseq::counting {

namespace {

const BigInt kZero = 0;

BigInt ipow(BigInt base, int exp) {
    BigInt out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

CountTable::CountTable(CountKind kind, int q) : kind_(kind), q_(q) {
    check_modulus(q);
}

void CountTable::ensure_rows(int n) {
    while (static_cast<int>(rows_.size()) < n) {
        const int row_n = static_cast<int>(rows_.size()) + 1;
        std::map<long long, BigInt> row;
        if (row_n == 1) {
            if (kind_ == CountKind::zerofree) {
                for (int i = 1; i < q_; ++i) row[2LL * i] = 1;
            } else {
                for (int i = 1; i < q_; ++i) row[2LL * i] += 1;
                row[q_] += 1;  // the zero symbol contributes pseudoweight q/2
            }
        } else {
            const auto& prev = rows_.back();
            for (const auto& [d, count] : prev) {
                for (int i = 1; i < q_; ++i) row[d + 2LL * i] += count;
                if (kind_ == CountKind::pseudoweight) row[d + q_] += count;
            }
        }
        rows_.push_back(std::move(row));
    }
}

const BigInt& CountTable::value(int n, long long doubled_weight) {
    if (n < 1) throw std::invalid_argument("count table rows start at n = 1");
    ensure_rows(n);
    const auto& row = rows_[static_cast<size_t>(n - 1)];
    auto it = row.find(doubled_weight);
    return it == row.end() ? kZero : it->second;
}

std::pair<long long, long long> CountTable::support(int n) const {
    const auto& row = rows_.at(static_cast<size_t>(n - 1));
    if (row.empty()) return {0, -1};
    return {row.begin()->first, row.rbegin()->first};
}

namespace {

// Shared memoized tables, one per (kind, q). Callers hold table_mutex()
// across the lookup and the (lazily mutating) value() call.
CountTable& table_for(CountKind kind, int q) {
    static std::map<std::pair<int, int>, CountTable> cache;
    auto key = std::make_pair(static_cast<int>(kind), q);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, CountTable(kind, q)).first;
    return it->second;
}

std::mutex& table_mutex() {
    static std::mutex mu;
    return mu;
}

}  // namespace

BigInt r_count(int q, int n, HalfInt s) {
    check_modulus(q);
    if (n < 1) throw std::invalid_argument("r_count requires n >= 1");
    if (q % 2 == 0 && !s.is_whole())
        throw std::invalid_argument("pseudoweights over an even alphabet are integers");
    std::lock_guard<std::mutex> lock(table_mutex());
    return table_for(CountKind::pseudoweight, q).value(n, s.doubled);
}

BigInt k_count(int q, int n, long long w) {
    check_modulus(q);
    if (n < 1) throw std::invalid_argument("k_count requires n >= 1");
    std::lock_guard<std::mutex> lock(table_mutex());
    return table_for(CountKind::zerofree, q).value(n, 2 * w);
}

BigInt polynomial_coefficient(int m, long long r, int k) {
    if (m < 0 || k < 0) throw std::invalid_argument("polynomial_coefficient requires m, k >= 0");
    if (r < 0 || r > static_cast<long long>(m) * k) return 0;
    std::vector<BigInt> coeff(static_cast<size_t>(r) + 1, 0);
    coeff[0] = 1;
    for (int factor = 0; factor < k; ++factor) {
        std::vector<BigInt> next(coeff.size(), 0);
        for (size_t i = 0; i < coeff.size(); ++i) {
            if (coeff[i] == 0) continue;
            for (long long j = 0; j <= m && i + static_cast<size_t>(j) < next.size(); ++j)
                next[i + static_cast<size_t>(j)] += coeff[i];
        }
        coeff = std::move(next);
    }
    return coeff[static_cast<size_t>(r)];
}

BigInt nos_bound(int q, int n) {
    check_modulus(q);
    if (n < 2) throw std::invalid_argument("nos_bound requires n >= 2");
    const BigInt qn = ipow(q, n);
    if (q % 2 == 0) {
        if (n % 2 == 0) return (qn - ipow(q, n / 2)) / 2 - 1;
        return (qn - 2 * ipow(q, (n - 1) / 2)) / 2 - 1;
    }
    return (qn - ipow(q, n / 2) - ipow(q, (n - 1) / 2) + 1) / 2;
}

BigInt simple_nos_bound(int q, int n) {
    check_modulus(q);
    if (n < 2) throw std::invalid_argument("simple_nos_bound requires n >= 2");
    return (ipow(q, n) - count_negasymmetric(q, n)) / 2;
}

long long os2_max_period(int q) {
    check_modulus_nonbinary(q);
    return q % 2 == 1 ? static_cast<long long>(q) * (q - 1) / 2
                      : static_cast<long long>(q) * (q - 2) / 2;
}

BigInt construction2_period(int q, int n) {
    check_modulus_nonbinary(q);
    if (n < 2) throw std::invalid_argument("construction2_period requires n >= 2");
    // Doubled boundary weight nq is always on the r grid.
    return (ipow(q, n) - r_count(q, n, HalfInt::halves(static_cast<long long>(n) * q))) / 2;
}

BigInt construction3_period(int q, int n) {
    check_modulus_nonbinary(q);
    if (n < 2) throw std::invalid_argument("construction3_period requires n >= 2");
    BigInt boundary = 0;
    if ((static_cast<long long>(n) * q) % 2 == 0)
        boundary = k_count(q, n, static_cast<long long>(n) * q / 2);
    return (ipow(q - 1, n) - boundary) / 2;
}

BigInt construction3_weight(int q, int n) {
    check_modulus_nonbinary(q);
    if (n < 2) throw std::invalid_argument("construction3_weight requires n >= 2");
    BigInt total = 0;
    for (long long w = n; 2 * w < static_cast<long long>(n) * q; ++w)
        total += w * k_count(q, n, w);
    if (total % n != 0)
        throw std::logic_error("zero-free construction weight is not divisible by n");
    return total / n;
}

}  // namespace oriseq::counting
