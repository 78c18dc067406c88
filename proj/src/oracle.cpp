#include "oriseq/oracle.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace oriseq::oracle {

namespace {

long long checked_total(int q, int n, long long cap, const char* what) {
    check_modulus(q);
    if (n < 1) throw std::invalid_argument("tuple length must be >= 1");
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= q;
        if (total > cap)
            throw std::invalid_argument(std::string(what) + ": state space q^n exceeds the cap");
    }
    return total;
}

// Tuples are encoded big-endian: code = sum u_i * q^(n-1-i).
Symbols decode(long long code, int q, int n) {
    Symbols out(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        out[static_cast<size_t>(i)] = static_cast<int>(code % q);
        code /= q;
    }
    return out;
}

struct Search {
    int q = 0;
    int n = 0;
    long long total = 0;       // q^n arcs
    long long vertices = 0;    // q^(n-1)
    std::vector<long long> partner;
    std::vector<char> used;
    long long available = 0;   // unused arcs with unused partner, >= start arc
    long long best = 0;
    std::vector<long long> path;
    std::vector<long long> best_path;
    long long nodes = 0;

    long long tail(long long arc) const { return arc / q; }
    long long head(long long arc) const { return arc % vertices; }

    bool eligible(long long arc, long long start_arc) const {
        return arc >= start_arc && !used[static_cast<size_t>(arc)] &&
               !used[static_cast<size_t>(partner[static_cast<size_t>(arc)])] &&
               partner[static_cast<size_t>(arc)] != arc;
    }

    // Marks an arc used and returns how much `available` dropped.
    long long take(long long arc, long long start_arc) {
        long long drop = eligible(arc, start_arc) ? 1 : 0;
        const long long p = partner[static_cast<size_t>(arc)];
        if (p != arc && eligible(p, start_arc)) ++drop;
        used[static_cast<size_t>(arc)] = 1;
        available -= drop;
        return drop;
    }

    void release(long long arc, long long drop) {
        used[static_cast<size_t>(arc)] = 0;
        available += drop;
    }

    void dfs(long long vertex, long long start_arc, long long start_vertex, long long depth) {
        ++nodes;
        if (vertex == start_vertex && depth > best) {
            best = depth;
            best_path = path;
        }
        if (depth + available <= best) return;
        for (int c = 0; c < q; ++c) {
            const long long arc = vertex * q + c;
            if (!eligible(arc, start_arc)) continue;
            const long long drop = take(arc, start_arc);
            path.push_back(arc);
            dfs(head(arc), start_arc, start_vertex, depth + 1);
            path.pop_back();
            release(arc, drop);
        }
    }
};

}  // namespace

SearchResult exhaustive_max(int q, int n, TargetProperty property, long long cap) {
    if (n < 2) throw std::invalid_argument("exhaustive_max requires n >= 2");
    Search s;
    s.q = q;
    s.n = n;
    s.total = checked_total(q, n, cap, "exhaustive_max");
    s.vertices = s.total / q;
    s.partner.resize(static_cast<size_t>(s.total));
    s.used.assign(static_cast<size_t>(s.total), 0);

    for (long long code = 0; code < s.total; ++code) {
        Symbols t = decode(code, q, n);
        long long image = 0;
        for (int i = n - 1; i >= 0; --i) {
            const int v = property == TargetProperty::orientable
                              ? t[static_cast<size_t>(i)]
                              : (q - t[static_cast<size_t>(i)]) % q;
            image = image * q + v;
        }
        s.partner[static_cast<size_t>(code)] = image;
    }

    SearchResult result;
    for (long long start = 0; start < s.total; ++start) {
        if (s.partner[static_cast<size_t>(start)] == start) continue;  // self-paired window
        // Count arcs still eligible with this canonical least window; once
        // that ceiling cannot beat the best, later starts cannot either.
        s.available = 0;
        for (long long a = start; a < s.total; ++a)
            if (s.eligible(a, start)) ++s.available;
        if (s.available <= s.best) break;

        const long long drop = s.take(start, start);
        s.path.assign(1, start);
        s.dfs(s.head(start), start, s.tail(start), 1);
        s.path.clear();
        s.release(start, drop);
    }

    result.max_period = s.best;
    result.states_explored = s.nodes;
    if (s.best > 0) {
        Symbols ring;
        ring.reserve(static_cast<size_t>(s.best));
        for (long long arc : s.best_path)
            ring.push_back(static_cast<int>(arc / s.vertices));  // leading symbol of the window
        result.witness = RingSequence(q, std::move(ring));
    }
    return result;
}

BigInt exhaustive_negasymmetric_count(int q, int n, long long cap) {
    const long long total = checked_total(q, n, cap, "exhaustive_negasymmetric_count");
    BigInt count = 0;
    for (long long code = 0; code < total; ++code) {
        if (is_negasymmetric(Tuple(q, decode(code, q, n)))) ++count;
    }
    return count;
}

BigInt exhaustive_pseudoweight_count(int q, int n, HalfInt s, long long cap) {
    const long long total = checked_total(q, n, cap, "exhaustive_pseudoweight_count");
    BigInt count = 0;
    for (long long code = 0; code < total; ++code) {
        if (pseudoweight(Tuple(q, decode(code, q, n))) == s) ++count;
    }
    return count;
}

BigInt exhaustive_zerofree_weight_count(int q, int n, long long w, long long cap) {
    const long long total = checked_total(q, n, cap, "exhaustive_zerofree_weight_count");
    BigInt count = 0;
    for (long long code = 0; code < total; ++code) {
        const Symbols t = decode(code, q, n);
        bool zerofree = true;
        long long sum = 0;
        for (int v : t) {
            if (v == 0) {
                zerofree = false;
                break;
            }
            sum += v;
        }
        if (zerofree && sum == w) ++count;
    }
    return count;
}

}  // namespace oriseq::oracle
