#include "oriseq/lempel.hpp"

#include "oriseq/counting.hpp"
#include "oriseq/verify.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace oriseq::lempel {

namespace {

int normalize(int v, int q) { return ((v % q) + q) % q; }

int unit_inverse(int beta, int q) {
    beta = normalize(beta, q);
    if (std::gcd(beta, q) != 1) throw std::invalid_argument("beta must be a unit mod q");
    // Extended Euclid on small moduli.
    int t = 0, new_t = 1, r = q, new_r = beta;
    while (new_r != 0) {
        const int quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    return normalize(t, q);
}

}  // namespace

RingSequence d_beta(const RingSequence& s, int beta) {
    const int q = s.q();
    beta = normalize(beta, q);
    if (std::gcd(beta, q) != 1) throw std::invalid_argument("beta must be a unit mod q");
    const int m = s.period();
    Symbols out(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j)
        out[static_cast<size_t>(j)] = normalize(beta * (s[(j + 1) % m] - s[j]), q);
    return RingSequence(q, std::move(out));
}

int additive_order(int w, int q) {
    check_modulus(q);
    return q / std::gcd(normalize(w, q), q);
}

LiftResult inverse_lift(const RingSequence& s, int n, int start, int beta) {
    const int q = s.q();
    if (start < 0 || start >= q) throw std::invalid_argument("start symbol out of range [0, q)");
    const int beta_inv = unit_inverse(beta, q);

    const bool input_nos = verify::is_negative_orientable(s, n).holds;
    if (!input_nos && !verify::is_orientable(s, n).holds)
        throw std::invalid_argument(
            "lift input must be negative orientable or orientable at order n");

    const int m = s.period();
    const int w = weight_mod_q(s);
    const int h = additive_order(w, q);
    Symbols out;
    out.reserve(static_cast<size_t>(h) * static_cast<size_t>(m));
    int a = start;
    for (long long j = 0; j < static_cast<long long>(h) * m; ++j) {
        out.push_back(a);
        a = normalize(a + beta_inv * s[static_cast<int>(j % m)], q);
    }
    if (a != start) throw std::logic_error("internal error: lift did not close after h periods");

    LiftResult result{RingSequence(q, std::move(out)), m, w, h, start, normalize(beta, q)};
    const auto verdict = input_nos ? verify::is_orientable(result.output, n + 1)
                                   : verify::is_negative_orientable(result.output, n + 1);
    if (!verdict.holds)
        throw std::logic_error("internal error: lifted sequence failed verification at order n+1");
    return result;
}

std::vector<int> find_unit_adjustment(int q, int w) {
    check_modulus_nonbinary(q);
    w = normalize(w, q);
    if (std::gcd(w, q) == 1) return {};
    if (q == 6) {
        switch (w) {
            case 0:
            case 2: return {1};
            case 3: return {2};
            case 4: return {1, 2};
            default: break;
        }
        throw std::logic_error("internal error: unexpected non-unit weight mod 6");
    }
    for (int i = 1; 2 * i < q; ++i) {
        if (std::gcd(normalize(w - i, q), q) == 1) return {i};
    }
    throw std::logic_error("internal error: no unit adjustment below q/2");
}

RingSequence delete_from_uniform_run(const RingSequence& s, int symbol, int n) {
    if (symbol < 0 || symbol >= s.q()) throw std::invalid_argument("symbol out of range [0, q)");
    const auto profile = verify::run_profile(s);
    const verify::Run* hit = nullptr;
    for (const auto& run : profile.runs) {
        if (run.symbol == symbol && run.length >= n) {
            hit = &run;
            break;
        }
    }
    if (hit == nullptr)
        throw std::invalid_argument("sequence has no uniform n-tuple of the requested symbol");
    Symbols out = s.symbols();
    out.erase(out.begin() + hit->start);
    RingSequence result(s.q(), std::move(out));
    if (!verify::is_negative_orientable(result, n).holds)
        throw std::logic_error("internal error: deletion broke negative orientability");
    return result;
}

RingSequence ensure_unit_weight(const RingSequence& s, int n) {
    RingSequence out = s;
    for (int symbol : find_unit_adjustment(s.q(), weight_mod_q(s)))
        out = delete_from_uniform_run(out, symbol, n);
    return out;
}

RingSequence extend_run(const RingSequence& s, int a) {
    if (a < 0 || a >= s.q()) throw std::invalid_argument("symbol out of range [0, q)");
    const auto& sym = s.symbols();
    if (std::find(sym.begin(), sym.end(), a) == sym.end())
        throw std::invalid_argument("extend_run symbol does not occur in the sequence");
    const auto profile = verify::run_profile(s);
    const int longest = profile.max_run_length[static_cast<size_t>(a)];
    for (const auto& run : profile.runs) {
        if (run.symbol == a && run.length == longest) {
            Symbols out = sym;
            out.insert(out.begin() + run.start, a);
            return RingSequence(s.q(), std::move(out));
        }
    }
    throw std::logic_error("internal error: maximal run not found");
}

TowerResult recursive_tower(const RingSequence& seed, int seed_order, int target_order) {
    const int q = seed.q();
    check_modulus_nonbinary(q);
    if (seed_order < 2) throw std::invalid_argument("seed order must be >= 2");
    if (target_order < seed_order)
        throw std::invalid_argument("target order must be >= seed order");
    if (std::gcd(weight_mod_q(seed), q) != 1)
        throw std::invalid_argument("tower seed must have unit weight mod q");

    bool orientable = false;
    if (verify::is_negative_orientable(seed, seed_order).holds) {
        orientable = false;
    } else if (verify::is_orientable(seed, seed_order).holds) {
        orientable = true;
    } else {
        throw std::invalid_argument(
            "tower seed must be negative orientable or orientable at seed order");
    }
    if (!verify::is_good(seed, seed_order).holds)
        throw std::invalid_argument("tower seed must be good (zero runs of length <= n-2)");

    TowerResult result{seed, {}};
    result.trace.push_back(
        {seed_order, seed.period(), weight_mod_q(seed), std::nullopt, orientable});

    for (int order = seed_order; order < target_order; ++order) {
        const long long m = result.sequence.period();
        LiftResult lifted = inverse_lift(result.sequence, order);
        if (lifted.h != q)
            throw std::logic_error("internal error: tower lift lost unit weight");
        const int a = normalize(1 - weight_mod_q(lifted.output), q);
        orientable = !orientable;

        // A violating window pair in the extended sequence must place the
        // two symbols flanking the extended run in mirrored slots, so the
        // earliest maximal run can fail (equal flanks make a palindromic
        // window). Scan the maximal runs of a in start order and keep the
        // first insertion that verifies.
        const auto profile = verify::run_profile(lifted.output);
        const int longest = profile.max_run_length[static_cast<size_t>(a)];
        std::optional<RingSequence> next;
        for (const auto& run : profile.runs) {
            if (run.symbol != a || run.length != longest) continue;
            Symbols extended = lifted.output.symbols();
            extended.insert(extended.begin() + run.start, a);
            RingSequence candidate(q, std::move(extended));
            const auto verdict = orientable
                                     ? verify::is_orientable(candidate, order + 1)
                                     : verify::is_negative_orientable(candidate, order + 1);
            if (!verdict.holds || !verify::is_good(candidate, order + 1).holds) continue;
            next = std::move(candidate);
            break;
        }
        if (!next)
            throw std::logic_error("internal error: no maximal run extension verifies");
        if (next->period() != q * m + 1)
            throw std::logic_error("internal error: tower period is not q*m + 1");

        result.sequence = std::move(*next);
        result.trace.push_back(
            {order + 1, result.sequence.period(), weight_mod_q(result.sequence), a, orientable});
    }
    return result;
}

BigInt predicted_tower_period(const BigInt& m, int q, int s) {
    check_modulus(q);
    if (s < 0) throw std::invalid_argument("step count must be >= 0");
    BigInt qs = 1;
    for (int i = 0; i < s; ++i) qs *= q;
    return qs * m + (qs - 1) / (q - 1);
}

namespace {

std::pair<RingSequence, construct::ConstructionReport> lift_to_orientable(
    const RingSequence& nos, int n, const BigInt& floor_bound) {
    RingSequence adjusted = ensure_unit_weight(nos, n);
    LiftResult lifted = inverse_lift(adjusted, n);
    if (lifted.h != nos.q())
        throw std::logic_error("internal error: adjusted sequence weight is not a unit");

    construct::ConstructionReport report;
    report.method = construct::Method::os_lift;
    report.q = nos.q();
    report.n = n + 1;
    report.period = lifted.output.period();
    report.weight_mod_q = weight_mod_q(lifted.output);
    report.predicted_period = BigInt(nos.q()) * adjusted.period();
    report.bound = floor_bound;
    report.gap = report.bound - report.period;
    if (report.gap > 0)
        throw std::logic_error("internal error: lifted period fell below the guaranteed floor");
    return {std::move(lifted.output), report};
}

}  // namespace

std::pair<RingSequence, construct::ConstructionReport> build_os3(int q) {
    check_modulus_nonbinary(q);
    RingSequence nos = construct::nos2_construction1(q).first;
    const long long base = static_cast<long long>(q) * (q - 1) / 2;
    const int slack = q % 2 == 1 ? 1 : (q == 6 ? 3 : 2);
    return lift_to_orientable(nos, 2, BigInt(q) * (base - slack));
}

std::pair<RingSequence, construct::ConstructionReport> build_os_n(int q, int n) {
    check_modulus_nonbinary(q);
    if (n < 3) throw std::invalid_argument("build_os_n requires n >= 3");
    RingSequence nos = construct::nos_construction2(q, n - 1).first;
    const BigInt r_mid = counting::r_count(
        q, n - 1, HalfInt::halves(static_cast<long long>(n - 1) * q));
    BigInt qn1 = 1;
    for (int i = 0; i < n - 1; ++i) qn1 *= q;
    const BigInt floor_bound = BigInt(q) * (qn1 - r_mid - (q == 6 ? 4 : 2)) / 2;
    return lift_to_orientable(nos, n - 1, floor_bound);
}

}  // namespace oriseq::lempel
