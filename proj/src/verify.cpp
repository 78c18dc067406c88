#include "oriseq/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oriseq::verify {

namespace {

// Window symbol lists mapped to their sorted occurrence indices.
std::map<Symbols, std::vector<int>> window_index(const std::vector<Tuple>& ws) {
    std::map<Symbols, std::vector<int>> out;
    for (int i = 0; i < static_cast<int>(ws.size()); ++i)
        out[ws[static_cast<size_t>(i)].symbols()].push_back(i);
    return out;
}

std::optional<std::pair<int, int>> first_duplicate(
    const std::vector<Tuple>& ws, const std::map<Symbols, std::vector<int>>& idx) {
    for (int i = 0; i < static_cast<int>(ws.size()); ++i) {
        const auto& occ = idx.at(ws[static_cast<size_t>(i)].symbols());
        auto it = std::upper_bound(occ.begin(), occ.end(), i);
        if (it != occ.end()) return std::make_pair(i, *it);
    }
    return std::nullopt;
}

// First (i, j) in scan order with ws[j] == image(ws[i]); j may equal i.
template <typename F>
std::optional<std::pair<int, int>> first_image_hit(
    const std::vector<Tuple>& ws, const std::map<Symbols, std::vector<int>>& idx, F image) {
    for (int i = 0; i < static_cast<int>(ws.size()); ++i) {
        auto it = idx.find(image(ws[static_cast<size_t>(i)]).symbols());
        if (it != idx.end()) return std::make_pair(i, it->second.front());
    }
    return std::nullopt;
}

}  // namespace

Verdict is_n_window(const RingSequence& s, int n) {
    auto ws = windows(s, n);
    auto idx = window_index(ws);
    if (auto dup = first_duplicate(ws, idx)) return {Property::n_window, false, dup};
    return {Property::n_window, true, std::nullopt};
}

Verdict is_orientable(const RingSequence& s, int n) {
    auto ws = windows(s, n);
    auto idx = window_index(ws);
    if (auto dup = first_duplicate(ws, idx)) return {Property::orientable, false, dup};
    if (auto hit = first_image_hit(ws, idx, [](const Tuple& u) { return reversed(u); }))
        return {Property::orientable, false, hit};
    return {Property::orientable, true, std::nullopt};
}

Verdict is_negative_orientable(const RingSequence& s, int n) {
    auto ws = windows(s, n);
    auto idx = window_index(ws);
    if (auto dup = first_duplicate(ws, idx))
        return {Property::negative_orientable, false, dup};
    if (auto hit =
            first_image_hit(ws, idx, [](const Tuple& u) { return negated(reversed(u)); }))
        return {Property::negative_orientable, false, hit};
    return {Property::negative_orientable, true, std::nullopt};
}

RunProfile run_profile(const RingSequence& s) {
    const int m = s.period();
    const auto& sym = s.symbols();
    if (std::all_of(sym.begin(), sym.end(), [&](int v) { return v == sym[0]; }))
        throw std::invalid_argument("run profile of a constant sequence is undefined");

    // Anchor at a run boundary so wrap-around runs are seen whole.
    int anchor = 0;
    while (sym[static_cast<size_t>(anchor)] ==
           sym[static_cast<size_t>((anchor + m - 1) % m)])
        ++anchor;

    RunProfile profile;
    profile.max_run_length.assign(static_cast<size_t>(s.q()), 0);
    int pos = anchor;
    int covered = 0;
    while (covered < m) {
        const int symbol = sym[static_cast<size_t>(pos)];
        int len = 1;
        while (len < m && sym[static_cast<size_t>((pos + len) % m)] == symbol) ++len;
        profile.runs.push_back({symbol, pos, len});
        auto& best = profile.max_run_length[static_cast<size_t>(symbol)];
        best = std::max(best, len);
        covered += len;
        pos = (pos + len) % m;
    }
    std::sort(profile.runs.begin(), profile.runs.end(),
              [](const Run& a, const Run& b) { return a.start < b.start; });
    return profile;
}

Verdict is_good(const RingSequence& s, int n) {
    if (n < 2) throw std::invalid_argument("is_good requires n >= 2");
    const auto& sym = s.symbols();
    const int m = s.period();
    if (std::all_of(sym.begin(), sym.end(), [](int v) { return v == 0; }))
        return {Property::good, false, std::make_pair(0, m)};
    if (std::none_of(sym.begin(), sym.end(), [](int v) { return v == 0; }))
        return {Property::good, true, std::nullopt};
    for (const Run& r : run_profile(s).runs) {
        if (r.symbol == 0 && r.length > n - 2)
            return {Property::good, false, std::make_pair(r.start, r.length)};
    }
    return {Property::good, true, std::nullopt};
}

std::vector<Tuple> negasymmetric_tuples(int q, int length) {
    check_modulus(q);
    if (length < 1) throw std::invalid_argument("tuple length must be >= 1");
    std::vector<Tuple> out;
    const int half = length / 2;
    std::vector<int> middles;
    if (length % 2 == 1) {
        middles.push_back(0);
        if (q % 2 == 0) middles.push_back(q / 2);
    } else {
        middles.push_back(-1);  // placeholder: no middle position
    }

    Symbols head(static_cast<size_t>(half), 0);
    while (true) {
        for (int mid : middles) {
            Symbols t(static_cast<size_t>(length));
            for (int i = 0; i < half; ++i) {
                t[static_cast<size_t>(i)] = head[static_cast<size_t>(i)];
                t[static_cast<size_t>(length - 1 - i)] =
                    (q - head[static_cast<size_t>(i)]) % q;
            }
            if (length % 2 == 1) t[static_cast<size_t>(half)] = mid;
            out.emplace_back(q, std::move(t));
        }
        // Odometer over the free first half; empty half means a single pass.
        int i = half - 1;
        while (i >= 0 && head[static_cast<size_t>(i)] == q - 1) {
            head[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++head[static_cast<size_t>(i)];
    }
    return out;
}

bool parity_check(const RingSequence& s, int n) {
    if (n < 2) throw std::invalid_argument("parity_check requires n >= 2");
    if (!is_negative_orientable(s, n).holds)
        throw std::invalid_argument("parity_check input must be negative orientable at order n");

    // Prefix counts over the windows of S and -S^R. The two window sets are
    // disjoint for a negative orientable S, so counts add.
    std::map<Symbols, int> prefix_count;
    auto tally = [&](const RingSequence& r) {
        for (const Tuple& w : windows(r, n)) {
            Symbols prefix(w.symbols().begin(), w.symbols().end() - 1);
            ++prefix_count[prefix];
        }
    };
    tally(s);
    tally(negated(reversed(s)));

    for (const Tuple& v : negasymmetric_tuples(s.q(), n - 1)) {
        auto it = prefix_count.find(v.symbols());
        const int count = it == prefix_count.end() ? 0 : it->second;
        if (count % 2 != 0) return false;
    }
    return true;
}

}  // namespace oriseq::verify
