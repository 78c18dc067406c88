#include "oriseq/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace oriseq {

void check_modulus(int q) {
    if (q < 2) throw std::invalid_argument("alphabet modulus must satisfy q >= 2");
}

void check_modulus_nonbinary(int q) {
    if (q < 3) throw std::invalid_argument("operation requires a non-binary alphabet (q >= 3)");
}

std::string HalfInt::str() const {
    if (is_whole()) return std::to_string(doubled / 2);
    // Doubled value is odd: print as x.5 with the sign carried by the
    // integer part (e.g. -7 doubled -> "-3.5").
    long long half = doubled / 2;
    if (doubled < 0 && doubled % 2 != 0) half -= 1;
    return std::to_string(half) + ".5";
}

namespace {

void check_symbols(int q, const Symbols& symbols, const char* what) {
    check_modulus(q);
    if (symbols.empty()) throw std::invalid_argument(std::string(what) + " must be non-empty");
    for (int v : symbols) {
        if (v < 0 || v >= q)
            throw std::invalid_argument(std::string(what) + " symbol out of range [0, q)");
    }
}

}  // namespace

Tuple::Tuple(int q, Symbols symbols) : q_(q), symbols_(std::move(symbols)) {
    check_symbols(q_, symbols_, "tuple");
}

RingSequence::RingSequence(int q, Symbols symbols) : q_(q), symbols_(std::move(symbols)) {
    check_symbols(q_, symbols_, "sequence");
}

Tuple reversed(const Tuple& u) {
    Symbols s(u.symbols().rbegin(), u.symbols().rend());
    return Tuple(u.q(), std::move(s));
}

Tuple negated(const Tuple& u) {
    Symbols s = u.symbols();
    for (int& v : s) v = (u.q() - v) % u.q();
    return Tuple(u.q(), std::move(s));
}

bool is_negasymmetric(const Tuple& u) {
    const int n = u.size();
    const int q = u.q();
    for (int i = 0; i < n; ++i) {
        if (u[i] != (q - u[n - 1 - i]) % q) return false;
    }
    return true;
}

BigInt count_negasymmetric(int q, int n) {
    check_modulus(q);
    if (n < 2) throw std::invalid_argument("count_negasymmetric requires n >= 2");
    BigInt base = q;
    if (n % 2 == 0) return boost::multiprecision::pow(base, static_cast<unsigned>(n / 2));
    BigInt half = boost::multiprecision::pow(base, static_cast<unsigned>((n - 1) / 2));
    return q % 2 == 0 ? 2 * half : half;
}

long long weight(const Tuple& u) {
    long long w = 0;
    for (int v : u.symbols()) w += v;
    return w;
}

HalfInt pseudoweight(const Tuple& u) {
    long long doubled = 0;
    for (int v : u.symbols()) doubled += v == 0 ? u.q() : 2 * v;
    return HalfInt::halves(doubled);
}

std::vector<Tuple> windows(const RingSequence& s, int n) {
    if (n < 1) throw std::invalid_argument("window length must be >= 1");
    const int m = s.period();
    std::vector<Tuple> out;
    out.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        Symbols w(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(j)] = s[(i + j) % m];
        out.emplace_back(s.q(), std::move(w));
    }
    return out;
}

int weight_mod_q(const RingSequence& s) {
    long long w = 0;
    for (int v : s.symbols()) w += v;
    return static_cast<int>(w % s.q());
}

long long weight(const RingSequence& s) {
    long long w = 0;
    for (int v : s.symbols()) w += v;
    return w;
}

RingSequence reversed(const RingSequence& s) {
    Symbols r(s.symbols().rbegin(), s.symbols().rend());
    return RingSequence(s.q(), std::move(r));
}

RingSequence negated(const RingSequence& s) {
    Symbols r = s.symbols();
    for (int& v : r) v = (s.q() - v) % s.q();
    return RingSequence(s.q(), std::move(r));
}

RingSequence translated(const RingSequence& s, int b) {
    const int q = s.q();
    int off = ((b % q) + q) % q;
    Symbols r = s.symbols();
    for (int& v : r) v = (v + off) % q;
    return RingSequence(q, std::move(r));
}

RingSequence shifted(const RingSequence& s, int k) {
    const int m = s.period();
    int off = ((k % m) + m) % m;
    Symbols r(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) r[static_cast<size_t>(i)] = s[(i + off) % m];
    return RingSequence(s.q(), std::move(r));
}

namespace {

// Booth's least-rotation algorithm; returns the starting index.
int least_rotation_index(const Symbols& s) {
    const int n = static_cast<int>(s.size());
    std::vector<int> f(static_cast<size_t>(2 * n), -1);
    int k = 0;
    for (int j = 1; j < 2 * n; ++j) {
        const int sj = s[static_cast<size_t>(j % n)];
        int i = f[static_cast<size_t>(j - k - 1)];
        while (i != -1 && sj != s[static_cast<size_t>((k + i + 1) % n)]) {
            if (sj < s[static_cast<size_t>((k + i + 1) % n)]) k = j - i - 1;
            i = f[static_cast<size_t>(i)];
        }
        if (i == -1 && sj != s[static_cast<size_t>((k + i + 1) % n)]) {
            if (sj < s[static_cast<size_t>(k % n)]) k = j;
            f[static_cast<size_t>(j - k)] = -1;
        } else {
            f[static_cast<size_t>(j - k)] = i + 1;
        }
    }
    return k % n;
}

}  // namespace

RingSequence canonical_rotation(const RingSequence& s) {
    return shifted(s, least_rotation_index(s.symbols()));
}

}  // namespace oriseq
