#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <vector>

namespace oriseq {

using Symbols = std::vector<int>;
using BigInt = boost::multiprecision::cpp_int;

/// Throws std::invalid_argument unless q >= 2.
void check_modulus(int q);

/// Throws std::invalid_argument unless q >= 3 (binary alphabets are out of scope).
void check_modulus_nonbinary(int q);

/// Exact half-integer arithmetic. Values are stored doubled so that
/// comparisons against boundaries like n*q/2 never touch floating point.
struct HalfInt {
    long long doubled = 0;

    static HalfInt whole(long long v) { return HalfInt{2 * v}; }
    static HalfInt halves(long long d) { return HalfInt{d}; }

    bool is_whole() const { return doubled % 2 == 0; }
    auto operator<=>(const HalfInt&) const = default;
    HalfInt operator+(HalfInt o) const { return HalfInt{doubled + o.doubled}; }
    HalfInt operator-(HalfInt o) const { return HalfInt{doubled - o.doubled}; }

    /// "7" for whole values, "3.5" otherwise.
    std::string str() const;
};

/// A q-ary word of fixed length n >= 1. Symbols are validated to lie in
/// [0, q) at construction; instances are immutable afterwards.
class Tuple {
  public:
    Tuple(int q, Symbols symbols);

    int q() const { return q_; }
    int size() const { return static_cast<int>(symbols_.size()); }
    const Symbols& symbols() const { return symbols_; }
    int operator[](int i) const { return symbols_[static_cast<size_t>(i)]; }
    bool operator==(const Tuple& o) const { return q_ == o.q_ && symbols_ == o.symbols_; }

  private:
    int q_;
    Symbols symbols_;
};

/// One period of a cyclic q-ary sequence. The stored length is the period
/// used by every operation here; callers keeping a non-least period get
/// whatever window duplicates that implies (verify::is_n_window flags them).
class RingSequence {
  public:
    RingSequence(int q, Symbols symbols);

    int q() const { return q_; }
    int period() const { return static_cast<int>(symbols_.size()); }
    const Symbols& symbols() const { return symbols_; }
    int operator[](int i) const { return symbols_[static_cast<size_t>(i)]; }
    bool operator==(const RingSequence& o) const { return q_ == o.q_ && symbols_ == o.symbols_; }

  private:
    int q_;
    Symbols symbols_;
};

Tuple reversed(const Tuple& u);

/// Symbol-wise negation mod q; fixed points of negation (0, and q/2 for even
/// q) stay put.
Tuple negated(const Tuple& u);

/// True iff u equals negated(reversed(u)).
bool is_negasymmetric(const Tuple& u);

/// Number of negasymmetric n-tuples over Z_q:
///   q^(n/2) for even n, q^((n-1)/2) for odd n and odd q,
///   2*q^((n-1)/2) for odd n and even q.  Requires q >= 2, n >= 2.
BigInt count_negasymmetric(int q, int n);

/// Plain integer symbol sum (not reduced mod q).
long long weight(const Tuple& u);

/// Pseudoweight: sum of f(u_i) with f(0) = q/2 and f(u) = u otherwise.
HalfInt pseudoweight(const Tuple& u);

/// All period-many n-windows of S in position order, indices taken mod the
/// period (so n may exceed the period).
std::vector<Tuple> windows(const RingSequence& s, int n);

/// Symbol sum reduced mod q (the sequence weight w_q).
int weight_mod_q(const RingSequence& s);

/// Plain integer symbol sum over one period.
long long weight(const RingSequence& s);

RingSequence reversed(const RingSequence& s);
RingSequence negated(const RingSequence& s);

/// Adds b (any integer) to every symbol mod q.
RingSequence translated(const RingSequence& s, int b);

/// Left rotation by k (any integer): result[i] = s[(i + k) mod period].
RingSequence shifted(const RingSequence& s, int k);

/// Lexicographically least rotation (Booth's algorithm).
RingSequence canonical_rotation(const RingSequence& s);

}  // namespace oriseq
