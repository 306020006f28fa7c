#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace psido {

/// Generalized binomial k(k−1)…(k−t+1)/t! for any integer k and t ≥ 0.
/// Throws std::overflow_error when the value does not fit in 64 bits.
std::int64_t binom_int(std::int64_t k, std::int64_t t);

/// C(k, 0), C(k, 1), C(k, 2), ... reduced mod m, one step at a time.
///
/// Keeps the running value as sign · unit · Π p^e over the primes p of m, so
/// dividing by t+1 only ever needs inverses of numbers coprime to m.
class BinomialSequence {
public:
    BinomialSequence(std::int64_t k, std::uint64_t modulus);

    std::int64_t index() const { return t_; }
    /// C(k, index()) in [0, modulus).
    std::uint64_t value() const;
    void advance();

private:
    std::uint64_t strip(std::uint64_t x, int direction);

    std::int64_t k_;
    std::int64_t t_ = 0;
    std::uint64_t m_;
    std::uint64_t unit_ = 1;
    bool negative_ = false;
    bool vanished_ = false;
    std::vector<std::pair<std::uint64_t, std::int64_t>> primes_; // prime, current exponent
};

/// C(k, t) reduced into [0, modulus).
std::uint64_t binom_mod(std::int64_t k, std::int64_t t, std::uint64_t modulus);

} // namespace psido
