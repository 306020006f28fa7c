#include "psido/binomial.hpp"

#include <stdexcept>

namespace psido {

std::int64_t binom_int(std::int64_t k, std::int64_t t)
{
    if (t < 0)
        throw std::invalid_argument("binomial lower index must be non-negative");
    if (k >= 0 && t > k)
        return 0;
    // C(k, s+1) = C(k, s)·(k−s)/(s+1); every intermediate is an integer.
    __int128 r = 1;
    for (std::int64_t s = 0; s < t; ++s) {
        r = r * (static_cast<__int128>(k) - s);
        r /= (s + 1);
        if (r > INT64_MAX || r < INT64_MIN)
            throw std::overflow_error("binomial coefficient does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(r);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m)
{
    std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw std::logic_error("binomial: divisor not coprime to modulus");
    const auto mm = static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

std::uint64_t powmod(std::uint64_t b, std::int64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

BinomialSequence::BinomialSequence(std::int64_t k, std::uint64_t modulus) : k_(k), m_(modulus)
{
    if (modulus == 0)
        throw std::invalid_argument("binomial modulus must be positive");
    std::uint64_t rest = modulus;
    for (std::uint64_t p = 2; p * p <= rest; ++p)
        if (rest % p == 0) {
            primes_.push_back({p, 0});
            while (rest % p == 0)
                rest /= p;
        }
    if (rest > 1)
        primes_.push_back({rest, 0});
    unit_ = 1 % m_;
}

std::uint64_t BinomialSequence::strip(std::uint64_t x, int direction)
{
    for (auto& [p, e] : primes_)
        while (x % p == 0) {
            x /= p;
            e += direction;
        }
    return x;
}

void BinomialSequence::advance()
{
    if (!vanished_) {
        const __int128 top = static_cast<__int128>(k_) - t_;
        if (top == 0) {
            vanished_ = true;
        } else {
            if (top < 0)
                negative_ = !negative_;
            const auto mag = static_cast<std::uint64_t>(top < 0 ? -top : top);
            unit_ = mulmod(unit_, strip(mag, +1) % m_, m_);
            const std::uint64_t den = strip(static_cast<std::uint64_t>(t_ + 1), -1);
            unit_ = mulmod(unit_, inverse_mod(den, m_), m_);
        }
    }
    ++t_;
}

std::uint64_t BinomialSequence::value() const
{
    if (vanished_ || m_ == 1)
        return 0;
    std::uint64_t v = unit_;
    for (const auto& [p, e] : primes_)
        v = mulmod(v, powmod(p, e, m_), m_);
    if (negative_ && v != 0)
        v = m_ - v;
    return v;
}

std::uint64_t binom_mod(std::int64_t k, std::int64_t t, std::uint64_t modulus)
{
    if (t < 0)
        throw std::invalid_argument("binomial lower index must be non-negative");
    BinomialSequence seq(k, modulus);
    while (seq.index() < t)
        seq.advance();
    return seq.value();
}

} // namespace psido
