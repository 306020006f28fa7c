#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace psido {

/// Z_m[a1..ak]/(a1^e1, ..., ak^ek) on dense monomial coefficient vectors.
///
/// Unlike make_truncated_poly this builds no Cayley tables, so the order
/// m^(e1⋯ek) may be far beyond the table bound. Monomial k has exponent
/// vector given by mixed radix digits of k, first variable fastest.
class TruncatedAlgebra {
public:
    using Poly = std::vector<std::uint32_t>;

    /// Throws std::length_error above `max_monomials`.
    TruncatedAlgebra(std::uint32_t modulus, std::vector<std::uint32_t> exponents,
                     std::size_t max_monomials = 1u << 16);

    std::uint32_t modulus() const { return modulus_; }
    const std::vector<std::uint32_t>& exponents() const { return exponents_; }
    std::size_t monomials() const { return monomials_; }
    /// log2 of the number of elements, as a real number.
    double log2_order() const;

    Poly zero() const { return Poly(monomials_, 0); }
    Poly one() const;
    /// a_{i+1}. Zero when its exponent bound is 1.
    Poly generator(std::size_t i) const;
    std::string generator_name(std::size_t i) const;

    Poly add(const Poly& a, const Poly& b) const;
    Poly mul(const Poly& a, const Poly& b) const;
    bool is_zero(const Poly& a) const;

    /// Least k ≥ 1 with a^k = 0, or nullopt if a^cap ≠ 0.
    std::optional<std::size_t> nilpotency_index(const Poly& a, std::size_t cap) const;

    std::string display(const Poly& a) const;

private:
    std::vector<std::uint32_t> digits(std::size_t k) const;

    std::uint32_t modulus_;
    std::vector<std::uint32_t> exponents_;
    std::size_t monomials_ = 1;
    std::vector<std::size_t> stride_;
    std::vector<std::vector<std::uint32_t>> digits_; // exponent vector per monomial
};

/// Σ coeffs[k] x^(low+k) with coefficients in a commutative TruncatedAlgebra
/// and zero derivation; multiplication is plain convolution.
struct LaurentPoly {
    std::int64_t low = 0;
    std::vector<TruncatedAlgebra::Poly> coeffs;
};

LaurentPoly laurent_mul(const TruncatedAlgebra& alg, const LaurentPoly& f, const LaurentPoly& g);
bool laurent_is_zero(const TruncatedAlgebra& alg, const LaurentPoly& f);
std::string laurent_display(const TruncatedAlgebra& alg, const LaurentPoly& f);

/// f = Σ_{i=1}^{n} a_i x^(1−i) over Z_m[a1..an]/(a_i^(i+1)).
LaurentPoly counterexample_series(const TruncatedAlgebra& alg);

} // namespace psido
