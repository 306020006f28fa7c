#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "psido/ring.hpp"

namespace psido {

/// Z/n.
RingPtr make_zn(std::uint32_t n, std::size_t max_order = default_max_order);

/// Z_m[a1..ak]/(a1^e1, ..., ak^ek) on the monomial basis. A single generator
/// is named `a`, several are named `a1`, `a2`, ...
RingPtr make_truncated_poly(std::uint32_t modulus, std::span<const std::uint32_t> exponents,
                            std::size_t max_order = default_max_order);

/// Upper-triangular 2x2 matrices over Z_m, generators e11, e12, e22.
RingPtr make_triangular_matrix_ring(std::uint32_t modulus, std::uint32_t size = 2,
                                    std::size_t max_order = default_max_order);

/// Full 2x2 matrices over Z_m, generators e11, e12, e21, e22.
RingPtr make_matrix_ring(std::uint32_t modulus, std::uint32_t size = 2,
                         std::size_t max_order = default_max_order);

/// Direct product R1 x R2; element (r1, r2) has index r1 + |R1|*r2.
RingPtr make_product(const RingPtr& left, const RingPtr& right,
                     std::size_t max_order = default_max_order);

/// Index of (r1, r2) in a ring built by make_product.
inline Elem product_index(const FiniteRing& left, Elem r1, Elem r2)
{
    return r1 + static_cast<Elem>(left.order()) * r2;
}

/// Monomial bookkeeping for make_truncated_poly rings.
struct TruncPolyLayout {
    std::uint32_t modulus;
    std::vector<std::uint32_t> exponents;
    std::size_t monomials; // product of exponents

    explicit TruncPolyLayout(const TruncPolyInfo& info);
    /// Exponent vector of monomial k (mixed radix, first variable fastest).
    std::vector<std::uint32_t> exponent_vector(std::size_t k) const;
    std::size_t monomial_index(std::span<const std::uint32_t> exps) const;
    /// Coefficient vector of an element index (base-modulus digits).
    std::vector<std::uint32_t> coefficients(Elem e) const;
    Elem element(std::span<const std::uint32_t> coeffs) const;
    /// Element of the single monomial with coefficient 1.
    Elem monomial_element(std::size_t k) const;
};

} // namespace psido
