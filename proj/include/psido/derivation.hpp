#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "psido/ring.hpp"

namespace psido {

class Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

/// Where the δ-orbit a, δ(a), δ²(a), ... of an element enters its cycle.
/// The orbit visits `stem` distinct elements before the cycle of length
/// `cycle`; an orbit that reaches 0 ends in the one-element cycle {0}.
struct OrbitShape {
    std::uint32_t stem = 0;
    std::uint32_t cycle = 1;
};

/// An additive map d on a finite ring, tabulated. `validate_derivation`
/// decides additivity and the Leibniz rule; construction only checks shape.
class Derivation {
public:
    /// Throws StructuralError when the table length differs from the order or
    /// an entry is out of range.
    Derivation(RingPtr ring, std::vector<Elem> table, std::string description = "table");

    static DerivationPtr zero(const RingPtr& ring);
    /// a ↦ c·a − a·c.
    static DerivationPtr inner(const RingPtr& ring, Elem c);
    static DerivationPtr from_table(const RingPtr& ring, std::vector<Elem> table);
    /// Extension by the Leibniz rule of prescribed images of the generators of
    /// a truncated polynomial ring. Unlisted generators map to 0. The result
    /// still has to pass validate_derivation: the images must respect the
    /// truncation relations.
    static DerivationPtr from_generator_images(const RingPtr& ring,
                                               const std::map<std::string, Elem>& images);
    /// d1 x d2 on a ring built by make_product.
    static DerivationPtr product(const RingPtr& ring, const Derivation& left, const Derivation& right);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Elem>& table() const { return table_; }
    const std::string& description() const { return description_; }

    Elem operator()(Elem a) const { return table_[a]; }
    /// δ^t(a).
    Elem power(Elem a, std::uint64_t t) const;

    bool is_zero() const { return is_zero_; }

    const OrbitShape& orbit_shape(Elem a) const { return shapes_[a]; }
    /// Distinct elements of {δ^t(a) : t ≥ 0}, in orbit order.
    std::vector<Elem> orbit(Elem a) const;
    /// Elements on the cycle the orbit of `a` eventually repeats.
    std::vector<Elem> orbit_cycle(Elem a) const;
    /// True when some δ^t(a) is 0.
    bool orbit_terminates(Elem a) const;

private:
    RingPtr ring_;
    std::vector<Elem> table_;
    std::string description_;
    std::vector<OrbitShape> shapes_;
    bool is_zero_ = false;
};

/// Additivity and Leibniz failures with witness pairs; empty iff d is a
/// derivation. Throws StructuralError if d belongs to a ring of another order.
std::vector<Violation> validate_derivation(const FiniteRing& r, const Derivation& d,
                                           Exec exec = Exec::parallel);

/// Image δ^j(S) of a set.
ElementSet delta_image(const Derivation& d, const ElementSet& s, std::uint64_t j = 1);

/// Least additive subgroup containing S and closed under δ.
ElementSet delta_closure(const FiniteRing& r, const Derivation& d, const ElementSet& s);

} // namespace psido
