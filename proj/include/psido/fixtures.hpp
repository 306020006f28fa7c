#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psido/derivation.hpp"
#include "psido/ring.hpp"

namespace psido {

struct FixtureMeta {
    bool delta_compatible = false;
    bool commutative = false;
    bool unital = false;
    bool zero_derivation = false;
};

struct Fixture {
    std::string name;
    RingPtr ring;
    DerivationPtr derivation;
    FixtureMeta meta;

    /// "Z/4; d = zero".
    std::string descriptor() const;
};

/// Validates ring and derivation and scans the metadata. Throws
/// std::invalid_argument naming the first violated axiom.
Fixture make_fixture(std::string name, RingPtr ring, DerivationPtr derivation);

/// The shipped (ring, derivation) pairs, all of order at most 64.
const std::vector<Fixture>& default_catalog();

std::optional<Fixture> catalog_fixture(std::string_view name);

} // namespace psido
