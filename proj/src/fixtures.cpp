#include "psido/fixtures.hpp"

#include <fmt/format.h>

#include <array>

#include "psido/constructors.hpp"
#include "psido/ideal.hpp"

namespace psido {

std::string Fixture::descriptor() const
{
    return fmt::format("{}; d = {}", ring->name(), derivation->description());
}

Fixture make_fixture(std::string name, RingPtr ring, DerivationPtr derivation)
{
    const RingValidation rv = validate_ring(*ring);
    if (!rv.ok())
        throw std::invalid_argument(
            fmt::format("fixture {}: ring violates {}", name, rv.violations.front().axiom));
    const auto dv = validate_derivation(*ring, *derivation);
    if (!dv.empty())
        throw std::invalid_argument(
            fmt::format("fixture {}: derivation violates {}", name, dv.front().axiom));
    Fixture f{std::move(name), ring, derivation, {}};
    f.meta.delta_compatible = is_delta_compatible_ring(*ring, *derivation);
    f.meta.commutative = ring->commutative();
    f.meta.unital = ring->unital();
    f.meta.zero_derivation = derivation->is_zero();
    return f;
}

namespace {

std::vector<Fixture> build_catalog()
{
    std::vector<Fixture> out;
    auto zero = [](const RingPtr& r) { return Derivation::zero(r); };
    auto gens = [](const RingPtr& r, std::string g, std::string_view image) {
        return Derivation::from_generator_images(r, {{std::move(g), *r->generator(image)}});
    };
    auto gens_one = [](const RingPtr& r, std::string g) {
        return Derivation::from_generator_images(r, {{std::move(g), *r->one()}});
    };

    const std::array<std::uint32_t, 1> e2{2};
    const std::array<std::uint32_t, 1> e3{3};
    const std::array<std::uint32_t, 2> e23{2, 3};

    const RingPtr z4 = make_zn(4);
    const RingPtr dual = make_truncated_poly(2, e2);
    const RingPtr cube = make_truncated_poly(2, e3);
    const RingPtr t23 = make_truncated_poly(2, e23);
    const RingPtr tri = make_triangular_matrix_ring(2);
    const RingPtr m2 = make_matrix_ring(2);
    const RingPtr z2 = make_zn(2);

    out.push_back(make_fixture("z4", z4, zero(z4)));
    out.push_back(make_fixture("dual-d", dual, gens_one(dual, "a")));
    out.push_back(make_fixture("dual-euler", dual, gens(dual, "a", "a")));
    out.push_back(make_fixture("trunc23", t23, zero(t23)));
    out.push_back(make_fixture("tri-inner", tri, Derivation::inner(tri, *tri->generator("e12"))));
    {
        const RingPtr p = make_product(z2, dual);
        const auto dl = Derivation::zero(z2);
        const auto dr = gens_one(dual, "a");
        out.push_back(make_fixture("prod-d", p, Derivation::product(p, *dl, *dr)));
    }
    out.push_back(make_fixture("cube-euler", cube, gens(cube, "a", "a")));
    out.push_back(make_fixture("z3", make_zn(3), zero(make_zn(3))));
    out.push_back(make_fixture("m2-inner", m2, Derivation::inner(m2, *m2->generator("e12"))));
    const RingPtr z8 = make_zn(8);
    out.push_back(make_fixture("z8", z8, zero(z8)));
    const RingPtr z2z2 = make_product(z2, z2);
    out.push_back(make_fixture("z2xz2", z2z2, zero(z2z2)));
    out.push_back(make_fixture("tri-zero", tri, zero(tri)));
    return out;
}

} // namespace

const std::vector<Fixture>& default_catalog()
{
    static const std::vector<Fixture> catalog = build_catalog();
    return catalog;
}

std::optional<Fixture> catalog_fixture(std::string_view name)
{
    for (const auto& f : default_catalog())
        if (f.name == name)
            return f;
    return std::nullopt;
}

} // namespace psido
