#include <doctest.h>

#include <array>

#include "psido/constructors.hpp"
#include "psido/derivation.hpp"
#include "psido/fixtures.hpp"
#include "psido/ideal.hpp"
#include "psido/radicals.hpp"

using namespace psido;

namespace {

// Least k such that every product of k elements of S is zero, by iterating the
// set of nonzero k-fold products; nullopt if it never empties within |R|+1 steps.
std::optional<std::size_t> product_depth(const FiniteRing& r, const ElementSet& s)
{
    std::vector<Elem> layer;
    s.for_each([&](Elem e) {
        if (e != r.zero())
            layer.push_back(e);
    });
    const auto ss = s.members();
    for (std::size_t k = 1; k <= r.order() + 1; ++k) {
        if (layer.empty())
            return k;
        ElementSet next(r.order());
        for (Elem p : layer)
            for (Elem x : ss)
                if (r.mul(p, x) != r.zero())
                    next.insert(r.mul(p, x));
        layer = next.members();
    }
    return std::nullopt;
}

// Nilpotent elements of a commutative ring.
ElementSet nilradical(const FiniteRing& r)
{
    ElementSet out(r.order());
    for (std::size_t a = 0; a < r.order(); ++a) {
        Elem p = static_cast<Elem>(a);
        for (std::size_t k = 0; k <= r.order() && p != r.zero(); ++k)
            p = r.mul(p, static_cast<Elem>(a));
        if (p == r.zero())
            out.insert(static_cast<Elem>(a));
    }
    return out;
}

} // namespace

TEST_CASE("T-nilpotency oracle against layered products")
{
    for (const auto& fx : default_catalog()) {
        const FiniteRing& R = *fx.ring;
        for (const auto& i : enumerate_ideals(fx.ring)) {
            const TNilpVerdict v = is_left_t_nilpotent(R, i.members);
            const auto depth = product_depth(R, i.members);
            CAPTURE(fx.name);
            CAPTURE(R.display_set(i.members));
            CHECK(v.t_nilpotent == depth.has_value());
            if (v.t_nilpotent && depth)
                CHECK(v.bound == *depth);
            CHECK(witness_valid(R, i.members, v));
        }
    }
}

TEST_CASE("cycle witnesses")
{
    const auto z4 = make_zn(4);
    const TNilpVerdict v = is_left_t_nilpotent(*z4, ElementSet(4, {1}));
    REQUIRE_FALSE(v.t_nilpotent);
    REQUIRE(v.cycle);
    CHECK(v.cycle->sequence == std::vector<Elem>{1, 1});
    CHECK(v.cycle->repeat_from == 0);
    CHECK(witness_valid(*z4, ElementSet(4, {1}), v));

    TNilpVerdict forged = v;
    forged.cycle->sequence = {2, 2};
    CHECK_FALSE(witness_valid(*z4, ElementSet(4, {2}), forged));
    TNilpVerdict wrong_bound{true, 1, std::nullopt};
    CHECK_FALSE(witness_valid(*z4, ElementSet(4, {2}), wrong_bound));
    const TNilpVerdict two = is_left_t_nilpotent(*z4, ElementSet(4, {2}));
    CHECK(two.t_nilpotent);
    CHECK(two.bound == 2);

    // e11 is idempotent in T2; {e12} is square zero.
    const auto t = make_triangular_matrix_ring(2);
    CHECK_FALSE(is_left_t_nilpotent(*t, ElementSet(8, {*t->generator("e11")})).t_nilpotent);
    CHECK(is_left_t_nilpotent(*t, ElementSet(8, {*t->generator("e12")})).t_nilpotent);
}

TEST_CASE("prime radicals of known rings")
{
    CHECK(prime_radical(make_zn(4)).members == ElementSet(4, {0, 2}));
    CHECK(prime_radical(make_zn(12)).members == ElementSet(12, {0, 6}));
    CHECK(prime_radical(make_zn(7)).members == ElementSet(7, {0}));
    const auto t = make_triangular_matrix_ring(2);
    CHECK(prime_radical(t).members == ElementSet(8, {0, *t->generator("e12")}));
    CHECK(prime_radical(make_matrix_ring(2)).members == ElementSet(16, {0}));
    for (const auto& fx : default_catalog())
        if (fx.ring->commutative()) {
            CAPTURE(fx.name);
            CHECK(prime_radical(fx.ring).members == nilradical(*fx.ring));
        }
}

TEST_CASE("radicals coincide without a derivation")
{
    for (const auto& fx : default_catalog()) {
        CAPTURE(fx.name);
        const Ideal il = radideal_Il(fx.ring);
        const RadidealChain chain = higher_radideals(fx.ring);
        CHECK(il.members == prime_radical(fx.ring).members);
        CHECK(chain.limit.members == il.members);
        CHECK(chain.stabilization_step == 1);
        CHECK(radideal_Il(fx.ring, Exec::serial).members == il.members);
        CHECK(prime_radical(fx.ring, Exec::serial).members == il.members);
    }
}

TEST_CASE("delta radideal")
{
    const std::array<std::uint32_t, 1> e{2};
    const auto r = make_truncated_poly(2, e);
    const Elem a = *r->generator("a");
    const auto dd = Derivation::from_generator_images(r, {{"a", *r->one()}});
    const auto de = Derivation::from_generator_images(r, {{"a", a}});

    // δ(a) = 1 pulls the unit into S(a).
    const IlDeltaResult rd = radideal_Il_delta(*r, *dd);
    CHECK(rd.members == ElementSet(4, {0}));
    CHECK(rd.is_ideal);
    CHECK(rd.is_delta_subset);
    const IlDeltaProbe probe = probe_il_delta(*r, *dd, a);
    CHECK(probe.generators == ElementSet::full(4));
    CHECK_FALSE(probe.verdict.t_nilpotent);
    REQUIRE(probe.origin[*r->one()]);
    CHECK(probe.origin[*r->one()]->j == 1);

    const IlDeltaResult re = radideal_Il_delta(*r, *de);
    CHECK(re.members == ElementSet(4, {0, a}));
    CHECK(radideal_Il_delta(*r, *de, Exec::serial).members == re.members);

    const RadidealChain cd = higher_radideals(r, dd);
    CHECK(cd.limit.members == ElementSet(4, {0}));
    const RadidealChain ce = higher_radideals(r, de);
    CHECK(ce.limit.members == ElementSet(4, {0, a}));
}

TEST_CASE("non-unital S variant")
{
    // In 2Z/8 every a·R lies in {0, 4}; S(a) also holds a itself.
    const auto z8 = make_zn(8);
    const auto [even, map] = subring(*z8, ElementSet(8, {0, 2, 4, 6}));
    const auto d = Derivation::zero(even);
    const IlDeltaProbe p = probe_il_delta(*even, *d, 1); // the element 2
    CHECK(p.generators.contains(1));
    REQUIRE(p.origin[1]);
    CHECK_FALSE(p.origin[1]->right.has_value());
    CHECK(p.verdict.t_nilpotent);
}

TEST_CASE("upper annihilator series")
{
    const auto z8 = make_zn(8);
    const auto [even, map] = subring(*z8, ElementSet(8, {0, 2, 4, 6}));
    const AnnihilatorSeries s = upper_left_annihilator_series(*even);
    REQUIRE(s.stages.size() == 3);
    CHECK(s.stages[0] == ElementSet(4, {0}));
    CHECK(s.stages[1] == ElementSet(4, {0, 2})); // index 2 is the element 4
    CHECK(s.stages[2] == ElementSet::full(4));
    CHECK(s.reached_top);
    CHECK(s.stabilization_step == 2);
    CHECK(levitzki_equivalence(*even).agree());

    const auto z4 = make_zn(4);
    const AnnihilatorSeries w = upper_left_annihilator_series(*z4);
    CHECK_FALSE(w.reached_top);
    CHECK(w.stages.size() == 1);
    const LevitzkiOutcome lo = levitzki_equivalence(*z4);
    CHECK_FALSE(lo.t_nilpotent);
    CHECK(lo.agree());

    const auto d = Derivation::zero(even);
    const AnnihilatorSeries sd = upper_left_annihilator_series(*even, d.get());
    CHECK(sd.delta_stable == std::vector<bool>{true, true, true});
}

TEST_CASE("nilpotency index")
{
    const auto z8 = make_zn(8);
    CHECK(nilpotency_index(*z8, ElementSet(8, {0, 2, 4, 6})) == 3);
    CHECK(nilpotency_index(*z8, ElementSet(8, {0, 4})) == 2);
    CHECK(nilpotency_index(*z8, ElementSet(8, {0})) == 1);
    CHECK_FALSE(nilpotency_index(*z8, ElementSet::full(8)).has_value());
    const std::array<std::uint32_t, 2> e{2, 3};
    const auto r = make_truncated_poly(2, e);
    // (a1, a2)^k vanishes first at k = 1 + 2 = 4 (a1·a2^2 survives at k = 3).
    CHECK(nilpotency_index(*r, prime_radical(r).members) == 4);
}

TEST_CASE("chain with an inner derivation")
{
    // δ = inner(e12) on T2(Z/2): δ(e11) = δ(e22) = e12 and δ(e12) = 0.
    const auto t = make_triangular_matrix_ring(2);
    const Elem e12 = *t->generator("e12");
    const auto d = Derivation::inner(t, e12);
    const IlDeltaResult res = radideal_Il_delta(*t, *d);
    CHECK(res.members == ElementSet(8, {0, e12}));
    CHECK(res.is_ideal);
    CHECK(res.is_delta_subset);
    const RadidealChain chain = higher_radideals(t, d);
    CHECK(chain.limit.members == ElementSet(8, {0, e12}));
    CHECK(chain.stabilization_step == 1);
}
