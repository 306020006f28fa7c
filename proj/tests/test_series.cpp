#include <doctest.h>

#include <array>

#include "psido/constructors.hpp"
#include "psido/derivation.hpp"
#include "psido/fixtures.hpp"
#include "psido/series.hpp"

using namespace psido;

namespace {

struct Dual {
    RingPtr r;
    DerivationPtr d;
    Elem a;
    Elem one;
};

// Z_m[a]/(a^e) with δ(a) = a when `euler`, else δ(a) = 1.
Dual trunc(std::uint32_t m, std::uint32_t e, bool euler)
{
    const std::array<std::uint32_t, 1> ex{e};
    Dual out;
    out.r = make_truncated_poly(m, ex);
    out.a = *out.r->generator("a");
    out.one = *out.r->one();
    out.d = Derivation::from_generator_images(out.r, {{"a", euler ? out.a : out.one}});
    return out;
}

Series term(const Dual& s, std::int64_t k, Elem c)
{
    return from_terms(s.r, s.d, {{k, c}});
}

} // namespace

TEST_CASE("normal form")
{
    const auto s = trunc(2, 2, false);
    const Series z(s.r, s.d);
    CHECK(z.is_zero());
    CHECK(z.exact());
    CHECK(to_string(z) == "0");

    const Series f = Series::make(s.r, s.d, -3, {0, 0, s.a, 0, s.one, 0}, ElementSet(4, {0}));
    CHECK(f.exact());
    CHECK(f.floor() == -1);
    CHECK(f.top() == 1);
    CHECK(f.terms() == std::vector<Series::Term>{{1, s.one}, {-1, s.a}});
    CHECK(f.leading() == Series::Term{1, s.one});
    CHECK(f.coefficient_at(-50) == s.r->zero());
    CHECK(to_string(f) == "x + a*x^-1");

    const Series g = from_terms(s.r, s.d, {{2, s.a}, {2, s.a}, {0, s.one}});
    CHECK(to_string(g) == "1");
}

TEST_CASE("defining relations on the dual numbers with d/da")
{
    const auto s = trunc(2, 2, false);
    const Series x = x_power(s.r, s.d, 1);
    const Series a = embed_scalar(s.r, s.d, s.a);
    CHECK(to_string(mul(x, a)) == "a*x + 1");
    CHECK(to_string(mul(x_power(s.r, s.d, -1), x)) == "1");
    CHECK(to_string(mul(x_power(s.r, s.d, -1), a)) == "a*x^-1 + x^-2");
    CHECK(mul(x_power(s.r, s.d, -1), a).exact());
    CHECK(to_string(mul(a, x)) == "a*x");
}

TEST_CASE("x^k a against the binomial expansion over Z/4")
{
    const auto s = trunc(4, 2, false);
    const Elem a = s.a, one = s.one;
    const Elem three = s.r->int_scale(3, one), two = s.r->int_scale(2, one);
    // x^k a = a x^k + k x^(k-1) since δ²(a) = 0.
    CHECK(equal_to_floor(commute_pow(s.r, s.d, 3, a, -30), from_terms(s.r, s.d, {{3, a}, {2, three}}), -30));
    CHECK(equal_to_floor(commute_pow(s.r, s.d, -1, a, -30), from_terms(s.r, s.d, {{-1, a}, {-2, three}}), -30));
    CHECK(equal_to_floor(commute_pow(s.r, s.d, -2, a, -30), from_terms(s.r, s.d, {{-2, a}, {-3, two}}), -30));
    CHECK(commute_pow(s.r, s.d, -2, a, -30).exact());
}

TEST_CASE("non-terminating expansion is cut and marked")
{
    // δ(a) = a: x^-1 a = Σ (-1)^i a x^(-i-1).
    const auto s = trunc(3, 2, true);
    const Series f = mul(x_power(s.r, s.d, -1), embed_scalar(s.r, s.d, s.a));
    CHECK_FALSE(f.exact());
    CHECK(f.floor() == -25);
    const Elem minus_a = s.r->neg(s.a);
    for (std::int64_t i = 0; i <= 24; ++i)
        CHECK(f.coefficient_at(-i - 1) == (i % 2 == 0 ? s.a : minus_a));
    CHECK_FALSE(f.coefficient_at(-26).has_value());
    // The unknown tail lives in the subgroup generated by a.
    CHECK(f.unknown().size() == 3);

    const Series g = mul(x_power(s.r, s.d, -1), embed_scalar(s.r, s.d, s.a), PrecisionPolicy{4});
    CHECK(g.floor() == -5);
    const Series h = mul(x_power(s.r, s.d, -1), embed_scalar(s.r, s.d, s.a), {}, -8);
    CHECK(h.floor() == -8);
    CHECK(to_string(g) == "a*x^-1 + 2*a*x^-2 + a*x^-3 + 2*a*x^-4 + a*x^-5 + O(x^-6)");
}

TEST_CASE("unknown tails in addition and comparison")
{
    const auto s = trunc(2, 2, false);
    const Series f = add(x_power(s.r, s.d, 1), unknown_below(s.r, s.d, -3));
    CHECK_FALSE(f.exact());
    CHECK(f.floor() == -2);
    CHECK(to_string(f) == "x + O(x^-3)");
    const Series g = add(f, term(s, -5, s.a));
    CHECK(g.floor() == -2);
    CHECK(to_string(g) == "x + O(x^-3)");
    CHECK(common_floor(f, term(s, -9, s.one)) == -2);
    CHECK(equal_to_floor(f, x_power(s.r, s.d, 1), -2));
    CHECK_THROWS_AS(equal_to_floor(f, x_power(s.r, s.d, 1), -3), UnknownCoefficientError);
    CHECK_FALSE(sub(f, f).exact());
}

TEST_CASE("products of nilpotent coefficient series stay exact")
{
    // Z/2[a]/(a^3) with δ(a) = a: every a-coefficient orbit cycles, yet
    // products of three a-multiples vanish exactly.
    const auto s = trunc(2, 3, true);
    const Series f = add(term(s, -1, s.a), term(s, 2, s.a));
    const Series g = mul(mul(f, f), f);
    CHECK(g.exact());
    CHECK(g.is_zero());
    const Series h = mul(f, f);
    CHECK_FALSE(h.is_zero());
    for (auto [deg, c] : h.terms())
        CHECK(s.r->mul(c, s.a) == s.r->zero());
}

TEST_CASE("ring operations")
{
    const auto s = trunc(4, 2, false);
    const Series f = add(term(s, 2, s.a), term(s, -1, s.one));
    CHECK(to_string(neg(f)) == "3*a*x^2 + 3*x^-1");
    CHECK(to_string(int_scale(2, f)) == "2*a*x^2 + 2*x^-1");
    CHECK(to_string(scale(s.a, f)) == "a*x^-1");
    CHECK(sub(f, f).is_zero());
    CHECK(to_string(delta_series(f, 1)) == "x^2");
    CHECK(delta_series(f, 2).is_zero());
    CHECK(to_string(mul(x_power(s.r, s.d, 3), x_power(s.r, s.d, -5))) == "x^-2");
}

TEST_CASE("errors")
{
    const auto s = trunc(2, 2, false);
    const auto z4 = make_zn(4);
    const Series other = embed_scalar(z4, Derivation::zero(z4), 1);
    CHECK_THROWS_AS(add(x_power(s.r, s.d, 1), other), IncompatibleError);
    CHECK_THROWS_AS(mul(x_power(s.r, s.d, 1), other), IncompatibleError);
    const auto d0 = Derivation::zero(s.r);
    CHECK_THROWS_AS(add(x_power(s.r, s.d, 1), x_power(s.r, d0, 1)), IncompatibleError);

    const auto z8 = make_zn(8);
    const auto [even, map] = subring(*z8, ElementSet(8, {0, 2, 4, 6}));
    CHECK_THROWS_AS(x_power(even, Derivation::zero(even), 1), StructuralError);
    CHECK(map.size() == 4);
}
