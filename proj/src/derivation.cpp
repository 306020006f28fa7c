#include "psido/derivation.hpp"

#include <fmt/format.h>

#include "psido/constructors.hpp"

namespace psido {

Derivation::Derivation(RingPtr ring, std::vector<Elem> table, std::string description)
    : ring_(std::move(ring)), table_(std::move(table)), description_(std::move(description))
{
    const std::size_t n = ring_->order();
    if (table_.size() != n)
        throw StructuralError(
            fmt::format("derivation table has {} entries, ring order is {}", table_.size(), n));
    for (Elem v : table_)
        if (v >= n)
            throw StructuralError(fmt::format("derivation table entry {} out of range", v));

    is_zero_ = true;
    for (Elem v : table_)
        if (v != ring_->zero())
            is_zero_ = false;

    // Orbit shapes of the functional graph a -> d(a).
    shapes_.resize(n);
    std::vector<std::uint32_t> seen_at(n, 0);
    std::vector<std::uint32_t> stamp(n, 0);
    std::uint32_t run = 0;
    for (std::size_t start = 0; start < n; ++start) {
        ++run;
        Elem a = static_cast<Elem>(start);
        std::uint32_t step = 0;
        while (stamp[a] != run) {
            stamp[a] = run;
            seen_at[a] = step++;
            a = table_[a];
        }
        shapes_[start] = {seen_at[a], step - seen_at[a]};
    }
}

DerivationPtr Derivation::zero(const RingPtr& ring)
{
    return std::make_shared<Derivation>(ring, std::vector<Elem>(ring->order(), ring->zero()), "zero");
}

DerivationPtr Derivation::inner(const RingPtr& ring, Elem c)
{
    std::vector<Elem> t(ring->order());
    for (std::size_t a = 0; a < t.size(); ++a)
        t[a] = ring->sub(ring->mul(c, static_cast<Elem>(a)), ring->mul(static_cast<Elem>(a), c));
    return std::make_shared<Derivation>(ring, std::move(t),
                                        fmt::format("inner c={}", ring->display(c)));
}

DerivationPtr Derivation::from_table(const RingPtr& ring, std::vector<Elem> table)
{
    return std::make_shared<Derivation>(ring, std::move(table), "table");
}

DerivationPtr Derivation::from_generator_images(const RingPtr& ring,
                                                const std::map<std::string, Elem>& images)
{
    const auto* info = std::get_if<TruncPolyInfo>(&ring->info());
    if (!info)
        throw std::invalid_argument("generator images need a truncated polynomial ring");
    const TruncPolyLayout layout(*info);
    const std::size_t vars = layout.exponents.size();
    const bool single = vars == 1;

    std::vector<Elem> var_image(vars, ring->zero());
    std::vector<Elem> var_elem(vars, ring->zero());
    for (std::size_t i = 0; i < vars; ++i) {
        const std::string name = single ? "a" : fmt::format("a{}", i + 1);
        if (auto g = ring->generator(name))
            var_elem[i] = *g;
        if (auto it = images.find(name); it != images.end())
            var_image[i] = it->second;
    }
    for (const auto& [name, img] : images)
        if (!ring->generator(name))
            throw std::invalid_argument(fmt::format("unknown generator '{}'", name));

    // d(monomial) by the Leibniz rule, peeling one variable at a time.
    std::vector<Elem> mono_d(layout.monomials, ring->zero());
    for (std::size_t k = 1; k < layout.monomials; ++k) {
        auto e = layout.exponent_vector(k);
        std::size_t i = 0;
        while (e[i] == 0)
            ++i;
        e[i] -= 1;
        const std::size_t rest = layout.monomial_index(e);
        const Elem rest_elem = layout.monomial_element(rest);
        mono_d[k] = ring->add(ring->mul(var_image[i], rest_elem), ring->mul(var_elem[i], mono_d[rest]));
    }

    std::vector<Elem> table(ring->order());
    for (std::size_t a = 0; a < table.size(); ++a) {
        const auto c = layout.coefficients(static_cast<Elem>(a));
        Elem acc = ring->zero();
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k] != 0)
                acc = ring->add(acc, ring->int_scale(c[k], mono_d[k]));
        table[a] = acc;
    }

    std::string desc = "gens ";
    bool first = true;
    for (const auto& [name, img] : images) {
        desc += fmt::format("{}{}={}", first ? "" : ",", name, ring->display(img));
        first = false;
    }
    return std::make_shared<Derivation>(ring, std::move(table), desc);
}

DerivationPtr Derivation::product(const RingPtr& ring, const Derivation& left, const Derivation& right)
{
    const auto* info = std::get_if<ProductInfo>(&ring->info());
    if (!info)
        throw std::invalid_argument("product derivation needs a product ring");
    const auto& l = *info->left;
    if (left.ring()->order() != l.order() || right.ring()->order() != info->right->order())
        throw StructuralError("product derivation factors do not match the ring factors");
    std::vector<Elem> table(ring->order());
    for (std::size_t e = 0; e < table.size(); ++e) {
        const Elem x = static_cast<Elem>(e % l.order());
        const Elem y = static_cast<Elem>(e / l.order());
        table[e] = product_index(l, left(x), right(y));
    }
    return std::make_shared<Derivation>(
        ring, std::move(table),
        fmt::format("product [{}] [{}]", left.description(), right.description()));
}

Elem Derivation::power(Elem a, std::uint64_t t) const
{
    const OrbitShape& s = shapes_[a];
    if (t > s.stem + s.cycle)
        t = s.stem + (t - s.stem) % s.cycle;
    for (std::uint64_t i = 0; i < t; ++i)
        a = table_[a];
    return a;
}

std::vector<Elem> Derivation::orbit(Elem a) const
{
    const OrbitShape& s = shapes_[a];
    std::vector<Elem> out;
    out.reserve(s.stem + s.cycle);
    for (std::uint32_t i = 0; i < s.stem + s.cycle; ++i) {
        out.push_back(a);
        a = table_[a];
    }
    return out;
}

std::vector<Elem> Derivation::orbit_cycle(Elem a) const
{
    const OrbitShape& s = shapes_[a];
    a = power(a, s.stem);
    std::vector<Elem> out;
    for (std::uint32_t i = 0; i < s.cycle; ++i) {
        out.push_back(a);
        a = table_[a];
    }
    return out;
}

bool Derivation::orbit_terminates(Elem a) const
{
    const OrbitShape& s = shapes_[a];
    return s.cycle == 1 && power(a, s.stem) == ring_->zero();
}

std::vector<Violation> validate_derivation(const FiniteRing& r, const Derivation& d, Exec exec)
{
    if (d.table().size() != r.order())
        throw StructuralError(fmt::format("derivation table has {} entries, ring order is {}",
                                          d.table().size(), r.order()));
    const std::size_t n = r.order();
    std::vector<Violation> out;
    auto scan = [&](auto&& holds) { return kernels::first_failing_pair(n, holds, exec); };
    if (auto w = scan([&](Elem a, Elem b) { return d(r.add(a, b)) == r.add(d(a), d(b)); }))
        out.push_back({"additivity", {(*w)[0], (*w)[1]}});
    if (auto w = scan([&](Elem a, Elem b) {
            return d(r.mul(a, b)) == r.add(r.mul(d(a), b), r.mul(a, d(b)));
        }))
        out.push_back({"Leibniz rule", {(*w)[0], (*w)[1]}});
    return out;
}

ElementSet delta_image(const Derivation& d, const ElementSet& s, std::uint64_t j)
{
    ElementSet out(s.universe());
    s.for_each([&](Elem e) { out.insert(d.power(e, j)); });
    return out;
}

ElementSet delta_closure(const FiniteRing& r, const Derivation& d, const ElementSet& s)
{
    ElementSet cur = additive_closure(r, s);
    while (true) {
        ElementSet next = cur;
        next |= delta_image(d, cur);
        next = additive_closure(r, next);
        if (next == cur)
            return cur;
        cur = std::move(next);
    }
}

} // namespace psido
