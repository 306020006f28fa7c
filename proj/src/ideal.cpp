#include "psido/ideal.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace psido {

Ideal ideal_generated(const RingPtr& r, const ElementSet& seed, Sidedness side)
{
    const FiniteRing& R = *r;
    const std::size_t n = R.order();
    ElementSet group(n);
    group.insert(R.zero());
    std::vector<Elem> members{R.zero()};
    std::deque<Elem> pending;
    seed.for_each([&](Elem e) { pending.push_back(e); });

    while (!pending.empty()) {
        const Elem g = pending.front();
        pending.pop_front();
        if (group.contains(g))
            continue;
        const std::size_t old_size = members.size();
        Elem step = g;
        while (!group.contains(step)) {
            for (std::size_t i = 0; i < old_size; ++i) {
                const Elem v = R.add(members[i], step);
                if (group.insert(v))
                    members.push_back(v);
            }
            step = R.add(step, g);
        }
        // Absorbing products of generators suffices: products distribute over sums.
        for (std::size_t x = 0; x < n; ++x) {
            const auto rx = static_cast<Elem>(x);
            if (side != Sidedness::right)
                pending.push_back(R.mul(rx, g));
            if (side != Sidedness::left)
                pending.push_back(R.mul(g, rx));
        }
    }
    return Ideal{r, std::move(group), side};
}

bool is_ideal(const FiniteRing& r, const ElementSet& s, Sidedness side)
{
    if (!s.contains(r.zero()))
        return false;
    const auto m = s.members();
    for (Elem a : m) {
        if (!s.contains(r.neg(a)))
            return false;
        for (Elem b : m)
            if (!s.contains(r.add(a, b)))
                return false;
        for (std::size_t x = 0; x < r.order(); ++x) {
            const auto rx = static_cast<Elem>(x);
            if (side != Sidedness::right && !s.contains(r.mul(rx, a)))
                return false;
            if (side != Sidedness::left && !s.contains(r.mul(a, rx)))
                return false;
        }
    }
    return true;
}

bool is_delta_ideal(const FiniteRing& r, const Derivation& d, const Ideal& i)
{
    (void)r;
    bool ok = true;
    i.members.for_each([&](Elem e) {
        if (!i.members.contains(d(e)))
            ok = false;
    });
    return ok;
}

bool is_delta_compatible(const FiniteRing& r, const Derivation& d, const Ideal& i)
{
    const std::size_t n = r.order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto ea = static_cast<Elem>(a);
            const auto eb = static_cast<Elem>(b);
            if (i.members.contains(r.mul(ea, eb)) && !i.members.contains(r.mul(ea, d(eb))))
                return false;
        }
    return true;
}

bool is_delta_compatible_ring(const FiniteRing& r, const Derivation& d)
{
    Ideal zero{d.ring(), ElementSet(r.order(), {r.zero()}), Sidedness::two_sided};
    return is_delta_compatible(r, d, zero);
}

ElementSet left_annihilator(const FiniteRing& r, const ElementSet& s)
{
    ElementSet out(r.order());
    const auto sm = s.members();
    for (std::size_t a = 0; a < r.order(); ++a) {
        const auto ea = static_cast<Elem>(a);
        bool kills = true;
        for (Elem x : sm)
            if (r.mul(ea, x) != r.zero()) {
                kills = false;
                break;
            }
        if (kills)
            out.insert(ea);
    }
    return out;
}

QuotientData quotient_ring(const RingPtr& r, const Ideal& i, const Derivation* d)
{
    const FiniteRing& R = *r;
    const std::size_t n = R.order();
    if (d) {
        Elem witness = R.zero();
        bool stable = true;
        i.members.for_each([&](Elem e) {
            if (stable && !i.members.contains((*d)(e))) {
                stable = false;
                witness = e;
            }
        });
        if (!stable)
            throw QuotientError(fmt::format("ideal is not a delta-ideal: d({}) = {} is outside it",
                                            R.display(witness), R.display((*d)(witness))),
                                witness);
    }

    QuotientData q;
    const auto members = i.members.members();
    q.projection.assign(n, static_cast<Elem>(-1));
    for (std::size_t a = 0; a < n; ++a) {
        if (q.projection[a] != static_cast<Elem>(-1))
            continue;
        const auto c = static_cast<Elem>(q.representative.size());
        q.representative.push_back(static_cast<Elem>(a));
        for (Elem m : members)
            q.projection[R.add(static_cast<Elem>(a), m)] = c;
    }
    const std::size_t k = q.representative.size();

    FiniteRing::Parts parts;
    parts.order = k;
    parts.add.resize(k * k);
    parts.mul.resize(k * k);
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            parts.add[x * k + y] = q.projection[R.add(q.representative[x], q.representative[y])];
            parts.mul[x * k + y] = q.projection[R.mul(q.representative[x], q.representative[y])];
        }
    parts.name = fmt::format("{} / {}", R.name(), R.display_set(i.members));
    for (std::size_t c = 0; c < k; ++c)
        parts.display.push_back(R.display(q.representative[c]));
    for (const auto& g : R.generators())
        parts.generators.push_back({g.name, q.projection[g.element]});
    q.quotient = FiniteRing::make(std::move(parts));

    if (d) {
        std::vector<Elem> table(k);
        for (std::size_t c = 0; c < k; ++c)
            table[c] = q.projection[(*d)(q.representative[c])];
        q.induced_derivation =
            std::make_shared<Derivation>(q.quotient, std::move(table), d->description() + " (induced)");
    }
    return q;
}

ElementSet pull_back(const QuotientData& q, const ElementSet& cosets)
{
    ElementSet out(q.projection.size());
    for (std::size_t a = 0; a < q.projection.size(); ++a)
        if (cosets.contains(q.projection[a]))
            out.insert(static_cast<Elem>(a));
    return out;
}

namespace {

bool ideal_less(const Ideal& a, const Ideal& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a.members.members() < b.members.members();
}

} // namespace

std::vector<Ideal> enumerate_ideals(const RingPtr& r)
{
    const std::size_t n = r->order();
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<Ideal> out;
    std::deque<Ideal> frontier;
    Ideal zero = ideal_generated(r, ElementSet(n));
    seen.insert(zero.members);
    frontier.push_back(zero);
    while (!frontier.empty()) {
        Ideal cur = std::move(frontier.front());
        frontier.pop_front();
        for (std::size_t a = 0; a < n; ++a) {
            if (cur.contains(static_cast<Elem>(a)))
                continue;
            ElementSet seed = cur.members;
            seed.insert(static_cast<Elem>(a));
            Ideal next = ideal_generated(r, seed);
            if (seen.insert(next.members).second)
                frontier.push_back(next);
        }
        out.push_back(std::move(cur));
    }
    std::sort(out.begin(), out.end(), ideal_less);
    return out;
}

std::vector<Ideal> principal_ideals(const RingPtr& r)
{
    const std::size_t n = r->order();
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<Ideal> out;
    for (std::size_t a = 0; a < n; ++a) {
        Ideal i = ideal_generated(r, ElementSet(n, {static_cast<Elem>(a)}));
        if (seen.insert(i.members).second)
            out.push_back(std::move(i));
    }
    std::sort(out.begin(), out.end(), ideal_less);
    return out;
}

} // namespace psido
