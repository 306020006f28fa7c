#include "psido/radicals.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace psido {

TNilpVerdict is_left_t_nilpotent(const FiniteRing& r, const ElementSet& s)
{
    const Elem zero = r.zero();
    std::vector<Elem> gens;
    s.for_each([&](Elem e) {
        if (e != zero)
            gens.push_back(e);
    });

    enum : std::uint8_t { white, grey, black };
    std::vector<std::uint8_t> colour(r.order(), white);
    std::vector<std::size_t> longest(r.order(), 0); // nodes on the longest path from here
    std::vector<std::size_t> stack_pos(r.order(), 0);

    struct Frame {
        Elem node;
        std::size_t next_edge;
    };
    std::vector<Frame> stack;
    std::vector<Elem> labels; // labels[k] is the element of S that produced stack[k]

    TNilpVerdict out;
    std::size_t best = 0;
    for (Elem start : gens) {
        if (colour[start] == white) {
            colour[start] = grey;
            stack_pos[start] = 0;
            stack.push_back({start, 0});
            labels.push_back(start);
        }
        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.next_edge == gens.size()) {
                std::size_t len = 1;
                for (Elem g : gens) {
                    const Elem u = r.mul(top.node, g);
                    if (u != zero)
                        len = std::max(len, 1 + longest[u]);
                }
                longest[top.node] = len;
                colour[top.node] = black;
                stack.pop_back();
                labels.pop_back();
                continue;
            }
            const Elem g = gens[top.next_edge++];
            const Elem u = r.mul(top.node, g);
            if (u == zero || colour[u] == black)
                continue;
            if (colour[u] == grey) {
                CycleWitness w;
                w.sequence = labels;
                w.sequence.push_back(g);
                w.repeat_from = stack_pos[u];
                out.t_nilpotent = false;
                out.cycle = std::move(w);
                return out;
            }
            colour[u] = grey;
            stack_pos[u] = stack.size();
            stack.push_back({u, 0});
            labels.push_back(g);
        }
        best = std::max(best, longest[start]);
    }
    out.bound = best + 1;
    return out;
}

bool witness_valid(const FiniteRing& r, const ElementSet& s, const TNilpVerdict& v)
{
    const Elem zero = r.zero();
    if (!v.t_nilpotent) {
        if (!v.cycle)
            return false;
        const auto& seq = v.cycle->sequence;
        if (seq.size() < 2 || v.cycle->repeat_from + 1 >= seq.size())
            return false;
        std::vector<Elem> prefix;
        Elem p = seq.front();
        for (std::size_t k = 0; k < seq.size(); ++k) {
            if (!s.contains(seq[k]))
                return false;
            if (k > 0)
                p = r.mul(p, seq[k]);
            if (p == zero)
                return false;
            prefix.push_back(p);
        }
        return prefix.back() == prefix[v.cycle->repeat_from];
    }
    // Breadth-first layers of nonzero products of length 1, 2, ..., bound.
    ElementSet layer(r.order());
    s.for_each([&](Elem e) {
        if (e != zero)
            layer.insert(e);
    });
    for (std::size_t len = 1; len < v.bound; ++len) {
        ElementSet next(r.order());
        layer.for_each([&](Elem a) {
            s.for_each([&](Elem b) {
                const Elem u = r.mul(a, b);
                if (u != zero)
                    next.insert(u);
            });
        });
        layer = std::move(next);
    }
    return layer.empty();
}

AnnihilatorSeries upper_left_annihilator_series(const FiniteRing& n, const Derivation* d)
{
    AnnihilatorSeries out;
    const std::size_t order = n.order();
    auto stable = [&](const ElementSet& st) {
        bool ok = true;
        st.for_each([&](Elem e) { ok = ok && st.contains((*d)(e)); });
        return ok;
    };
    ElementSet cur(order, {n.zero()});
    out.stages.push_back(cur);
    if (d)
        out.delta_stable.push_back(stable(cur));
    while (true) {
        ElementSet next(order);
        for (std::size_t a = 0; a < order; ++a) {
            bool inside = true;
            for (std::size_t x = 0; x < order && inside; ++x)
                inside = cur.contains(n.mul(static_cast<Elem>(a), static_cast<Elem>(x)));
            if (inside)
                next.insert(static_cast<Elem>(a));
        }
        if (next == cur)
            break;
        cur = std::move(next);
        out.stages.push_back(cur);
        if (d)
            out.delta_stable.push_back(stable(cur));
    }
    out.stabilization_step = out.stages.size() - 1;
    out.reached_top = cur.size() == order;
    return out;
}

LevitzkiOutcome levitzki_equivalence(const FiniteRing& n, const Derivation* d)
{
    LevitzkiOutcome out;
    out.t_nilpotent = is_left_t_nilpotent(n, ElementSet::full(n.order())).t_nilpotent;
    out.reached_top = upper_left_annihilator_series(n, d).reached_top;
    return out;
}

namespace {

ElementSet from_hits(const std::vector<char>& hit)
{
    ElementSet out(hit.size());
    for (std::size_t k = 0; k < hit.size(); ++k)
        if (hit[k])
            out.insert(static_cast<Elem>(k));
    return out;
}

} // namespace

Ideal radideal_Il(const RingPtr& r, Exec exec)
{
    const FiniteRing& R = *r;
    const std::size_t n = R.order();
    const auto hit = kernels::membership_sweep(
        n,
        [&](Elem a) {
            const Ideal gen = ideal_generated(r, ElementSet(n, {a}));
            return is_left_t_nilpotent(R, gen.members).t_nilpotent;
        },
        exec);
    return Ideal{r, from_hits(hit), Sidedness::two_sided};
}

IlDeltaProbe probe_il_delta(const FiniteRing& r, const Derivation& d, Elem a)
{
    IlDeltaProbe out;
    const std::size_t n = r.order();
    out.generators = ElementSet(n);
    out.origin.assign(n, std::nullopt);
    const auto orbit = d.orbit(a);
    for (std::uint64_t j = 0; j < orbit.size(); ++j) {
        const Elem dj = orbit[j];
        if (!r.unital() && out.generators.insert(dj))
            out.origin[dj] = Origin{j, std::nullopt};
        for (std::size_t x = 0; x < n; ++x) {
            const Elem v = r.mul(dj, static_cast<Elem>(x));
            if (out.generators.insert(v))
                out.origin[v] = Origin{j, static_cast<Elem>(x)};
        }
    }
    out.verdict = is_left_t_nilpotent(r, out.generators);
    return out;
}

IlDeltaResult radideal_Il_delta(const FiniteRing& r, const Derivation& d, Exec exec)
{
    IlDeltaResult out;
    const auto hit = kernels::membership_sweep(
        r.order(), [&](Elem a) { return probe_il_delta(r, d, a).verdict.t_nilpotent; }, exec);
    out.members = from_hits(hit);
    out.is_ideal = is_ideal(r, out.members);
    out.is_delta_subset = delta_image(d, out.members).subset_of(out.members);
    return out;
}

RadidealChain higher_radideals(const RingPtr& r, const DerivationPtr& d, Exec exec)
{
    const FiniteRing& R = *r;
    RadidealChain chain;
    Ideal cur{r, ElementSet(R.order(), {R.zero()}), Sidedness::two_sided};
    for (std::size_t k = 1;; ++k) {
        QuotientData q;
        try {
            q = quotient_ring(r, cur, d.get());
        } catch (const QuotientError& e) {
            throw ChainError(fmt::format("stage {} = {} is not a delta-ideal: {}", k - 1,
                                         R.display_set(cur.members), e.what()),
                             k - 1, cur.members);
        }
        ElementSet rad = d ? radideal_Il_delta(*q.quotient, *q.induced_derivation, exec).members
                           : radideal_Il(q.quotient, exec).members;
        Ideal next{r, pull_back(q, rad), Sidedness::two_sided};
        if (d && !is_ideal(R, next.members))
            throw ChainError(fmt::format("stage {} = {} is not an ideal", k,
                                         R.display_set(next.members)),
                             k, next.members);
        if (k > 1 && next.members == cur.members) {
            chain.stabilization_step = k - 1;
            break;
        }
        chain.stages.push_back(next);
        cur = std::move(next);
        if (k > R.order() + 1)
            throw std::logic_error("radideal chain failed to stabilize");
    }
    chain.limit = chain.stages.back();
    return chain;
}

std::optional<std::size_t> nilpotency_index(const FiniteRing& r, const ElementSet& i)
{
    const std::size_t n = r.order();
    ElementSet power = additive_closure(r, i);
    for (std::size_t k = 1; k <= n; ++k) {
        if (power.size() == 1 && power.contains(r.zero()))
            return k;
        if (power.empty())
            return k;
        ElementSet next = additive_closure(r, product_set(r, power, i));
        if (next == power)
            return std::nullopt; // I^(k+1) = I^k ≠ 0
        power = std::move(next);
    }
    return std::nullopt;
}

Ideal prime_radical(const RingPtr& r, Exec exec)
{
    const FiniteRing& R = *r;
    const std::size_t n = R.order();
    const auto hit = kernels::membership_sweep(
        n,
        [&](Elem a) {
            const Ideal gen = ideal_generated(r, ElementSet(n, {a}));
            return nilpotency_index(R, gen.members).has_value();
        },
        exec);
    return ideal_generated(r, from_hits(hit));
}

} // namespace psido
