#include "psido/series.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "psido/binomial.hpp"

namespace psido {

namespace {

ElementSet zero_set(const FiniteRing& r)
{
    return ElementSet(r.order(), {r.zero()});
}

bool has_nonzero(const FiniteRing& r, const ElementSet& s)
{
    return s.size() > (s.contains(r.zero()) ? 1u : 0u);
}

void check_compatible(const Series& f, const Series& g)
{
    if (f.ring() != g.ring() && !f.ring()->same_tables(*g.ring()))
        throw IncompatibleError(fmt::format("series over different rings: {} and {}",
                                            f.ring()->name(), g.ring()->name()));
    if (f.derivation() != g.derivation() && f.derivation()->table() != g.derivation()->table())
        throw IncompatibleError("series with different derivations");
}

// Coefficients accumulated from the top degree downwards; grows as lower
// degrees are reached.
class DescendingAccumulator {
public:
    DescendingAccumulator(const FiniteRing& r, std::int64_t top) : r_(r), top_(top) {}

    void add(std::int64_t deg, Elem v)
    {
        const auto idx = static_cast<std::size_t>(top_ - deg);
        if (idx >= vals_.size())
            vals_.resize(idx + 1, r_.zero());
        vals_[idx] = r_.add(vals_[idx], v);
    }

    /// Ascending coefficient vector starting at `floor`.
    std::vector<Elem> ascending_from(std::int64_t floor) const
    {
        std::vector<Elem> out;
        if (floor > top_)
            return out;
        out.assign(static_cast<std::size_t>(top_ - floor + 1), r_.zero());
        for (std::size_t idx = 0; idx < vals_.size() && idx < out.size(); ++idx)
            out[out.size() - 1 - idx] = vals_[idx];
        return out;
    }

    std::int64_t lowest() const { return top_ - static_cast<std::int64_t>(vals_.size()) + 1; }

private:
    const FiniteRing& r_;
    std::int64_t top_;
    std::vector<Elem> vals_;
};

// Values a·δ^t(b) for every t ≥ t0 (and t ≤ limit when limit ≥ 0); plain
// δ^t(b) when a is absent.
void add_tail_values(const FiniteRing& r, const Derivation& d, std::optional<Elem> a, Elem b,
                     std::uint64_t t0, std::int64_t limit, ElementSet& out)
{
    const OrbitShape& shape = d.orbit_shape(b);
    Elem cur = d.power(b, t0);
    const std::uint64_t span = shape.stem + shape.cycle;
    for (std::uint64_t s = 0; s < span; ++s) {
        if (limit >= 0 && static_cast<std::int64_t>(t0 + s) > limit)
            break;
        out.insert(a ? r.mul(*a, cur) : cur);
        cur = d(cur);
    }
}

} // namespace

Series::Series(RingPtr ring, DerivationPtr d)
    : ring_(std::move(ring)), d_(std::move(d)), unknown_(zero_set(*ring_))
{
}

Series Series::make(RingPtr ring, DerivationPtr d, std::int64_t floor, std::vector<Elem> coeffs,
                    ElementSet unknown)
{
    Series s(std::move(ring), std::move(d));
    const FiniteRing& r = *s.ring_;
    if (unknown.universe() == r.order())
        s.unknown_ = std::move(unknown);
    s.unknown_.insert(r.zero());
    while (!coeffs.empty() && coeffs.back() == r.zero())
        coeffs.pop_back();
    if (s.exact()) {
        std::size_t lead = 0;
        while (lead < coeffs.size() && coeffs[lead] == r.zero())
            ++lead;
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
        floor += static_cast<std::int64_t>(lead);
        if (coeffs.empty())
            floor = 0;
    }
    s.floor_ = floor;
    s.coeffs_ = std::move(coeffs);
    return s;
}

std::vector<Series::Term> Series::terms() const
{
    std::vector<Term> out;
    for (std::size_t k = coeffs_.size(); k-- > 0;)
        if (coeffs_[k] != ring_->zero())
            out.emplace_back(floor_ + static_cast<std::int64_t>(k), coeffs_[k]);
    return out;
}

std::optional<Elem> Series::coefficient_at(std::int64_t d) const
{
    if (d > top())
        return ring_->zero();
    if (d < floor_)
        return exact() ? std::optional<Elem>(ring_->zero()) : std::nullopt;
    return coeffs_[static_cast<std::size_t>(d - floor_)];
}

std::optional<Series::Term> Series::leading() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return Term{top(), coeffs_.back()};
}

Series embed_scalar(const RingPtr& r, const DerivationPtr& d, Elem a)
{
    return Series::make(r, d, 0, {a}, zero_set(*r));
}

Series x_power(const RingPtr& r, const DerivationPtr& d, std::int64_t k)
{
    if (!r->unital())
        throw StructuralError(fmt::format("x^{} needs an identity, and {} has none", k, r->name()));
    return Series::make(r, d, k, {*r->one()}, zero_set(*r));
}

Series from_terms(const RingPtr& r, const DerivationPtr& d, const std::vector<Series::Term>& terms)
{
    if (terms.empty())
        return Series(r, d);
    std::int64_t lo = terms.front().first, hi = lo;
    for (const auto& [deg, c] : terms) {
        lo = std::min(lo, deg);
        hi = std::max(hi, deg);
    }
    std::vector<Elem> coeffs(static_cast<std::size_t>(hi - lo + 1), r->zero());
    for (const auto& [deg, c] : terms) {
        Elem& slot = coeffs[static_cast<std::size_t>(deg - lo)];
        slot = r->add(slot, c);
    }
    return Series::make(r, d, lo, std::move(coeffs), zero_set(*r));
}

Series unknown_below(const RingPtr& r, const DerivationPtr& d, std::int64_t k)
{
    return Series::make(r, d, k + 1, {}, ElementSet::full(r->order()));
}

Series commute_pow(const RingPtr& r, const DerivationPtr& d, std::int64_t k, Elem a,
                   std::int64_t requested_floor)
{
    const FiniteRing& R = *r;
    const Derivation& D = *d;
    if (a == R.zero())
        return Series(r, d);
    const bool finite = k >= 0 || D.orbit_terminates(a);
    DescendingAccumulator acc(R, k);
    ElementSet tail(R.order());
    BinomialSequence binom(k, R.characteristic());
    Elem cur = a;
    for (std::uint64_t t = 0;; ++t) {
        if (k >= 0 && static_cast<std::int64_t>(t) > k)
            break;
        if (cur == R.zero())
            break;
        const std::int64_t deg = k - static_cast<std::int64_t>(t);
        if (!finite && deg < requested_floor) {
            add_tail_values(R, D, std::nullopt, a, t, -1, tail);
            break;
        }
        acc.add(deg, R.int_scale(static_cast<std::int64_t>(binom.value()), cur));
        binom.advance();
        cur = D(cur);
    }
    if (finite)
        return Series::make(r, d, acc.lowest(), acc.ascending_from(acc.lowest()), zero_set(R));
    return Series::make(r, d, requested_floor, acc.ascending_from(requested_floor),
                        additive_closure(R, tail));
}

Series add(const Series& f, const Series& g)
{
    check_compatible(f, g);
    if (f.is_zero())
        return g;
    if (g.is_zero())
        return f;
    const FiniteRing& R = *f.ring();
    std::int64_t lo;
    if (f.exact() && g.exact())
        lo = std::min(f.floor(), g.floor());
    else if (!f.exact() && !g.exact())
        lo = std::max(f.floor(), g.floor());
    else
        lo = f.exact() ? g.floor() : f.floor();
    const std::int64_t hi = std::max({f.top(), g.top(), lo - 1});

    ElementSet seeds = f.unknown();
    seeds |= g.unknown();
    for (const Series* s : {&f, &g})
        for (const auto& [deg, c] : s->terms())
            if (deg < lo)
                seeds.insert(c);

    std::vector<Elem> coeffs(static_cast<std::size_t>(hi - lo + 1), R.zero());
    for (std::int64_t deg = lo; deg <= hi; ++deg)
        coeffs[static_cast<std::size_t>(deg - lo)] = R.add(*f.coefficient_at(deg), *g.coefficient_at(deg));
    return Series::make(f.ring(), f.derivation(), lo, std::move(coeffs), additive_closure(R, seeds));
}

Series neg(const Series& f)
{
    const FiniteRing& R = *f.ring();
    std::vector<Elem> coeffs = f.coeffs();
    for (Elem& c : coeffs)
        c = R.neg(c);
    return Series::make(f.ring(), f.derivation(), f.floor(), std::move(coeffs), f.unknown());
}

Series sub(const Series& f, const Series& g)
{
    return add(f, neg(g));
}

Series scale(Elem c, const Series& f)
{
    const FiniteRing& R = *f.ring();
    std::vector<Elem> coeffs = f.coeffs();
    for (Elem& v : coeffs)
        v = R.mul(c, v);
    ElementSet u(R.order());
    f.unknown().for_each([&](Elem e) { u.insert(R.mul(c, e)); });
    return Series::make(f.ring(), f.derivation(), f.floor(), std::move(coeffs), additive_closure(R, u));
}

Series int_scale(std::int64_t m, const Series& f)
{
    const FiniteRing& R = *f.ring();
    std::vector<Elem> coeffs = f.coeffs();
    for (Elem& v : coeffs)
        v = R.int_scale(m, v);
    ElementSet u(R.order());
    f.unknown().for_each([&](Elem e) { u.insert(R.int_scale(m, e)); });
    return Series::make(f.ring(), f.derivation(), f.floor(), std::move(coeffs), additive_closure(R, u));
}

Series mul(const Series& f, const Series& g, const PrecisionPolicy& policy,
           std::optional<std::int64_t> requested_floor)
{
    check_compatible(f, g);
    const RingPtr& r = f.ring();
    const FiniteRing& R = *r;
    const Derivation& D = *f.derivation();
    if (f.is_zero() || g.is_zero())
        return Series(r, f.derivation());

    const std::int64_t topf = f.top(), topg = g.top();
    const std::int64_t hi = topf + topg;
    const auto tf = f.terms();
    const auto tg = g.terms();

    // Values that may sit in the product below its floor, and the lowest
    // floor compatible with the unknown tails of the inputs.
    ElementSet seeds(R.order());
    std::optional<std::int64_t> floor_bound;
    auto raise = [&](std::int64_t v) { floor_bound = floor_bound ? std::max(*floor_bound, v) : v; };

    if (!f.exact()) {
        // Unknown a_i (i < floor f) meet every δ^t(b_j) and every δ^t(u), u ∈ U_g.
        ElementSet reach(R.order());
        for (const auto& [j, b] : tg)
            for (Elem o : D.orbit(b))
                reach.insert(o);
        if (!g.exact())
            reach |= delta_closure(R, D, g.unknown());
        const ElementSet a2 = product_set(R, f.unknown(), reach);
        if (has_nonzero(R, a2)) {
            raise(f.floor() + topg);
            seeds |= a2;
        }
    }
    if (!g.exact()) {
        ElementSet left = f.unknown();
        for (const auto& [i, a] : tf)
            left.insert(a);
        const ElementSet a3 = product_set(R, left, delta_closure(R, D, g.unknown()));
        if (has_nonzero(R, a3)) {
            raise(topf + g.floor());
            seeds |= a3;
        }
    }

    // A pair a_i x^i · b_j x^j expands finitely when i ≥ 0, or when a kills
    // the cycle that the δ-orbit of b falls into.
    auto kills_cycle = [&](Elem a, Elem b) {
        for (Elem o : D.orbit_cycle(b))
            if (R.mul(a, o) != R.zero())
                return false;
        return true;
    };
    bool any_infinite = false;
    for (const auto& [i, a] : tf) {
        if (i >= 0)
            continue;
        for (const auto& [j, b] : tg)
            if (!kills_cycle(a, b)) {
                any_infinite = true;
                break;
            }
        if (any_infinite)
            break;
    }

    std::optional<std::int64_t> floor = floor_bound;
    if (any_infinite) {
        const std::int64_t cut = requested_floor ? *requested_floor : hi - policy.default_floor_drop;
        floor = floor ? std::max(*floor, cut) : cut;
    }

    DescendingAccumulator acc(R, hi);
    const std::uint64_t ch = R.characteristic();
    for (const auto& [i, a] : tf) {
        for (const auto& [j, b] : tg) {
            const bool finite = i >= 0 || kills_cycle(a, b);
            const std::uint32_t stem = D.orbit_shape(b).stem;
            BinomialSequence binom(i, ch);
            Elem cur = b;
            for (std::uint64_t t = 0;; ++t) {
                if (i >= 0 && static_cast<std::int64_t>(t) > i)
                    break;
                if (cur == R.zero())
                    break;
                if (i < 0 && finite && t >= stem)
                    break;
                const std::int64_t deg = i + j - static_cast<std::int64_t>(t);
                if (floor && deg < *floor) {
                    add_tail_values(R, D, a, b, t, i >= 0 ? i : -1, seeds);
                    break;
                }
                const Elem prod = R.mul(a, cur);
                if (prod != R.zero())
                    acc.add(deg, R.int_scale(static_cast<std::int64_t>(binom.value()), prod));
                binom.advance();
                cur = D(cur);
            }
        }
    }

    if (!floor)
        return Series::make(r, f.derivation(), acc.lowest(), acc.ascending_from(acc.lowest()),
                            zero_set(R));
    seeds.insert(R.zero());
    return Series::make(r, f.derivation(), *floor, acc.ascending_from(*floor),
                        additive_closure(R, seeds));
}

Series delta_series(const Series& f, std::uint64_t j)
{
    const FiniteRing& R = *f.ring();
    const Derivation& D = *f.derivation();
    std::vector<Elem> coeffs = f.coeffs();
    for (Elem& v : coeffs)
        v = D.power(v, j);
    return Series::make(f.ring(), f.derivation(), f.floor(), std::move(coeffs),
                        additive_closure(R, delta_image(D, f.unknown(), j)));
}

std::int64_t common_floor(const Series& f, const Series& g)
{
    if (f.exact() && g.exact())
        return std::min(f.floor(), g.floor());
    if (!f.exact() && !g.exact())
        return std::max(f.floor(), g.floor());
    return f.exact() ? g.floor() : f.floor();
}

bool equal_to_floor(const Series& f, const Series& g, std::int64_t floor)
{
    check_compatible(f, g);
    const std::int64_t hi = std::max(f.top(), g.top());
    for (std::int64_t d = hi; d >= floor; --d) {
        const auto a = f.coefficient_at(d);
        const auto b = g.coefficient_at(d);
        if (!a || !b)
            throw UnknownCoefficientError(
                fmt::format("coefficient of x^{} is unknown; compare down to a floor above it", d));
        if (*a != *b)
            return false;
    }
    return true;
}

ConjugationResult conjugation_check(const Series& f, std::uint64_t j, std::int64_t precision_floor,
                                    const PrecisionPolicy& policy)
{
    const RingPtr& r = f.ring();
    const DerivationPtr& d = f.derivation();
    ConjugationResult out;
    out.lhs = delta_series(f, j);
    Series rhs(r, d);
    const auto jj = static_cast<std::int64_t>(j);
    for (std::int64_t i = 0; i <= jj; ++i) {
        const Series left = mul(x_power(r, d, i), f, policy, precision_floor);
        const Series term = mul(left, x_power(r, d, jj - i), policy, precision_floor);
        const std::int64_t sign = ((jj - i) % 2 == 0) ? 1 : -1;
        rhs = add(rhs, int_scale(sign * binom_int(jj, i), term));
    }
    out.rhs = rhs;
    out.floor = std::max(precision_floor, common_floor(out.lhs, out.rhs));
    const std::int64_t hi = std::max(out.lhs.top(), out.rhs.top());
    for (std::int64_t deg = hi; deg >= out.floor; --deg)
        if (*out.lhs.coefficient_at(deg) != *out.rhs.coefficient_at(deg)) {
            out.holds = false;
            out.first_difference = deg;
            break;
        }
    return out;
}

namespace {

std::string x_part(std::int64_t deg)
{
    if (deg == 1)
        return "x";
    return fmt::format("x^{}", deg);
}

} // namespace

std::string to_string(const Series& f)
{
    const FiniteRing& R = *f.ring();
    std::vector<std::string> parts;
    for (const auto& [deg, c] : f.terms()) {
        const std::string& disp = R.display(c);
        const bool compound = disp.find(' ') != std::string::npos;
        const std::string coeff = compound ? "(" + disp + ")" : disp;
        if (deg == 0)
            parts.push_back(coeff);
        else if (R.one() && c == *R.one())
            parts.push_back(x_part(deg));
        else
            parts.push_back(coeff + "*" + x_part(deg));
    }
    if (!f.exact())
        parts.push_back(fmt::format("O(x^{})", f.floor() - 1));
    if (parts.empty())
        return "0";
    std::string out = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k)
        out += " + " + parts[k];
    return out;
}

} // namespace psido
