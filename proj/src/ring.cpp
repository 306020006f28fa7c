#include "psido/ring.hpp"

#include <fmt/format.h>

#include <numeric>
#include <random>

namespace psido {

namespace {

void check_shape(std::size_t order, const std::vector<Elem>& add, const std::vector<Elem>& mul)
{
    if (order == 0)
        throw StructuralError("ring order must be positive");
    const std::size_t cells = order * order;
    if (add.size() != cells)
        throw StructuralError(fmt::format("add table has {} entries, expected {}x{}={}", add.size(),
                                          order, order, cells));
    if (mul.size() != cells)
        throw StructuralError(fmt::format("mul table has {} entries, expected {}x{}={}", mul.size(),
                                          order, order, cells));
    for (Elem v : add)
        if (v >= order)
            throw StructuralError(fmt::format("add table entry {} out of range", v));
    for (Elem v : mul)
        if (v >= order)
            throw StructuralError(fmt::format("mul table entry {} out of range", v));
}

} // namespace

RingPtr FiniteRing::make(Parts parts)
{
    check_shape(parts.order, parts.add, parts.mul);
    std::shared_ptr<FiniteRing> r(new FiniteRing());
    const std::size_t n = parts.order;
    r->order_ = n;
    r->add_ = std::move(parts.add);
    r->mul_ = std::move(parts.mul);
    r->name_ = parts.name.empty() ? fmt::format("table({})", n) : std::move(parts.name);
    r->info_ = std::move(parts.info);
    r->generators_ = std::move(parts.generators);

    // Additive identity; index 0 by convention, searched otherwise.
    auto is_zero = [&](Elem z) {
        for (std::size_t x = 0; x < n; ++x)
            if (r->add(z, static_cast<Elem>(x)) != x || r->add(static_cast<Elem>(x), z) != x)
                return false;
        return true;
    };
    r->zero_ = 0;
    for (std::size_t z = 0; z < n; ++z)
        if (is_zero(static_cast<Elem>(z))) {
            r->zero_ = static_cast<Elem>(z);
            break;
        }

    r->neg_.assign(n, r->zero_);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (r->add(static_cast<Elem>(a), static_cast<Elem>(b)) == r->zero_) {
                r->neg_[a] = static_cast<Elem>(b);
                break;
            }

    for (std::size_t e = 0; e < n && !r->one_; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            ok = r->mul(static_cast<Elem>(e), static_cast<Elem>(x)) == x &&
                 r->mul(static_cast<Elem>(x), static_cast<Elem>(e)) == x;
        if (ok)
            r->one_ = static_cast<Elem>(e);
    }

    r->commutative_ = true;
    for (std::size_t a = 0; a < n && r->commutative_; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (r->mul(static_cast<Elem>(a), static_cast<Elem>(b)) !=
                r->mul(static_cast<Elem>(b), static_cast<Elem>(a))) {
                r->commutative_ = false;
                break;
            }

    std::uint64_t exponent = 1;
    for (std::size_t a = 0; a < n; ++a) {
        Elem x = static_cast<Elem>(a);
        std::uint64_t k = 1;
        while (x != r->zero_ && k <= n) {
            x = r->add(x, static_cast<Elem>(a));
            ++k;
        }
        if (x == r->zero_)
            exponent = std::lcm(exponent, k);
    }
    r->characteristic_ = exponent;

    if (parts.display.size() == n) {
        r->display_ = std::move(parts.display);
    } else {
        r->display_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            r->display_[i] = fmt::format("#{}", i);
    }
    return r;
}

Elem FiniteRing::int_scale(std::int64_t m, Elem a) const
{
    Elem base = a;
    std::uint64_t k;
    if (m < 0) {
        base = neg(a);
        k = static_cast<std::uint64_t>(-(m + 1)) + 1;
    } else {
        k = static_cast<std::uint64_t>(m);
    }
    if (characteristic_ > 0)
        k %= characteristic_;
    Elem acc = zero_;
    while (k != 0) {
        if (k & 1u)
            acc = add(acc, base);
        base = add(base, base);
        k >>= 1;
    }
    return acc;
}

std::optional<Elem> FiniteRing::generator(std::string_view name) const
{
    for (const auto& g : generators_)
        if (g.name == name)
            return g.element;
    return std::nullopt;
}

std::string FiniteRing::display_set(const ElementSet& s) const
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](Elem e) {
        if (!first)
            out += ", ";
        out += display(e);
        first = false;
    });
    out += "}";
    return out;
}

bool FiniteRing::same_tables(const FiniteRing& other) const
{
    return order_ == other.order_ && add_ == other.add_ && mul_ == other.mul_;
}

namespace {

struct CubicCheck {
    const char* axiom;
    bool (*holds)(const FiniteRing&, Elem, Elem, Elem);
};

const CubicCheck cubic_checks[] = {
    {"additive associativity",
     [](const FiniteRing& r, Elem a, Elem b, Elem c) {
         return r.add(r.add(a, b), c) == r.add(a, r.add(b, c));
     }},
    {"multiplicative associativity",
     [](const FiniteRing& r, Elem a, Elem b, Elem c) {
         return r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c));
     }},
    {"left distributivity",
     [](const FiniteRing& r, Elem a, Elem b, Elem c) {
         return r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c));
     }},
    {"right distributivity",
     [](const FiniteRing& r, Elem a, Elem b, Elem c) {
         return r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c));
     }},
};

} // namespace

RingValidation validate_ring(const FiniteRing& r, Exec exec)
{
    RingValidation out;
    const std::size_t n = r.order();
    const Elem z = r.zero();

    for (std::size_t x = 0; x < n; ++x) {
        const auto e = static_cast<Elem>(x);
        if (r.add(z, e) != e || r.add(e, z) != e) {
            out.violations.push_back({"additive identity", {z, e}});
            break;
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        const auto e = static_cast<Elem>(a);
        if (r.add(e, r.neg(e)) != z || r.add(r.neg(e), e) != z) {
            out.violations.push_back({"additive inverse", {e}});
            break;
        }
    }
    [&] {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (r.add(static_cast<Elem>(a), static_cast<Elem>(b)) !=
                    r.add(static_cast<Elem>(b), static_cast<Elem>(a))) {
                    out.violations.push_back(
                        {"additive commutativity", {static_cast<Elem>(a), static_cast<Elem>(b)}});
                    return;
                }
    }();

    if (n <= exhaustive_validation_limit) {
        for (const auto& check : cubic_checks) {
            auto bad = kernels::first_failing_triple(
                n, [&](Elem a, Elem b, Elem c) { return check.holds(r, a, b, c); }, exec);
            if (bad)
                out.violations.push_back({check.axiom, {(*bad)[0], (*bad)[1], (*bad)[2]}});
        }
    } else {
        out.sampled = true;
        std::mt19937_64 rng(0x5eedu);
        constexpr std::size_t samples = std::size_t{1} << 20;
        for (const auto& check : cubic_checks) {
            for (std::size_t s = 0; s < samples; ++s) {
                const auto a = static_cast<Elem>(rng() % n);
                const auto b = static_cast<Elem>(rng() % n);
                const auto c = static_cast<Elem>(rng() % n);
                if (!check.holds(r, a, b, c)) {
                    out.violations.push_back({check.axiom, {a, b, c}});
                    break;
                }
            }
        }
    }

    if (r.one()) {
        const Elem one = *r.one();
        for (std::size_t x = 0; x < n; ++x) {
            const auto e = static_cast<Elem>(x);
            if (r.mul(one, e) != e || r.mul(e, one) != e) {
                out.violations.push_back({"multiplicative identity", {one, e}});
                break;
            }
        }
    }
    return out;
}

RingValidation validate_ring_tables(std::size_t order, const std::vector<Elem>& add,
                                    const std::vector<Elem>& mul, Exec exec)
{
    FiniteRing::Parts parts;
    parts.order = order;
    parts.add = add;
    parts.mul = mul;
    auto r = FiniteRing::make(std::move(parts));
    return validate_ring(*r, exec);
}

ElementSet additive_closure(const FiniteRing& r, const ElementSet& seeds)
{
    ElementSet group(r.order());
    group.insert(r.zero());
    std::vector<Elem> members{r.zero()};
    seeds.for_each([&](Elem g) {
        if (group.contains(g))
            return;
        // group <- group + <g>, one coset at a time.
        const std::size_t old_size = members.size();
        Elem step = g;
        while (!group.contains(step)) {
            for (std::size_t i = 0; i < old_size; ++i) {
                const Elem v = r.add(members[i], step);
                if (group.insert(v))
                    members.push_back(v);
            }
            step = r.add(step, g);
        }
    });
    return group;
}

ElementSet product_set(const FiniteRing& r, const ElementSet& a, const ElementSet& b)
{
    ElementSet out(r.order());
    const auto bs = b.members();
    a.for_each([&](Elem x) {
        for (Elem y : bs)
            out.insert(r.mul(x, y));
    });
    return out;
}

std::pair<RingPtr, std::vector<Elem>> subring(const FiniteRing& r, const ElementSet& members,
                                              std::string name)
{
    const auto old = members.members();
    const std::size_t m = old.size();
    if (m == 0 || !members.contains(r.zero()))
        throw std::invalid_argument("subring must contain zero");
    std::vector<Elem> to_new(r.order(), static_cast<Elem>(-1));
    for (std::size_t i = 0; i < m; ++i)
        to_new[old[i]] = static_cast<Elem>(i);

    FiniteRing::Parts parts;
    parts.order = m;
    parts.add.resize(m * m);
    parts.mul.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const Elem s = r.add(old[i], old[j]);
            const Elem p = r.mul(old[i], old[j]);
            if (!members.contains(s) || !members.contains(p))
                throw std::invalid_argument("subset is not closed under + and *");
            parts.add[i * m + j] = to_new[s];
            parts.mul[i * m + j] = to_new[p];
        }
    parts.name = name.empty() ? fmt::format("subring of {} (order {})", r.name(), m) : std::move(name);
    parts.display.reserve(m);
    for (Elem e : old)
        parts.display.push_back(r.display(e));
    return {FiniteRing::make(std::move(parts)), old};
}

} // namespace psido
