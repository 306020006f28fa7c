#include "psido/constructors.hpp"

#include <fmt/format.h>

#include <functional>
#include <set>

namespace psido {

namespace {

void check_bound(std::uint64_t order, std::size_t max_order, std::string_view what)
{
    if (order > max_order)
        throw SizeError(fmt::format("{} would have order {}, above the order bound {}", what, order,
                                    max_order));
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::size_t max_order,
                          std::string_view what)
{
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        v *= base;
        if (v > max_order)
            throw SizeError(fmt::format("{} exceeds the order bound {}", what, max_order));
    }
    return v;
}

// Builds add/mul tables from element-level functions.
FiniteRing::Parts tabulate(std::size_t n, const std::function<Elem(Elem, Elem)>& add,
                           const std::function<Elem(Elem, Elem)>& mul)
{
    FiniteRing::Parts parts;
    parts.order = n;
    parts.add.resize(n * n);
    parts.mul.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            parts.add[a * n + b] = add(static_cast<Elem>(a), static_cast<Elem>(b));
            parts.mul[a * n + b] = mul(static_cast<Elem>(a), static_cast<Elem>(b));
        }
    return parts;
}

// "c*m" with the coefficient dropped when it is 1 and the monomial nonempty.
std::string linear_term(std::uint32_t c, const std::string& basis)
{
    if (basis.empty())
        return std::to_string(c);
    if (c == 1)
        return basis;
    return fmt::format("{}*{}", c, basis);
}

std::string join_terms(const std::vector<std::string>& terms)
{
    if (terms.empty())
        return "0";
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i)
        out += " + " + terms[i];
    return out;
}

bool is_compound(const std::string& s)
{
    return s.find(' ') != std::string::npos;
}

} // namespace

RingPtr make_zn(std::uint32_t n, std::size_t max_order)
{
    if (n == 0)
        throw std::invalid_argument("Z/n needs n >= 1");
    check_bound(n, max_order, fmt::format("Z/{}", n));
    auto parts = tabulate(
        n, [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); },
        [n](Elem a, Elem b) {
            return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % n);
        });
    parts.name = fmt::format("Z/{}", n);
    parts.info = ZnInfo{n};
    for (std::uint32_t i = 0; i < n; ++i)
        parts.display.push_back(std::to_string(i));
    return FiniteRing::make(std::move(parts));
}

TruncPolyLayout::TruncPolyLayout(const TruncPolyInfo& info)
    : modulus(info.modulus), exponents(info.exponents), monomials(1)
{
    for (auto e : exponents)
        monomials *= e;
}

std::vector<std::uint32_t> TruncPolyLayout::exponent_vector(std::size_t k) const
{
    std::vector<std::uint32_t> out(exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        out[i] = static_cast<std::uint32_t>(k % exponents[i]);
        k /= exponents[i];
    }
    return out;
}

std::size_t TruncPolyLayout::monomial_index(std::span<const std::uint32_t> exps) const
{
    std::size_t k = 0;
    for (std::size_t i = exponents.size(); i-- > 0;)
        k = k * exponents[i] + exps[i];
    return k;
}

std::vector<std::uint32_t> TruncPolyLayout::coefficients(Elem e) const
{
    std::vector<std::uint32_t> c(monomials);
    for (std::size_t k = 0; k < monomials; ++k) {
        c[k] = e % modulus;
        e /= modulus;
    }
    return c;
}

Elem TruncPolyLayout::element(std::span<const std::uint32_t> coeffs) const
{
    std::uint64_t v = 0;
    for (std::size_t k = monomials; k-- > 0;)
        v = v * modulus + coeffs[k];
    return static_cast<Elem>(v);
}

Elem TruncPolyLayout::monomial_element(std::size_t k) const
{
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < k; ++i)
        v *= modulus;
    return static_cast<Elem>(v);
}

RingPtr make_truncated_poly(std::uint32_t modulus, std::span<const std::uint32_t> exponents,
                            std::size_t max_order)
{
    if (modulus < 2)
        throw std::invalid_argument("truncated polynomial ring needs modulus >= 2");
    if (exponents.empty())
        throw std::invalid_argument("truncated polynomial ring needs at least one generator");
    std::uint64_t monomials = 1;
    for (auto e : exponents) {
        if (e == 0)
            throw std::invalid_argument("truncation exponents must be positive");
        monomials *= e;
        if (monomials > 64)
            throw SizeError(fmt::format("truncated polynomial ring exceeds the order bound {}",
                                        max_order));
    }
    std::string desc = fmt::format("Z/{}[", modulus);
    const bool single = exponents.size() == 1;
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        vars.push_back(single ? std::string("a") : fmt::format("a{}", i + 1));
    for (std::size_t i = 0; i < vars.size(); ++i)
        desc += (i ? "," : "") + vars[i];
    desc += "]/(";
    for (std::size_t i = 0; i < vars.size(); ++i)
        desc += fmt::format("{}{}^{}", i ? "," : "", vars[i], exponents[i]);
    desc += ")";

    const std::uint64_t order = checked_pow(modulus, monomials, max_order, desc);

    TruncPolyInfo info{modulus, {exponents.begin(), exponents.end()}};
    const TruncPolyLayout layout(info);
    const std::size_t n = order;
    const std::size_t M = layout.monomials;

    std::vector<std::vector<std::uint32_t>> exps(M);
    for (std::size_t k = 0; k < M; ++k)
        exps[k] = layout.exponent_vector(k);

    // mono_product[k*M + l] = index of monomial k*l, or M when it vanishes.
    std::vector<std::size_t> mono_product(M * M, M);
    for (std::size_t k = 0; k < M; ++k)
        for (std::size_t l = 0; l < M; ++l) {
            std::vector<std::uint32_t> e(exponents.size());
            bool zero = false;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = exps[k][i] + exps[l][i];
                if (e[i] >= exponents[i])
                    zero = true;
            }
            if (!zero)
                mono_product[k * M + l] = layout.monomial_index(e);
        }

    std::vector<std::vector<std::uint32_t>> coeffs(n);
    for (std::size_t e = 0; e < n; ++e)
        coeffs[e] = layout.coefficients(static_cast<Elem>(e));

    FiniteRing::Parts parts;
    parts.order = n;
    parts.add.resize(n * n);
    parts.mul.resize(n * n);
    std::vector<std::uint32_t> acc(M);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t k = 0; k < M; ++k)
                acc[k] = (coeffs[a][k] + coeffs[b][k]) % modulus;
            parts.add[a * n + b] = layout.element(acc);
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t k = 0; k < M; ++k) {
                if (coeffs[a][k] == 0)
                    continue;
                for (std::size_t l = 0; l < M; ++l) {
                    const std::size_t p = mono_product[k * M + l];
                    if (p == M || coeffs[b][l] == 0)
                        continue;
                    acc[p] = static_cast<std::uint32_t>(
                        (acc[p] + static_cast<std::uint64_t>(coeffs[a][k]) * coeffs[b][l]) % modulus);
                }
            }
            parts.mul[a * n + b] = layout.element(acc);
        }

    std::vector<std::string> mono_names(M);
    for (std::size_t k = 0; k < M; ++k) {
        std::string s;
        for (std::size_t i = 0; i < exps[k].size(); ++i) {
            if (exps[k][i] == 0)
                continue;
            if (!s.empty())
                s += "*";
            s += vars[i];
            if (exps[k][i] > 1)
                s += fmt::format("^{}", exps[k][i]);
        }
        mono_names[k] = s;
    }
    // Terms listed by total degree, then by monomial index.
    std::vector<std::size_t> order_of_terms(M);
    for (std::size_t k = 0; k < M; ++k)
        order_of_terms[k] = k;
    std::stable_sort(order_of_terms.begin(), order_of_terms.end(), [&](std::size_t x, std::size_t y) {
        std::uint32_t dx = 0, dy = 0;
        for (auto v : exps[x])
            dx += v;
        for (auto v : exps[y])
            dy += v;
        return dx < dy;
    });
    parts.display.resize(n);
    for (std::size_t e = 0; e < n; ++e) {
        std::vector<std::string> terms;
        for (std::size_t k : order_of_terms)
            if (coeffs[e][k] != 0)
                terms.push_back(linear_term(coeffs[e][k], mono_names[k]));
        parts.display[e] = join_terms(terms);
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
        std::vector<std::uint32_t> ev(exponents.size(), 0);
        if (exponents[i] < 2)
            continue; // a_i = 0 in this ring; no generator to name
        ev[i] = 1;
        parts.generators.push_back({vars[i], layout.monomial_element(layout.monomial_index(ev))});
    }
    parts.name = desc;
    parts.info = std::move(info);
    return FiniteRing::make(std::move(parts));
}

namespace {

// Matrix entries over Z_m, flattened row-major with `present` marking which
// positions are free.
RingPtr make_matrices(std::uint32_t modulus, bool upper, std::size_t max_order)
{
    if (modulus < 2)
        throw std::invalid_argument("matrix ring needs modulus >= 2");
    // positions: 0=(1,1) 1=(1,2) 2=(2,1) 3=(2,2)
    std::vector<int> positions = upper ? std::vector<int>{0, 1, 3} : std::vector<int>{0, 1, 2, 3};
    const std::string desc = fmt::format("{}(Z/{})", upper ? "T2" : "M2", modulus);
    const std::uint64_t order = checked_pow(modulus, positions.size(), max_order, desc);
    const std::size_t n = order;
    const std::size_t free = positions.size();

    auto decode = [&](Elem e) {
        std::array<std::uint32_t, 4> m{0, 0, 0, 0};
        for (std::size_t i = 0; i < free; ++i) {
            m[positions[i]] = e % modulus;
            e /= modulus;
        }
        return m;
    };
    auto encode = [&](const std::array<std::uint32_t, 4>& m) {
        std::uint64_t v = 0;
        for (std::size_t i = free; i-- > 0;)
            v = v * modulus + m[positions[i]];
        return static_cast<Elem>(v);
    };

    auto parts = tabulate(
        n,
        [&](Elem a, Elem b) {
            auto x = decode(a), y = decode(b);
            for (int i = 0; i < 4; ++i)
                x[i] = (x[i] + y[i]) % modulus;
            return encode(x);
        },
        [&](Elem a, Elem b) {
            auto x = decode(a), y = decode(b);
            std::array<std::uint32_t, 4> z{};
            z[0] = (x[0] * y[0] + x[1] * y[2]) % modulus;
            z[1] = (x[0] * y[1] + x[1] * y[3]) % modulus;
            z[2] = (x[2] * y[0] + x[3] * y[2]) % modulus;
            z[3] = (x[2] * y[1] + x[3] * y[3]) % modulus;
            return encode(z);
        });

    const char* names[4] = {"e11", "e12", "e21", "e22"};
    parts.display.resize(n);
    for (std::size_t e = 0; e < n; ++e) {
        auto m = decode(static_cast<Elem>(e));
        std::vector<std::string> terms;
        for (int p : positions)
            if (m[p] != 0)
                terms.push_back(linear_term(m[p], names[p]));
        parts.display[e] = join_terms(terms);
    }
    for (int p : positions) {
        std::array<std::uint32_t, 4> m{0, 0, 0, 0};
        m[p] = 1;
        parts.generators.push_back({names[p], encode(m)});
    }
    parts.name = desc;
    parts.info = MatrixInfo{modulus, upper};
    return FiniteRing::make(std::move(parts));
}

} // namespace

RingPtr make_triangular_matrix_ring(std::uint32_t modulus, std::uint32_t size, std::size_t max_order)
{
    if (size != 2)
        throw std::invalid_argument("only 2x2 triangular matrix rings are supported");
    return make_matrices(modulus, true, max_order);
}

RingPtr make_matrix_ring(std::uint32_t modulus, std::uint32_t size, std::size_t max_order)
{
    if (size != 2)
        throw std::invalid_argument("only 2x2 matrix rings are supported");
    return make_matrices(modulus, false, max_order);
}

RingPtr make_product(const RingPtr& left, const RingPtr& right, std::size_t max_order)
{
    const std::uint64_t n1 = left->order(), n2 = right->order();
    const std::string desc = fmt::format("{} x {}", left->name(), right->name());
    check_bound(n1 * n2, max_order, desc);
    const std::size_t n = n1 * n2;
    auto split = [n1](Elem e) { return std::pair<Elem, Elem>{e % n1, e / n1}; };
    auto parts = tabulate(
        n,
        [&](Elem a, Elem b) {
            auto [a1, a2] = split(a);
            auto [b1, b2] = split(b);
            return product_index(*left, left->add(a1, b1), right->add(a2, b2));
        },
        [&](Elem a, Elem b) {
            auto [a1, a2] = split(a);
            auto [b1, b2] = split(b);
            return product_index(*left, left->mul(a1, b1), right->mul(a2, b2));
        });

    // Named display "(d1)*e_1 + (d2)*e_2" needs both identities and
    // generator names that stay unambiguous in the product.
    std::set<std::string> names;
    bool clash = false;
    for (const auto* side : {left.get(), right.get()})
        for (const auto& g : side->generators())
            if (!names.insert(g.name).second || g.name == "e_1" || g.name == "e_2")
                clash = true;
    const bool named = left->unital() && right->unital() && !clash;
    if (named) {
        const Elem e1 = product_index(*left, *left->one(), right->zero());
        const Elem e2 = product_index(*left, left->zero(), *right->one());
        parts.generators.push_back({"e_1", e1});
        parts.generators.push_back({"e_2", e2});
        for (const auto& g : left->generators())
            parts.generators.push_back({g.name, product_index(*left, g.element, right->zero())});
        for (const auto& g : right->generators())
            parts.generators.push_back({g.name, product_index(*left, left->zero(), g.element)});
        parts.display.resize(n);
        for (std::size_t e = 0; e < n; ++e) {
            auto [x, y] = split(static_cast<Elem>(e));
            std::vector<std::string> terms;
            auto component = [&](const FiniteRing& side, Elem v, const char* idem) {
                if (v == side.zero())
                    return;
                const std::string& d = side.display(v);
                if (side.one() && v == *side.one())
                    terms.push_back(idem);
                else if (is_compound(d))
                    terms.push_back(fmt::format("({})*{}", d, idem));
                else
                    terms.push_back(fmt::format("{}*{}", d, idem));
            };
            component(*left, x, "e_1");
            component(*right, y, "e_2");
            parts.display[e] = join_terms(terms);
        }
    }
    parts.name = desc;
    parts.info = ProductInfo{left, right};
    return FiniteRing::make(std::move(parts));
}

} // namespace psido
