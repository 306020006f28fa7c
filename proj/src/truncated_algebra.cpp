#include "psido/truncated_algebra.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace psido {

TruncatedAlgebra::TruncatedAlgebra(std::uint32_t modulus, std::vector<std::uint32_t> exponents,
                                   std::size_t max_monomials)
    : modulus_(modulus), exponents_(std::move(exponents))
{
    if (modulus_ < 1)
        throw std::invalid_argument("modulus must be positive");
    for (std::uint32_t e : exponents_) {
        if (e < 1)
            throw std::invalid_argument("exponent bounds must be at least 1");
        stride_.push_back(monomials_);
        monomials_ *= e;
        if (monomials_ > max_monomials)
            throw std::length_error(
                fmt::format("truncated algebra needs more than {} monomials", max_monomials));
    }
    digits_.reserve(monomials_);
    for (std::size_t k = 0; k < monomials_; ++k)
        digits_.push_back(digits(k));
}

std::vector<std::uint32_t> TruncatedAlgebra::digits(std::size_t k) const
{
    std::vector<std::uint32_t> out(exponents_.size());
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        out[i] = static_cast<std::uint32_t>(k % exponents_[i]);
        k /= exponents_[i];
    }
    return out;
}

double TruncatedAlgebra::log2_order() const
{
    return static_cast<double>(monomials_) * std::log2(static_cast<double>(modulus_));
}

TruncatedAlgebra::Poly TruncatedAlgebra::one() const
{
    Poly p = zero();
    p[0] = 1 % modulus_;
    return p;
}

TruncatedAlgebra::Poly TruncatedAlgebra::generator(std::size_t i) const
{
    Poly p = zero();
    if (exponents_.at(i) > 1)
        p[stride_[i]] = 1 % modulus_;
    return p;
}

std::string TruncatedAlgebra::generator_name(std::size_t i) const
{
    return exponents_.size() == 1 ? "a" : fmt::format("a{}", i + 1);
}

TruncatedAlgebra::Poly TruncatedAlgebra::add(const Poly& a, const Poly& b) const
{
    Poly out(monomials_);
    for (std::size_t k = 0; k < monomials_; ++k)
        out[k] = (a[k] + b[k]) % modulus_;
    return out;
}

TruncatedAlgebra::Poly TruncatedAlgebra::mul(const Poly& a, const Poly& b) const
{
    Poly out = zero();
    for (std::size_t p = 0; p < monomials_; ++p) {
        if (a[p] == 0)
            continue;
        for (std::size_t q = 0; q < monomials_; ++q) {
            if (b[q] == 0)
                continue;
            std::size_t target = 0;
            bool vanishes = false;
            for (std::size_t i = 0; i < exponents_.size(); ++i) {
                const std::uint32_t e = digits_[p][i] + digits_[q][i];
                if (e >= exponents_[i]) {
                    vanishes = true;
                    break;
                }
                target += e * stride_[i];
            }
            if (!vanishes)
                out[target] = static_cast<std::uint32_t>(
                    (out[target] + static_cast<std::uint64_t>(a[p]) * b[q]) % modulus_);
        }
    }
    return out;
}

bool TruncatedAlgebra::is_zero(const Poly& a) const
{
    return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

std::optional<std::size_t> TruncatedAlgebra::nilpotency_index(const Poly& a, std::size_t cap) const
{
    Poly power = a;
    for (std::size_t k = 1; k <= cap; ++k) {
        if (is_zero(power))
            return k;
        power = mul(power, a);
    }
    return std::nullopt;
}

std::string TruncatedAlgebra::display(const Poly& a) const
{
    std::vector<std::size_t> order(monomials_);
    std::iota(order.begin(), order.end(), 0);
    auto total = [&](std::size_t k) {
        return std::accumulate(digits_[k].begin(), digits_[k].end(), 0u);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return total(x) < total(y); });
    std::vector<std::string> terms;
    for (std::size_t k : order) {
        if (a[k] == 0)
            continue;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < exponents_.size(); ++i) {
            const std::uint32_t e = digits_[k][i];
            if (e == 1)
                factors.push_back(generator_name(i));
            else if (e > 1)
                factors.push_back(fmt::format("{}^{}", generator_name(i), e));
        }
        std::string mono = fmt::format("{}", fmt::join(factors, "*"));
        if (mono.empty())
            terms.push_back(std::to_string(a[k]));
        else if (a[k] == 1)
            terms.push_back(mono);
        else
            terms.push_back(fmt::format("{}*{}", a[k], mono));
    }
    if (terms.empty())
        return "0";
    return fmt::format("{}", fmt::join(terms, " + "));
}

LaurentPoly laurent_mul(const TruncatedAlgebra& alg, const LaurentPoly& f, const LaurentPoly& g)
{
    LaurentPoly out;
    if (f.coeffs.empty() || g.coeffs.empty())
        return out;
    out.low = f.low + g.low;
    out.coeffs.assign(f.coeffs.size() + g.coeffs.size() - 1, alg.zero());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        for (std::size_t j = 0; j < g.coeffs.size(); ++j)
            out.coeffs[i + j] = alg.add(out.coeffs[i + j], alg.mul(f.coeffs[i], g.coeffs[j]));
    return out;
}

bool laurent_is_zero(const TruncatedAlgebra& alg, const LaurentPoly& f)
{
    return std::all_of(f.coeffs.begin(), f.coeffs.end(),
                       [&](const TruncatedAlgebra::Poly& c) { return alg.is_zero(c); });
}

std::string laurent_display(const TruncatedAlgebra& alg, const LaurentPoly& f)
{
    std::vector<std::string> terms;
    for (std::size_t k = f.coeffs.size(); k-- > 0;) {
        const auto& c = f.coeffs[k];
        if (alg.is_zero(c))
            continue;
        const std::int64_t deg = f.low + static_cast<std::int64_t>(k);
        std::string coeff = alg.display(c);
        if (coeff.find(' ') != std::string::npos)
            coeff = "(" + coeff + ")";
        if (deg == 0)
            terms.push_back(coeff);
        else
            terms.push_back(fmt::format("{}*x^{}", coeff, deg));
    }
    if (terms.empty())
        return "0";
    return fmt::format("{}", fmt::join(terms, " + "));
}

LaurentPoly counterexample_series(const TruncatedAlgebra& alg)
{
    const std::size_t n = alg.exponents().size();
    LaurentPoly f;
    f.low = 1 - static_cast<std::int64_t>(n);
    f.coeffs.assign(n, alg.zero());
    // a_i sits at degree 1 − i, i.e. index n − i from the bottom.
    for (std::size_t i = 1; i <= n; ++i)
        f.coeffs[n - i] = alg.generator(i - 1);
    return f;
}

} // namespace psido
