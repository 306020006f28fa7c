#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "psido/derivation.hpp"
#include "psido/ring.hpp"

namespace psido {

/// Operands belong to different coefficient rings or derivations.
class IncompatibleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A coefficient was requested where the series carries no information.
class UnknownCoefficientError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct PrecisionPolicy {
    /// Results of non-terminating expansions of exact inputs keep this many
    /// degrees below the top.
    std::int64_t default_floor_drop = 24;
};

/// Element Σ_{i ≤ n} a_i x^i of R((x⁻¹;δ)), coefficients on the left.
///
/// Coefficients from `floor()` up to `top()` are known. Below the floor an
/// exact series is zero; an inexact one has coefficients that are only known
/// to lie in the additive subgroup `unknown()`. Keeping that subgroup instead
/// of a bare flag lets products whose tails are provably zero come out exact.
class Series {
public:
    using Term = std::pair<std::int64_t, Elem>;

    /// An unattached placeholder; only assignment is meaningful.
    Series() = default;
    /// The exact zero series.
    Series(RingPtr ring, DerivationPtr d);

    /// Normalizing constructor. `coeffs[k]` is the coefficient of x^(floor+k).
    /// `unknown` must be an additive subgroup; {0} makes the series exact.
    static Series make(RingPtr ring, DerivationPtr d, std::int64_t floor, std::vector<Elem> coeffs,
                       ElementSet unknown);

    const RingPtr& ring() const { return ring_; }
    const DerivationPtr& derivation() const { return d_; }

    bool exact() const { return unknown_.size() <= 1; }
    bool is_zero() const { return exact() && coeffs_.empty(); }
    /// Lowest degree whose coefficient is known.
    std::int64_t floor() const { return floor_; }
    /// Highest degree with a nonzero coefficient; floor()-1 when no known
    /// coefficient is nonzero.
    std::int64_t top() const { return floor_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const ElementSet& unknown() const { return unknown_; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }

    /// Nonzero known terms, highest degree first.
    std::vector<Term> terms() const;

    /// Coefficient of x^d, or nullopt below the floor of an inexact series.
    std::optional<Elem> coefficient_at(std::int64_t d) const;

    /// (top, a_top) for a series with a nonzero known coefficient.
    std::optional<Term> leading() const;

private:
    RingPtr ring_;
    DerivationPtr d_;
    std::int64_t floor_ = 0;
    std::vector<Elem> coeffs_;
    ElementSet unknown_;
};

Series embed_scalar(const RingPtr& r, const DerivationPtr& d, Elem a);
/// x^k. Throws StructuralError when the ring has no identity.
Series x_power(const RingPtr& r, const DerivationPtr& d, std::int64_t k);
/// Sums repeated degrees.
Series from_terms(const RingPtr& r, const DerivationPtr& d, const std::vector<Series::Term>& terms);
/// O(x^k): nothing known at or below degree k.
Series unknown_below(const RingPtr& r, const DerivationPtr& d, std::int64_t k);

/// x^k·a = Σ_t C(k,t)·δ^t(a)·x^(k−t). Exact when the sum is finite, otherwise
/// cut at `requested_floor`.
Series commute_pow(const RingPtr& r, const DerivationPtr& d, std::int64_t k, Elem a,
                   std::int64_t requested_floor);

Series add(const Series& f, const Series& g);
Series neg(const Series& f);
Series sub(const Series& f, const Series& g);
/// c·f, coefficient-wise on the left.
Series scale(Elem c, const Series& f);
/// m·f in the additive group.
Series int_scale(std::int64_t m, const Series& f);

/// f·g. Expansions that do not terminate are cut at `requested_floor` when
/// given, else at top(f)+top(g)−policy.default_floor_drop; the floor can end
/// up higher when unknown input tails reach further up.
Series mul(const Series& f, const Series& g, const PrecisionPolicy& policy = {},
           std::optional<std::int64_t> requested_floor = std::nullopt);

/// Coefficient-wise δ^j.
Series delta_series(const Series& f, std::uint64_t j);

/// Lowest degree down to which both series are known.
std::int64_t common_floor(const Series& f, const Series& g);

/// Coefficients agree at every degree ≥ floor. Throws UnknownCoefficientError
/// when either series is unknown at some degree in range.
bool equal_to_floor(const Series& f, const Series& g, std::int64_t floor);

struct ConjugationResult {
    bool holds = true;
    std::int64_t floor = 0;
    std::optional<std::int64_t> first_difference; // degree of the highest mismatch
    Series lhs;
    Series rhs;
};

/// Compares δ^j(f) with Σ_{i=0}^{j} (−1)^{j−i} C(j,i) x^i f x^{j−i}, down to
/// the requested floor or the highest floor either side guarantees.
ConjugationResult conjugation_check(const Series& f, std::uint64_t j, std::int64_t precision_floor,
                                    const PrecisionPolicy& policy = {});

std::string to_string(const Series& f);

} // namespace psido
