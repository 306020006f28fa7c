#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psido/derivation.hpp"
#include "psido/ideal.hpp"
#include "psido/kernels.hpp"
#include "psido/ring.hpp"

namespace psido {

/// s_1, ..., s_r from S whose prefix products p_t = s_1⋯s_t are all nonzero
/// and satisfy p_r = p_q for q = repeat_from (0-based, q < r−1). Repeating
/// s_{q+2}..s_r forever gives an infinite sequence with no zero prefix.
struct CycleWitness {
    std::vector<Elem> sequence;
    std::size_t repeat_from = 0;
};

struct TNilpVerdict {
    bool t_nilpotent = true;
    /// Set when t_nilpotent: every product of `bound` elements of S is 0.
    std::size_t bound = 1;
    /// Set when not t_nilpotent.
    std::optional<CycleWitness> cycle;
};

/// Decides left T-nilpotency of S by cycle search on the graph of nonzero
/// prefix products (v → v·s).
TNilpVerdict is_left_t_nilpotent(const FiniteRing& r, const ElementSet& s);

/// Re-checks a verdict without the search: a cycle must multiply out as
/// claimed, a bound must leave no nonzero product of that length.
bool witness_valid(const FiniteRing& r, const ElementSet& s, const TNilpVerdict& v);

struct AnnihilatorSeries {
    std::vector<ElementSet> stages; // I^(0) = {0} up to the stable stage
    bool reached_top = false;
    std::size_t stabilization_step = 0;
    /// Per stage, whether δ maps it into itself. Empty without a derivation.
    std::vector<bool> delta_stable;
};

/// I^(k+1) = {a ∈ N : aN ⊆ I^(k)} from I^(0) = {0}. N need not be unital.
AnnihilatorSeries upper_left_annihilator_series(const FiniteRing& n, const Derivation* d = nullptr);

struct LevitzkiOutcome {
    bool t_nilpotent = false;
    bool reached_top = false;
    bool agree() const { return t_nilpotent == reached_top; }
};

LevitzkiOutcome levitzki_equivalence(const FiniteRing& n, const Derivation* d = nullptr);

/// Sum of the left T-nilpotent ideals, as {a : (a) is left T-nilpotent}.
Ideal radideal_Il(const RingPtr& r, Exec exec = Exec::parallel);

/// Where an element of the generating set S(a) of the δ-radideal test came
/// from: δ^j(a)·r, or δ^j(a) itself when `right` is absent.
struct Origin {
    std::uint64_t j = 0;
    std::optional<Elem> right;
};

struct IlDeltaProbe {
    ElementSet generators;                    // S(a)
    std::vector<std::optional<Origin>> origin; // indexed by element
    TNilpVerdict verdict;
};

/// S(a) = ∪_j δ^j(a)R, plus the δ^j(a) themselves when R has no identity,
/// and its T-nilpotency verdict.
IlDeltaProbe probe_il_delta(const FiniteRing& r, const Derivation& d, Elem a);

struct IlDeltaResult {
    ElementSet members;
    bool is_ideal = false;
    bool is_delta_subset = false;
};

IlDeltaResult radideal_Il_delta(const FiniteRing& r, const Derivation& d, Exec exec = Exec::parallel);

/// A chain stage that cannot be carried to the next quotient.
class ChainError : public std::runtime_error {
public:
    ChainError(const std::string& what, std::size_t stage, ElementSet members)
        : std::runtime_error(what), stage_(stage), members_(std::move(members))
    {
    }
    std::size_t stage() const { return stage_; }
    const ElementSet& members() const { return members_; }

private:
    std::size_t stage_;
    ElementSet members_;
};

struct RadidealChain {
    std::vector<Ideal> stages; // ℐ^(1), ℐ^(2), ... up to the first repeat
    Ideal limit;
    std::size_t stabilization_step = 0; // least k with ℐ^(k) = ℐ^(k+1)
};

/// Quotient-and-pull-back iteration of ℐ_l (or ℐ_{l,δ} with the induced
/// derivation when d is given).
RadidealChain higher_radideals(const RingPtr& r, const DerivationPtr& d = nullptr,
                               Exec exec = Exec::parallel);

/// Largest nilpotent ideal, by a principal-ideal sweep.
Ideal prime_radical(const RingPtr& r, Exec exec = Exec::parallel);

/// Least k with I^k = 0, or nullopt when I^|R| ≠ 0.
std::optional<std::size_t> nilpotency_index(const FiniteRing& r, const ElementSet& i);

} // namespace psido
