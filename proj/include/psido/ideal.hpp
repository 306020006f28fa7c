#pragma once

#include <optional>
#include <vector>

#include "psido/derivation.hpp"
#include "psido/ring.hpp"

namespace psido {

enum class Sidedness { left, right, two_sided };

struct Ideal {
    RingPtr ring;
    ElementSet members;
    Sidedness side = Sidedness::two_sided;

    bool contains(Elem e) const { return members.contains(e); }
    std::size_t size() const { return members.size(); }
};

/// Least ideal of the given sidedness containing `seed`.
Ideal ideal_generated(const RingPtr& r, const ElementSet& seed,
                      Sidedness side = Sidedness::two_sided);

/// True when `s` is an additive subgroup absorbing multiplication per `side`.
bool is_ideal(const FiniteRing& r, const ElementSet& s, Sidedness side = Sidedness::two_sided);

/// d(I) ⊆ I.
bool is_delta_ideal(const FiniteRing& r, const Derivation& d, const Ideal& i);

/// ab ∈ I implies a·d(b) ∈ I. With I = {0} this decides δ-compatibility of R.
bool is_delta_compatible(const FiniteRing& r, const Derivation& d, const Ideal& i);
bool is_delta_compatible_ring(const FiniteRing& r, const Derivation& d);

/// {a : a·s = 0 for all s ∈ S}.
ElementSet left_annihilator(const FiniteRing& r, const ElementSet& s);

/// Refusal to induce a derivation on R/I because I is not a δ-ideal.
class QuotientError : public std::invalid_argument {
public:
    QuotientError(const std::string& what, Elem witness)
        : std::invalid_argument(what), witness_(witness)
    {
    }
    Elem witness() const { return witness_; }

private:
    Elem witness_;
};

struct QuotientData {
    RingPtr quotient;
    std::vector<Elem> projection;      // element -> coset index
    std::vector<Elem> representative;  // coset index -> least element
    DerivationPtr induced_derivation;  // null when no derivation was supplied
};

/// R/I with cosets labelled in order of their least representative.
QuotientData quotient_ring(const RingPtr& r, const Ideal& i, const Derivation* d = nullptr);

/// Preimage under the projection of a set of cosets.
ElementSet pull_back(const QuotientData& q, const ElementSet& cosets);

/// All two-sided ideals, smallest first (by size, then by member list).
std::vector<Ideal> enumerate_ideals(const RingPtr& r);

/// Distinct principal two-sided ideals (a), one per generating element class.
std::vector<Ideal> principal_ideals(const RingPtr& r);

} // namespace psido
