#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "psido/element_set.hpp"
#include "psido/kernels.hpp"

namespace psido {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// Default cap on the order of constructed rings.
inline constexpr std::size_t default_max_order = 4096;

/// Table shapes are inconsistent (as opposed to an axiom failing).
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A construction would exceed the configured order bound.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

// How a ring was built. Derivation and display helpers dispatch on this.
struct TableInfo {};
struct ZnInfo {
    std::uint32_t modulus;
};
struct TruncPolyInfo {
    std::uint32_t modulus;
    std::vector<std::uint32_t> exponents;
};
struct MatrixInfo {
    std::uint32_t modulus;
    bool upper_triangular;
};
struct ProductInfo {
    RingPtr left;
    RingPtr right;
};
using RingInfo = std::variant<TableInfo, ZnInfo, TruncPolyInfo, MatrixInfo, ProductInfo>;

struct Generator {
    std::string name;
    Elem element;
};

/// Finite associative ring given by Cayley tables. Identity is optional.
///
/// Construction only checks table shapes; `validate_ring` decides the ring
/// axioms. Every other operation in the library assumes a valid ring.
class FiniteRing {
public:
    struct Parts {
        std::size_t order = 0;
        std::vector<Elem> add;
        std::vector<Elem> mul;
        std::string name;
        RingInfo info = TableInfo{};
        std::vector<std::string> display; // one per element, may be empty
        std::vector<Generator> generators;
    };

    /// Throws StructuralError when the tables do not have order*order entries
    /// or reference indices outside [0, order).
    static RingPtr make(Parts parts);

    std::size_t order() const { return order_; }
    Elem zero() const { return zero_; }
    const std::optional<Elem>& one() const { return one_; }
    bool unital() const { return one_.has_value(); }
    bool commutative() const { return commutative_; }

    Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    /// m·a in the additive group, by doubling.
    Elem int_scale(std::int64_t m, Elem a) const;

    /// Exponent of the additive group: the least e > 0 with e·a = 0 for all a.
    std::uint64_t characteristic() const { return characteristic_; }

    const std::string& name() const { return name_; }
    const RingInfo& info() const { return info_; }
    const std::vector<Generator>& generators() const { return generators_; }
    std::optional<Elem> generator(std::string_view name) const;

    /// Display form of an element: an expression over the generators when one
    /// is available, otherwise the raw index as `#k`.
    const std::string& display(Elem a) const { return display_[a]; }
    std::string display_set(const ElementSet& s) const;

    const std::vector<Elem>& add_table() const { return add_; }
    const std::vector<Elem>& mul_table() const { return mul_; }
    const std::vector<Elem>& neg_table() const { return neg_; }

    /// True when the tables are literally the same (same labelling).
    bool same_tables(const FiniteRing& other) const;

private:
    FiniteRing() = default;

    std::size_t order_ = 0;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    Elem zero_ = 0;
    std::optional<Elem> one_;
    bool commutative_ = false;
    std::uint64_t characteristic_ = 1;
    std::string name_;
    RingInfo info_;
    std::vector<std::string> display_;
    std::vector<Generator> generators_;
};

struct Violation {
    std::string axiom;
    std::vector<Elem> witness;
};

struct RingValidation {
    std::vector<Violation> violations;
    bool sampled = false; // cubic checks were sampled rather than exhaustive
    bool ok() const { return violations.empty(); }
};

/// Orders up to this value get exhaustive cubic axiom checks.
inline constexpr std::size_t exhaustive_validation_limit = 256;

RingValidation validate_ring(const FiniteRing& r, Exec exec = Exec::parallel);

/// Raw-table entry point: throws StructuralError on dimension mismatch before
/// looking at any axiom.
RingValidation validate_ring_tables(std::size_t order, const std::vector<Elem>& add,
                                    const std::vector<Elem>& mul, Exec exec = Exec::parallel);

/// Least additive subgroup containing `seeds`.
ElementSet additive_closure(const FiniteRing& r, const ElementSet& seeds);

/// Pointwise products {a·b : a ∈ A, b ∈ B}.
ElementSet product_set(const FiniteRing& r, const ElementSet& a, const ElementSet& b);

/// Restricts a ring to a subset closed under + and ·, relabelling elements in
/// increasing index order. The returned map sends new indices to old ones.
std::pair<RingPtr, std::vector<Elem>> subring(const FiniteRing& r, const ElementSet& members,
                                              std::string name = {});

} // namespace psido
