#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace psido::cli {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position);
    /// 0-based offset into the parsed text; equal to its length at end of input.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind {
        integer,    // value
        raw_index,  // #value
        identifier, // name
        x_power,    // x^value
        sum,
        difference,
        product,
        negate,
        power,      // children[0]^value, value ≥ 0
        delta,      // D^value(children[0])
        unknown,    // O(x^value)
        group,      // ( children[0] )
    };

    Kind kind;
    std::int64_t value = 0;
    std::string name;
    std::vector<ExprPtr> children;
    std::size_t position = 0;
};

/// sum/difference < product (explicit `*`) < unary minus < powers and D^j(...)
/// < atoms. Names `x`, `D` and `O` are reserved.
ExprPtr parse_expr(std::string_view input);

/// Tree form, e.g. "Sum(Prod(a, x^2), x^-1)".
std::string describe(const Expr& e);

bool is_reserved_name(std::string_view name);

} // namespace psido::cli
