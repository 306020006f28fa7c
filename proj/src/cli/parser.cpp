#include "psido/cli/parser.hpp"

#include <fmt/format.h>

#include <cctype>
#include <charconv>

namespace psido::cli {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what), position_(position)
{
}

bool is_reserved_name(std::string_view name)
{
    return name == "x" || name == "D" || name == "O";
}

namespace {

struct Token {
    enum class Type { integer, hash_index, ident, plus, minus, star, caret, lparen, rparen, end };
    Type type;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            out.push_back({Token::Type::integer, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (c == '#') {
            ++i;
            if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                throw ParseError(fmt::format("'#' must be followed by an element index (column {})", start),
                                 start);
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            out.push_back({Token::Type::hash_index, std::string(s.substr(start + 1, i - start - 1)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Token::Type::ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Token::Type t;
        switch (c) {
        case '+':
            t = Token::Type::plus;
            break;
        case '-':
            t = Token::Type::minus;
            break;
        case '*':
            t = Token::Type::star;
            break;
        case '^':
            t = Token::Type::caret;
            break;
        case '(':
            t = Token::Type::lparen;
            break;
        case ')':
            t = Token::Type::rparen;
            break;
        default:
            throw ParseError(fmt::format("unexpected character '{}' at column {}", c, start), start);
        }
        out.push_back({t, std::string(1, c), start});
        ++i;
    }
    out.push_back({Token::Type::end, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view s) : tokens_(lex(s)) {}

    ExprPtr parse()
    {
        ExprPtr e = sum();
        if (peek().type != Token::Type::end) {
            if (peek().type == Token::Type::rparen)
                fail("unbalanced ')'");
            fail(fmt::format("unexpected '{}'", peek().text));
        }
        return e;
    }

private:
    using T = Token::Type;

    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }
    bool accept(T t)
    {
        if (peek().type != t)
            return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        const Token& t = peek();
        if (t.type == T::end)
            throw ParseError(fmt::format("parse error at end of input: {}", msg), t.pos);
        throw ParseError(fmt::format("parse error at column {}: {}", t.pos, msg), t.pos);
    }

    void expect(T t, const char* what)
    {
        if (!accept(t))
            fail(fmt::format("expected {}", what));
    }

    static ExprPtr node(Expr::Kind k, std::size_t pos, std::vector<ExprPtr> children = {},
                        std::int64_t value = 0, std::string name = {})
    {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->position = pos;
        e->children = std::move(children);
        e->value = value;
        e->name = std::move(name);
        return e;
    }

    std::int64_t integer_value(const Token& t, const char* what)
    {
        std::int64_t v = 0;
        const auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || p != t.text.data() + t.text.size())
            throw ParseError(fmt::format("{} overflow at column {}", what, t.pos), t.pos);
        return v;
    }

    // ['-'] INT, optionally in parentheses.
    std::int64_t exponent()
    {
        const bool paren = accept(T::lparen);
        const bool negative = accept(T::minus);
        if (peek().type != T::integer)
            fail("expected an integer exponent");
        std::int64_t v = integer_value(take(), "exponent");
        if (negative)
            v = -v;
        if (paren)
            expect(T::rparen, "')'");
        return v;
    }

    ExprPtr sum()
    {
        ExprPtr left = product();
        while (true) {
            const std::size_t pos = peek().pos;
            if (accept(T::plus))
                left = node(Expr::Kind::sum, pos, {left, product()});
            else if (accept(T::minus))
                left = node(Expr::Kind::difference, pos, {left, product()});
            else
                return left;
        }
    }

    ExprPtr product()
    {
        ExprPtr left = unary();
        while (true) {
            const std::size_t pos = peek().pos;
            if (!accept(T::star))
                return left;
            left = node(Expr::Kind::product, pos, {left, unary()});
        }
    }

    ExprPtr unary()
    {
        const std::size_t pos = peek().pos;
        if (accept(T::minus))
            return node(Expr::Kind::negate, pos, {unary()});
        return power();
    }

    ExprPtr power()
    {
        const Token& t = peek();
        if (t.type == T::ident && t.text == "x") {
            take();
            std::int64_t k = 1;
            if (accept(T::caret))
                k = exponent();
            return node(Expr::Kind::x_power, t.pos, {}, k);
        }
        ExprPtr base = atom();
        if (peek().type == T::caret) {
            const std::size_t pos = take().pos;
            const std::int64_t k = exponent();
            if (k < 0)
                throw ParseError(
                    fmt::format("negative power at column {}: only x may be raised to negative powers", pos),
                    pos);
            return node(Expr::Kind::power, pos, {base}, k);
        }
        return base;
    }

    ExprPtr atom()
    {
        const Token& t = peek();
        switch (t.type) {
        case T::integer:
            take();
            return node(Expr::Kind::integer, t.pos, {}, integer_value(t, "integer"));
        case T::hash_index:
            take();
            return node(Expr::Kind::raw_index, t.pos, {}, integer_value(t, "element index"));
        case T::lparen: {
            take();
            ExprPtr inner = sum();
            if (!accept(T::rparen))
                fail("unbalanced '(': expected ')'");
            return node(Expr::Kind::group, t.pos, {inner});
        }
        case T::ident:
            if (t.text == "D") {
                take();
                std::int64_t j = 1;
                if (accept(T::caret))
                    j = exponent();
                if (j < 0)
                    throw ParseError(fmt::format("D^j needs j >= 0 (column {})", t.pos), t.pos);
                expect(T::lparen, "'(' after D");
                ExprPtr inner = sum();
                if (!accept(T::rparen))
                    fail("unbalanced '(': expected ')'");
                return node(Expr::Kind::delta, t.pos, {inner}, j);
            }
            if (t.text == "O") {
                take();
                expect(T::lparen, "'(' after O");
                if (!(peek().type == T::ident && peek().text == "x"))
                    fail("expected x inside O(...)");
                take();
                std::int64_t k = 1;
                if (accept(T::caret))
                    k = exponent();
                if (!accept(T::rparen))
                    fail("unbalanced '(': expected ')'");
                return node(Expr::Kind::unknown, t.pos, {}, k);
            }
            take();
            return node(Expr::Kind::identifier, t.pos, {}, 0, t.text);
        case T::end:
            fail("expected a term");
        default:
            fail(fmt::format("unexpected '{}'", t.text));
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse_expr(std::string_view input)
{
    return Parser(input).parse();
}

std::string describe(const Expr& e)
{
    auto child = [&](std::size_t k) { return describe(*e.children[k]); };
    switch (e.kind) {
    case Expr::Kind::integer:
        return std::to_string(e.value);
    case Expr::Kind::raw_index:
        return fmt::format("#{}", e.value);
    case Expr::Kind::identifier:
        return e.name;
    case Expr::Kind::x_power:
        return e.value == 1 ? "x" : fmt::format("x^{}", e.value);
    case Expr::Kind::sum:
        return fmt::format("Sum({}, {})", child(0), child(1));
    case Expr::Kind::difference:
        return fmt::format("Diff({}, {})", child(0), child(1));
    case Expr::Kind::product:
        return fmt::format("Prod({}, {})", child(0), child(1));
    case Expr::Kind::negate:
        return fmt::format("Neg({})", child(0));
    case Expr::Kind::power:
        return fmt::format("Pow({}, {})", child(0), e.value);
    case Expr::Kind::delta:
        return fmt::format("Delta({}, {})", e.value, child(0));
    case Expr::Kind::unknown:
        return fmt::format("O(x^{})", e.value);
    case Expr::Kind::group:
        return fmt::format("Group({})", child(0));
    }
    return "?";
}

} // namespace psido::cli
