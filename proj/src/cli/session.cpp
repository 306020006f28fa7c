#include "psido/cli/session.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "psido/constructors.hpp"
#include "psido/fixtures.hpp"
#include "psido/ideal.hpp"
#include "psido/radicals.hpp"

namespace psido::cli {

namespace {

// Failure the user can fix; printed as "error: ...".
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::pair<std::string_view, std::string_view> split_word(std::string_view s)
{
    s = trim(s);
    const auto cut = s.find_first_of(" \t");
    if (cut == std::string_view::npos)
        return {s, {}};
    return {s.substr(0, cut), trim(s.substr(cut))};
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto cut = s.find(sep, start);
        out.push_back(trim(s.substr(start, cut - start)));
        if (cut == std::string_view::npos)
            return out;
        start = cut + 1;
    }
}

template <typename Int>
Int parse_int(std::string_view s, const char* what)
{
    s = trim(s);
    Int v{};
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw UsageError(fmt::format("{} must be an integer, got '{}'", what, s));
    return v;
}

// key=value words; values run to the next space.
std::map<std::string, std::string, std::less<>> key_values(std::string_view s)
{
    std::map<std::string, std::string, std::less<>> out;
    while (!(s = trim(s)).empty()) {
        auto [word, rest] = split_word(s);
        const auto eq = word.find('=');
        if (eq == std::string_view::npos)
            throw UsageError(fmt::format("expected key=value, got '{}'", word));
        out.emplace(std::string(word.substr(0, eq)), std::string(word.substr(eq + 1)));
        s = rest;
    }
    return out;
}

std::string need(const std::map<std::string, std::string, std::less<>>& kv, std::string_view key,
                 std::string_view form)
{
    const auto it = kv.find(key);
    if (it == kv.end())
        throw UsageError(fmt::format("missing {}=...; expected `{}`", key, form));
    return it->second;
}

// Top-level [ ... ] groups, e.g. "[zn 2] [zn 3]" -> {"zn 2", "zn 3"}.
std::vector<std::string> bracket_groups(std::string_view s)
{
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '[') {
            if (depth++ == 0)
                start = i + 1;
        } else if (s[i] == ']') {
            if (--depth == 0)
                out.emplace_back(trim(s.substr(start, i - start)));
            if (depth < 0)
                throw UsageError("unbalanced ']'");
        } else if (depth == 0 && !std::isspace(static_cast<unsigned char>(s[i]))) {
            throw UsageError("expected [definition] [definition]");
        }
    }
    if (depth != 0)
        throw UsageError("unbalanced '['");
    return out;
}

std::vector<Elem> table_rows(std::string_view text, std::size_t n, const char* what)
{
    std::vector<Elem> out;
    for (auto row : split(text, ';'))
        for (auto cell : split(row, ','))
            out.push_back(parse_int<Elem>(cell, what));
    if (out.size() != n * n)
        throw UsageError(fmt::format("{} table has {} entries, expected {}x{}", what, out.size(), n, n));
    return out;
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string ring_summary(const FiniteRing& r)
{
    return fmt::format("ring {}: order {}, {}, {}", r.name(), r.order(),
                       r.unital() ? "unital" : "no identity",
                       r.commutative() ? "commutative" : "noncommutative");
}

struct EvalContext {
    RingPtr ring;
    DerivationPtr d;
    const std::map<std::string, Series, std::less<>>* bindings;
    PrecisionPolicy precision;
};

Series eval(const EvalContext& c, const Expr& e)
{
    const FiniteRing& R = *c.ring;
    auto where = [&](const std::string& msg) {
        return UsageError(fmt::format("{} (column {})", msg, e.position));
    };
    auto one = [&]() {
        if (!R.unital())
            throw where("integer literals and powers of x need a ring with identity");
        return *R.one();
    };
    switch (e.kind) {
    case Expr::Kind::integer:
        return embed_scalar(c.ring, c.d, R.int_scale(e.value, one()));
    case Expr::Kind::raw_index:
        if (e.value < 0 || static_cast<std::size_t>(e.value) >= R.order())
            throw where(fmt::format("element index #{} out of range for order {}", e.value, R.order()));
        return embed_scalar(c.ring, c.d, static_cast<Elem>(e.value));
    case Expr::Kind::identifier:
        if (auto g = R.generator(e.name))
            return embed_scalar(c.ring, c.d, *g);
        if (c.bindings)
            if (auto it = c.bindings->find(e.name); it != c.bindings->end())
                return it->second;
        throw where(fmt::format("unknown identifier '{}'", e.name));
    case Expr::Kind::x_power:
        one();
        return x_power(c.ring, c.d, e.value);
    case Expr::Kind::sum:
        return add(eval(c, *e.children[0]), eval(c, *e.children[1]));
    case Expr::Kind::difference:
        return sub(eval(c, *e.children[0]), eval(c, *e.children[1]));
    case Expr::Kind::product:
        return mul(eval(c, *e.children[0]), eval(c, *e.children[1]), c.precision);
    case Expr::Kind::negate:
        return neg(eval(c, *e.children[0]));
    case Expr::Kind::power: {
        const Series base = eval(c, *e.children[0]);
        Series acc = embed_scalar(c.ring, c.d, one());
        for (std::int64_t k = 0; k < e.value; ++k)
            acc = mul(acc, base, c.precision);
        return acc;
    }
    case Expr::Kind::delta:
        return delta_series(eval(c, *e.children[0]), static_cast<std::uint64_t>(e.value));
    case Expr::Kind::unknown:
        return unknown_below(c.ring, c.d, e.value);
    case Expr::Kind::group:
        return eval(c, *e.children[0]);
    }
    throw where("unsupported expression");
}

Elem eval_element(const RingPtr& r, const DerivationPtr& d, std::string_view text)
{
    const auto expr = parse_expr(text);
    const Series s = eval({r, d, nullptr, {}}, *expr);
    if (s.is_zero())
        return r->zero();
    const auto terms = s.terms();
    if (!s.exact() || terms.size() != 1 || terms.front().first != 0)
        throw UsageError(fmt::format("'{}' is not an element of {}", text, r->name()));
    return terms.front().second;
}

RingPtr build_ring(std::string_view def, std::size_t max_order, std::string* catalog_name,
                   DerivationPtr* catalog_derivation)
{
    auto [kind, rest] = split_word(def);
    if (kind == "zn")
        return make_zn(parse_int<std::uint32_t>(rest, "zn modulus"), max_order);
    if (kind == "truncpoly") {
        const auto kv = key_values(rest);
        const char* form = "ring truncpoly mod=M exps=e1,e2,...";
        std::vector<std::uint32_t> exps;
        for (auto e : split(need(kv, "exps", form), ','))
            exps.push_back(parse_int<std::uint32_t>(e, "exponent"));
        return make_truncated_poly(parse_int<std::uint32_t>(need(kv, "mod", form), "mod"), exps,
                                   max_order);
    }
    if (kind == "tri")
        return make_triangular_matrix_ring(
            parse_int<std::uint32_t>(need(key_values(rest), "mod", "ring tri mod=M"), "mod"), 2,
            max_order);
    if (kind == "matrix")
        return make_matrix_ring(
            parse_int<std::uint32_t>(need(key_values(rest), "mod", "ring matrix mod=M"), "mod"), 2,
            max_order);
    if (kind == "product") {
        const auto groups = bracket_groups(rest);
        if (groups.size() != 2)
            throw UsageError("expected `ring product [definition] [definition]`");
        return make_product(build_ring(groups[0], max_order, nullptr, nullptr),
                            build_ring(groups[1], max_order, nullptr, nullptr), max_order);
    }
    if (kind == "table") {
        const auto kv = key_values(rest);
        const char* form = "ring table n=N add=r0;r1;... mul=r0;r1;...";
        const auto n = parse_int<std::size_t>(need(kv, "n", form), "n");
        if (n > max_order)
            throw SizeError(fmt::format("table ring of order {} is above the order bound {}", n, max_order));
        auto add = table_rows(need(kv, "add", form), n, "add");
        auto mul = table_rows(need(kv, "mul", form), n, "mul");
        const RingValidation v = validate_ring_tables(n, add, mul);
        if (!v.ok()) {
            const Violation& first = v.violations.front();
            std::string w;
            for (Elem e : first.witness)
                w += fmt::format("{}#{}", w.empty() ? "" : ", ", e);
            throw UsageError(fmt::format("tables violate {} (witness {}){}", first.axiom, w,
                                        v.violations.size() > 1
                                            ? fmt::format(" and {} more", v.violations.size() - 1)
                                            : ""));
        }
        FiniteRing::Parts parts;
        parts.order = n;
        parts.add = std::move(add);
        parts.mul = std::move(mul);
        parts.name = fmt::format("table({})", n);
        return FiniteRing::make(std::move(parts));
    }
    if (kind == "catalog") {
        if (!catalog_name)
            throw UsageError("catalog rings cannot be nested in a product");
        const auto fx = catalog_fixture(trim(rest));
        if (!fx) {
            std::string names;
            for (const auto& f : default_catalog())
                names += " " + f.name;
            throw UsageError(fmt::format("unknown catalog fixture '{}'; known:{}", trim(rest), names));
        }
        *catalog_name = fx->name;
        *catalog_derivation = fx->derivation;
        return fx->ring;
    }
    throw UsageError(fmt::format(
        "unknown ring kind '{}'; use zn, truncpoly, tri, matrix, product, table or catalog", kind));
}

DerivationPtr build_derivation(const RingPtr& r, std::string_view def)
{
    auto [kind, rest] = split_word(def);
    if (kind == "zero")
        return Derivation::zero(r);
    if (kind == "inner") {
        rest = trim(rest);
        if (rest.substr(0, 2) != "c=")
            throw UsageError("expected `derivation inner c=<element>`");
        return Derivation::inner(r, eval_element(r, Derivation::zero(r), rest.substr(2)));
    }
    if (kind == "table") {
        std::vector<Elem> table;
        for (auto cell : split(rest, ','))
            table.push_back(parse_int<Elem>(cell, "derivation table entry"));
        if (table.size() != r->order())
            throw UsageError(fmt::format("derivation table has {} entries, ring has order {}",
                                         table.size(), r->order()));
        for (Elem e : table)
            if (e >= r->order())
                throw UsageError(fmt::format("derivation table entry {} out of range", e));
        return Derivation::from_table(r, std::move(table));
    }
    if (kind == "gens") {
        std::map<std::string, Elem> images;
        for (auto item : split(rest, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string_view::npos)
                throw UsageError("expected `derivation gens name=<element>,...`");
            images.emplace(std::string(trim(item.substr(0, eq))),
                           eval_element(r, Derivation::zero(r), item.substr(eq + 1)));
        }
        return Derivation::from_generator_images(r, images);
    }
    if (kind == "product") {
        const auto* info = std::get_if<ProductInfo>(&r->info());
        if (!info)
            throw UsageError("`derivation product` needs a ring built with `ring product`");
        const auto groups = bracket_groups(rest);
        if (groups.size() != 2)
            throw UsageError("expected `derivation product [definition] [definition]`");
        const auto dl = build_derivation(info->left, groups[0]);
        const auto dr = build_derivation(info->right, groups[1]);
        return Derivation::product(r, *dl, *dr);
    }
    throw UsageError(
        fmt::format("unknown derivation kind '{}'; use zero, inner, table, gens or product", kind));
}

std::string cycle_text(const FiniteRing& r, const CycleWitness& w)
{
    std::string out;
    for (Elem s : w.sequence)
        out += (out.empty() ? "" : " -> ") + r.display(s);
    return out;
}

} // namespace

std::string strip_comment(std::string_view line)
{
    for (std::size_t i = 0; i < line.size(); ++i)
        if (line[i] == '#' && (i + 1 >= line.size() || !std::isdigit(static_cast<unsigned char>(line[i + 1]))))
            return std::string(line.substr(0, i));
    return std::string(line);
}

Session::Session(std::ostream& out, std::ostream& err, SessionOptions options)
    : out_(out), err_(err), opt_(options)
{
}

bool Session::execute(std::string_view line)
{
    const std::string stripped = strip_comment(line);
    const std::string_view cmd = trim(stripped);
    if (cmd.empty())
        return true;
    if (opt_.echo)
        out_ << "> " << cmd << '\n';
    const bool before = failed_;
    failed_ = false;
    try {
        command(cmd);
    } catch (const ParseError& e) {
        err_ << "error: " << e.what() << '\n';
        failed_ = true;
    } catch (const std::exception& e) {
        err_ << "error: " << e.what() << '\n';
        failed_ = true;
    }
    const bool ok = !failed_;
    failed_ = failed_ || before;
    return ok;
}

int Session::run(std::istream& in)
{
    std::string line;
    while (std::getline(in, line))
        execute(line);
    return failed_ ? 1 : 0;
}

void Session::write_reports(const std::string& path, ReportFormat format) const
{
    std::ofstream f(path);
    if (!f)
        throw UsageError(fmt::format("cannot open '{}' for writing", path));
    f << render_reports(reports_, format);
}

Series Session::evaluate(const Expr& e) const
{
    require_ring();
    return eval({ring_, derivation_, &bindings_, opt_.precision}, e);
}

Series Session::evaluate(std::string_view text) const
{
    return evaluate(*parse_expr(text));
}

void Session::require_ring() const
{
    if (!ring_)
        throw UsageError("no ring loaded; start with `ring zn 4` or `ring catalog z4`");
}

void Session::set_ring(RingPtr r, DerivationPtr d, std::string fixture_name)
{
    ring_ = std::move(r);
    derivation_ = std::move(d);
    fixture_name_ = std::move(fixture_name);
    bindings_.clear();
}

ElementSet Session::element_list(std::string_view text) const
{
    require_ring();
    ElementSet s(ring_->order());
    if (trim(text).empty())
        return s;
    for (auto item : split(text, ','))
        s.insert(eval_element(ring_, derivation_, item));
    return s;
}

void Session::command(std::string_view line)
{
    auto [word, rest] = split_word(line);
    if (word == "ring")
        cmd_ring(rest);
    else if (word == "derivation")
        cmd_derivation(rest);
    else if (word == "let")
        cmd_let(rest);
    else if (word == "eval")
        cmd_eval(rest);
    else if (word == "radical")
        cmd_radical(rest);
    else if (word == "annseries")
        cmd_annseries(rest);
    else if (word == "tnilp")
        cmd_tnilp(rest);
    else if (word == "verify")
        cmd_verify(rest);
    else if (word == "precision")
        cmd_precision(rest);
    else if (word == "report")
        cmd_report(rest);
    else if (word == "elements")
        cmd_elements();
    else if (word == "help")
        cmd_help();
    else
        throw UsageError(fmt::format("unknown command '{}'; try `help`", word));
}

void Session::cmd_ring(std::string_view rest)
{
    std::string catalog_name;
    DerivationPtr catalog_d;
    RingPtr r = build_ring(rest, opt_.max_order, &catalog_name, &catalog_d);
    DerivationPtr d = catalog_d ? catalog_d : Derivation::zero(r);
    set_ring(r, d, catalog_name.empty() ? "session" : catalog_name);
    out_ << ring_summary(*ring_) << '\n';
    if (catalog_d)
        out_ << fmt::format("derivation {} (delta-compatible: {})\n", derivation_->description(),
                            yes_no(is_delta_compatible_ring(*ring_, *derivation_)));
}

void Session::cmd_derivation(std::string_view rest)
{
    require_ring();
    DerivationPtr d = build_derivation(ring_, rest);
    const auto violations = validate_derivation(*ring_, *d, opt_.exec);
    if (!violations.empty()) {
        const Violation& v = violations.front();
        std::string w;
        for (Elem e : v.witness)
            w += fmt::format("{}{}", w.empty() ? "" : ", ", ring_->display(e));
        throw UsageError(fmt::format("not a derivation: {} fails at ({})", v.axiom, w));
    }
    derivation_ = std::move(d);
    fixture_name_ = "session";
    bindings_.clear();
    out_ << fmt::format("derivation {} (delta-compatible: {})\n", derivation_->description(),
                        yes_no(is_delta_compatible_ring(*ring_, *derivation_)));
}

void Session::cmd_let(std::string_view rest)
{
    require_ring();
    const auto eq = rest.find('=');
    if (eq == std::string_view::npos)
        throw UsageError("expected `let <name> = <expression>`");
    const std::string name(trim(rest.substr(0, eq)));
    const bool ident = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                       std::all_of(name.begin(), name.end(), [](char c) {
                           return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                       });
    if (!ident)
        throw UsageError(fmt::format("'{}' is not a valid name", name));
    if (is_reserved_name(name) || ring_->generator(name))
        throw UsageError(fmt::format("'{}' is reserved or names a ring generator", name));
    Series value = evaluate(rest.substr(eq + 1));
    out_ << name << " = " << to_string(value) << '\n';
    bindings_.insert_or_assign(name, std::move(value));
}

void Session::cmd_eval(std::string_view rest)
{
    out_ << to_string(evaluate(rest)) << '\n';
}

void Session::cmd_radical(std::string_view rest)
{
    require_ring();
    const FiniteRing& R = *ring_;
    const std::string_view which = trim(rest);
    if (which == "il") {
        out_ << R.display_set(radideal_Il(ring_, opt_.exec).members) << '\n';
    } else if (which == "ildelta") {
        const IlDeltaResult res = radideal_Il_delta(R, *derivation_, opt_.exec);
        out_ << fmt::format("{} (ideal: {}, delta-stable: {})\n", R.display_set(res.members),
                            yes_no(res.is_ideal), yes_no(res.is_delta_subset));
    } else if (which == "prime") {
        out_ << R.display_set(prime_radical(ring_, opt_.exec).members) << '\n';
    } else if (which == "chain") {
        const DerivationPtr d = derivation_->is_zero() ? nullptr : derivation_;
        const RadidealChain chain = higher_radideals(ring_, d, opt_.exec);
        for (std::size_t k = 0; k < chain.stages.size(); ++k)
            out_ << fmt::format("stage {}: {}\n", k + 1, R.display_set(chain.stages[k].members));
        out_ << fmt::format("limit: {} (stable at step {})\n", R.display_set(chain.limit.members),
                            chain.stabilization_step);
    } else {
        throw UsageError("expected `radical il|ildelta|prime|chain`");
    }
}

void Session::cmd_annseries(std::string_view rest)
{
    require_ring();
    const FiniteRing& R = *ring_;
    ElementSet members = trim(rest) == "all" ? ElementSet::full(R.order())
                                             : ideal_generated(ring_, element_list(rest)).members;
    auto [sub, new_to_old] = subring(R, members);
    const Ideal as_ideal{ring_, members, Sidedness::two_sided};
    DerivationPtr d;
    if (!derivation_->is_zero() && is_delta_ideal(R, *derivation_, as_ideal)) {
        std::vector<Elem> old_to_new(R.order(), 0);
        for (std::size_t k = 0; k < new_to_old.size(); ++k)
            old_to_new[new_to_old[k]] = static_cast<Elem>(k);
        std::vector<Elem> table;
        for (Elem old : new_to_old)
            table.push_back(old_to_new[(*derivation_)(old)]);
        d = std::make_shared<Derivation>(sub, std::move(table), "restricted");
    }
    const AnnihilatorSeries ann = upper_left_annihilator_series(*sub, d.get());
    out_ << fmt::format("N = {}\n", R.display_set(members));
    for (std::size_t k = 0; k < ann.stages.size(); ++k) {
        ElementSet ambient(R.order());
        ann.stages[k].for_each([&](Elem e) { ambient.insert(new_to_old[e]); });
        out_ << fmt::format("I^({}) = {}", k, R.display_set(ambient));
        if (d)
            out_ << fmt::format(" (delta-stable: {})", yes_no(ann.delta_stable[k]));
        out_ << '\n';
    }
    out_ << fmt::format("{} at step {}\n", ann.reached_top ? "reached N" : "stable below N",
                        ann.stabilization_step);
}

void Session::cmd_tnilp(std::string_view rest)
{
    const ElementSet s = element_list(rest);
    const TNilpVerdict v = is_left_t_nilpotent(*ring_, s);
    if (v.t_nilpotent)
        out_ << fmt::format("left T-nilpotent; bound: {}\n", v.bound);
    else
        out_ << "NOT left T-nilpotent; cycle: " << cycle_text(*ring_, *v.cycle) << '\n';
}

void Session::cmd_verify(std::string_view rest)
{
    VerifyOptions vo;
    vo.seed = opt_.seed;
    vo.precision = opt_.precision;
    vo.exec = opt_.exec;
    if (opt_.trials)
        vo.trials = *opt_.trials;
    std::string suite;
    bool current = false;
    auto [first, tail] = split_word(rest);
    suite = std::string(first);
    while (!(tail = trim(tail)).empty()) {
        auto [flag, more] = split_word(tail);
        if (flag == "--current") {
            current = true;
            tail = more;
            continue;
        }
        auto [value, after] = split_word(more);
        if (flag == "--seed")
            vo.seed = parse_int<std::uint64_t>(value, "--seed");
        else if (flag == "--trials")
            vo.trials = parse_int<std::size_t>(value, "--trials");
        else
            throw UsageError(fmt::format("unknown verify option '{}'", flag));
        tail = after;
    }
    if (suite.empty())
        throw UsageError("expected `verify <suite|all> [--seed N] [--trials N] [--current]`");

    std::vector<Fixture> catalog;
    if (current) {
        require_ring();
        catalog.push_back(make_fixture(fixture_name_, ring_, derivation_));
    } else {
        catalog = default_catalog();
    }
    if (suite == "all") {
        reports_ = run_all(catalog, vo);
    } else {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end()) {
            std::string known;
            for (const auto& n : names)
                known += " " + n;
            throw UsageError(fmt::format("unknown suite '{}'; known: all{}", suite, known));
        }
        reports_ = run_suite(suite, catalog, vo);
    }
    out_ << summary_table(reports_);
    if (failure_count(reports_) > 0)
        failed_ = true;
}

void Session::cmd_precision(std::string_view rest)
{
    const auto drop = parse_int<std::int64_t>(rest, "precision");
    if (drop < 1)
        throw UsageError("precision must be at least 1");
    opt_.precision.default_floor_drop = drop;
    out_ << fmt::format("precision {}\n", drop);
}

void Session::cmd_report(std::string_view rest)
{
    std::string path;
    ReportFormat format = opt_.format;
    std::string_view tail = rest;
    while (!(tail = trim(tail)).empty()) {
        auto [flag, more] = split_word(tail);
        auto [value, after] = split_word(more);
        if (flag == "--out")
            path = std::string(value);
        else if (flag == "--format")
            format = parse_report_format(value);
        else
            throw UsageError(fmt::format("unknown report option '{}'", flag));
        tail = after;
    }
    if (path.empty())
        throw UsageError("expected `report --out <path> [--format text|structured]`");
    if (reports_.empty())
        throw UsageError("no verification reports yet; run `verify` first");
    write_reports(path, format);
    out_ << fmt::format("wrote {} reports\n", reports_.size());
}

void Session::cmd_elements()
{
    require_ring();
    for (std::size_t k = 0; k < ring_->order(); ++k)
        out_ << fmt::format("#{} = {}\n", k, ring_->display(static_cast<Elem>(k)));
}

void Session::cmd_help()
{
    out_ << "ring zn N | truncpoly mod=M exps=e1,.. | tri mod=M | matrix mod=M | product [..] [..]\n"
            "     | table n=N add=.. mul=.. | catalog NAME\n"
            "derivation zero | inner c=EXPR | table d0,d1,.. | gens a=EXPR,.. | product [..] [..]\n"
            "let NAME = EXPR | eval EXPR | elements\n"
            "radical il|ildelta|prime|chain | annseries all|EXPR,.. | tnilp EXPR,..\n"
            "verify SUITE|all [--seed N] [--trials N] [--current]\n"
            "precision N | report --out PATH [--format text|structured]\n";
}

} // namespace psido::cli
