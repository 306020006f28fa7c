#include <doctest.h>

#include <sstream>

#include "psido/cli/parser.hpp"
#include "psido/cli/session.hpp"

using namespace psido;
using namespace psido::cli;

namespace {

struct Run {
    std::string out;
    std::string err;
    int code;
};

Run run(const std::string& script, SessionOptions opt = {})
{
    std::ostringstream out, err;
    std::istringstream in(script);
    Session s(out, err, opt);
    const int code = s.run(in);
    return {out.str(), err.str(), code};
}

} // namespace

TEST_CASE("grammar")
{
    CHECK(describe(*parse_expr("a*x^2 + x^-1")) == "Sum(Prod(a, x^2), x^-1)");
    CHECK(describe(*parse_expr("D^2(a*x)")) == "Delta(2, Prod(a, x))");
    CHECK(describe(*parse_expr("x^(-3)")) == "x^-3");
    CHECK(describe(*parse_expr("  -a * b - c ")) == "Diff(Prod(Neg(a), b), c)");
    CHECK(describe(*parse_expr("-x^2")) == "Neg(x^2)");
    CHECK(describe(*parse_expr("(a+1)^3*#2")) == "Prod(Pow(Group(Sum(a, 1)), 3), #2)");
    CHECK(describe(*parse_expr("O(x^-4)")) == "O(x^-4)");
    CHECK(describe(*parse_expr("D(a)")) == "Delta(1, a)");
}

TEST_CASE("parse errors carry positions")
{
    auto position_of = [](const char* s) -> std::size_t {
        try {
            parse_expr(s);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string::npos;
    };
    try {
        parse_expr("a*x^2 +");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("parse error at end of input") == 0);
        CHECK(e.position() == 7);
    }
    CHECK(position_of("a $ b") == 2);
    CHECK(position_of("(a + b") == 6);
    CHECK(position_of("a + b)") == 5);
    CHECK(position_of("x^99999999999999999999") == 2);
    CHECK(position_of("a^-2") == 1);
    CHECK(position_of("a b") == 2);
    CHECK(position_of("") == 0);
}

TEST_CASE("comment stripping keeps element indices")
{
    CHECK(strip_comment("eval #3 + a # note") == "eval #3 + a ");
    CHECK(strip_comment("# whole line") == "");
    CHECK(strip_comment("tnilp #1") == "tnilp #1");
}

TEST_CASE("documented session examples")
{
    const Run r = run("ring catalog dual-d\neval x*a\neval x^-1 * x\neval x^-1 * a\n"
                      "ring zn 4\nradical prime\ntnilp 1\n");
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out == "ring Z/2[a]/(a^2): order 4, unital, commutative\n"
                   "derivation gens a=1 (delta-compatible: no)\n"
                   "a*x + 1\n"
                   "1\n"
                   "a*x^-1 + x^-2\n"
                   "ring Z/4: order 4, unital, commutative\n"
                   "{0, 2}\n"
                   "NOT left T-nilpotent; cycle: 1 -> 1\n");
}

TEST_CASE("errors set a nonzero exit code")
{
    CHECK(run("radical prime\n").code != 0);
    CHECK(run("radical prime\n").err.find("no ring loaded") != std::string::npos);
    CHECK(run("ring zn 4\neval b\n").err.find("unknown identifier 'b'") != std::string::npos);
    CHECK(run("ring zn 4\nlet x = 1\n").code != 0);
    CHECK(run("ring catalog dual-d\nlet a = 1\n").code != 0);
    CHECK(run("ring zn 4\nfrobnicate\n").code != 0);
    CHECK(run("ring zn 5000\n").code != 0);
    CHECK(run("ring truncpoly mod=2 exps=3\nderivation gens a=1\n").err.find("not a derivation") !=
          std::string::npos);
    CHECK(run("ring zn 4\nprecision 0\n").code != 0);
    CHECK(run("ring zn 4\nreport --out /tmp/x.json\n").code != 0);
    // Later successes do not clear an earlier failure.
    CHECK(run("eval 1\nring zn 4\neval 1\n").code != 0);
}

TEST_CASE("bindings are cleared when the ring changes")
{
    const Run r = run("ring zn 4\nlet f = 2*x + 1\neval f*f\nring zn 3\neval f\n");
    CHECK(r.out.find("f = 2*x + 1\n") != std::string::npos);
    CHECK(r.out.find("1\n") != std::string::npos);
    CHECK(r.err.find("unknown identifier 'f'") != std::string::npos);
}

TEST_CASE("non-unital sessions reject integer literals")
{
    const Run r = run("ring table n=2 add=0,1;1,0 mul=0,0;0,0\neval #1\neval 1\n");
    CHECK(r.out.find("#1\n") != std::string::npos);
    CHECK(r.err.find("identity") != std::string::npos);
}

TEST_CASE("ring and derivation definitions")
{
    const Run r = run("ring product [zn 2] [truncpoly mod=2 exps=2]\n"
                      "derivation product [zero] [gens a=1]\n"
                      "ring truncpoly mod=2 exps=2,3\n"
                      "ring tri mod=2\n"
                      "derivation inner c=e12\n"
                      "derivation table 0,2,0,2,2,0,2,0\n"
                      "ring matrix mod=2\n");
    CHECK(r.err.empty());
    CHECK(r.code == 0);
    CHECK(r.out.find("ring Z/2[a1,a2]/(a1^2,a2^3): order 64") != std::string::npos);
    CHECK(r.out.find("ring M2(Z/2): order 16, unital, noncommutative") != std::string::npos);
}

TEST_CASE("verify on the session fixture")
{
    SessionOptions opt;
    opt.trials = 10;
    const Run r = run("ring catalog z4\nverify relations --current\nverify levitzki --current --seed 3\n", opt);
    CHECK(r.code == 0);
    CHECK(r.out.find("relations         z4") != std::string::npos);
    CHECK(r.out.find("failures: 0") != std::string::npos);
    CHECK(run("verify nothing\n").code != 0);
}

TEST_CASE("print, reparse and re-evaluate round trip")
{
    struct Case {
        const char* fixture;
        const char* expr;
    };
    const Case corpus[] = {
        {"dual-d", "x*a"},
        {"dual-d", "x^-1*a"},
        {"dual-d", "a*x^2 + (1+a)*x^0 + a*x^-3"},
        {"dual-d", "(x + a)^3"},
        {"dual-d", "x^-2*a*x^3"},
        {"dual-d", "D(a*x^4 + x)"},
        {"dual-d", "(a*x^-1 + 1)*(x + a)"},
        {"dual-d", "x^5*a - a*x^5"},
        {"dual-d", "O(x^-2) + a*x"},
        {"dual-d", "(1 + a*x^-1)^4"},
        {"dual-euler", "x^-1*a"},
        {"dual-euler", "x^-3*(1+a)"},
        {"dual-euler", "(a*x^-1)^2"},
        {"dual-euler", "x*a*x^-1"},
        {"dual-euler", "D^3(a*x^-2 + x)"},
        {"dual-euler", "(x^-1 + a)^3"},
        {"dual-euler", "x^-2*a + O(x^-6)"},
        {"dual-euler", "-x^-1*a*x"},
        {"dual-euler", "a*x^2*a"},
        {"dual-euler", "x^-1*a - a*x^-1"},
        {"z4", "2*x + 3"},
        {"z4", "(2*x + 1)^2"},
        {"z4", "x^-4*3*x^2"},
        {"z4", "-(x^-1 + 2)"},
        {"z4", "#3*x^-2 + #2*x^7"},
        {"z8", "(x + 7)^5"},
        {"z8", "6*x^-1*(4 + x)"},
        {"z3", "(x^-1 + 2)^4"},
        {"trunc23", "a1*x^2*a2"},
        {"trunc23", "(a1 + a2)^3*x^-1"},
        {"trunc23", "(1 + a2)*x^-3 + a1*a2^2"},
        {"trunc23", "(x + a1)*(x + a2)"},
        {"cube-euler", "x^-1*a"},
        {"cube-euler", "(a*x^-1 + a^2)^2"},
        {"cube-euler", "x^-1*a^2*x^-1"},
        {"cube-euler", "(a*x^-1)^3"},
        {"cube-euler", "x^2*(1 + a)"},
        {"cube-euler", "D^2(a^2*x^-3 + a)"},
        {"tri-inner", "x*e11"},
        {"tri-inner", "x^-1*e11"},
        {"tri-inner", "x^-1*e22*x"},
        {"tri-inner", "(e12*x + e11)^2"},
        {"tri-inner", "e11*x^-2*e12"},
        {"tri-inner", "(x^-1*e11)^2"},
        {"m2-inner", "x*e21"},
        {"m2-inner", "x^-1*e21"},
        {"m2-inner", "(e12 + e21)*x^-1*e11"},
        {"tri-zero", "(e11*x + e12)^3"},
        {"z2xz2", "x^-1*#1*x^2 + #3"},
        {"z2xz2", "(#1*x + #2)^2"},
    };
    CHECK(std::size(corpus) == 50);
    for (const auto& c : corpus) {
        CAPTURE(c.fixture);
        CAPTURE(c.expr);
        std::ostringstream out, err;
        Session s(out, err);
        REQUIRE(s.execute(std::string("ring catalog ") + c.fixture));
        const Series f = s.evaluate(c.expr);
        const std::string printed = to_string(f);
        CAPTURE(printed);
        const Series g = s.evaluate(printed);
        CHECK(f.exact() == g.exact());
        const std::int64_t fl = common_floor(f, g);
        CHECK(fl == f.floor());
        CHECK(equal_to_floor(f, g, fl));
        CHECK(to_string(g) == printed);
    }
}
