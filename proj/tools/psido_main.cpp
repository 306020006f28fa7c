#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "psido/cli/session.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"psido: pseudo-differential series over finite rings"};
    std::string script;
    std::string positional;
    std::string out_path;
    std::string format = "text";
    psido::cli::SessionOptions opt;
    std::int64_t precision = opt.precision.default_floor_drop;

    app.add_option("--script", script, "Command file (default: standard input)");
    app.add_option("script_file", positional, "Command file");
    app.add_option("--seed", opt.seed, "Verification seed");
    app.add_option("--precision", precision, "Floor drop for infinite products")->check(CLI::PositiveNumber);
    app.add_option("--out", out_path, "Write the last verification reports here");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--max-order", opt.max_order, "Largest ring order accepted")->check(CLI::PositiveNumber);
    app.add_flag("--echo", opt.echo, "Echo each command before its output");
    CLI11_PARSE(app, argc, argv);

    if (!script.empty() && !positional.empty()) {
        std::cerr << "error: give the script either with --script or positionally, not both\n";
        return 2;
    }
    if (script.empty())
        script = positional;
    opt.precision.default_floor_drop = precision;
    opt.format = psido::parse_report_format(format);

    psido::cli::Session session(std::cout, std::cerr, opt);
    int code = 0;
    if (script.empty()) {
        code = session.run(std::cin);
    } else {
        std::ifstream in(script);
        if (!in) {
            std::cerr << "error: cannot open script '" << script << "'\n";
            return 2;
        }
        code = session.run(in);
    }
    if (!out_path.empty()) {
        try {
            session.write_reports(out_path, opt.format);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 1;
        }
    }
    return code;
}
