#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <regex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "psido/cli/session.hpp"

namespace golden {

namespace fs = std::filesystem;

/// Runs a script with echo on; errors are interleaved with normal output.
inline std::string transcript(const fs::path& script, int* exit_code = nullptr)
{
    std::ifstream in(script);
    std::ostringstream out;
    psido::cli::SessionOptions opt;
    opt.echo = true;
    psido::cli::Session session(out, out, opt);
    const int code = session.run(in);
    out << "[exit " << code << "]\n";
    if (exit_code)
        *exit_code = code;
    return out.str();
}

/// Blanks timing values so transcripts compare across machines.
inline std::string mask_timing(const std::string& s)
{
    static const std::regex timing(R"((\"?elapsed_ms\"?\s*[:=]\s*)[0-9.eE+-]+)");
    return std::regex_replace(s, timing, "$1<t>");
}

inline std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline std::vector<fs::path> scripts(const fs::path& dir)
{
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".psd")
            out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

struct Mismatch {
    fs::path script;
    std::size_t line; // first differing line, 1-based
    std::string expected;
    std::string got;
};

inline std::optional<Mismatch> compare(const fs::path& script)
{
    fs::path expected_path = script;
    expected_path.replace_extension(".out");
    const std::string want = mask_timing(slurp(expected_path));
    const std::string got = mask_timing(transcript(script));
    if (want == got)
        return std::nullopt;
    std::istringstream a(want), b(got);
    std::string la, lb;
    std::size_t line = 1;
    while (true) {
        const bool ha = static_cast<bool>(std::getline(a, la));
        const bool hb = static_cast<bool>(std::getline(b, lb));
        if (!ha && !hb)
            break;
        if (!ha)
            la = "<eof>";
        if (!hb)
            lb = "<eof>";
        if (la != lb || !ha || !hb)
            return Mismatch{script, line, la, lb};
        ++line;
    }
    return Mismatch{script, line, "<trailing bytes>", "<trailing bytes>"};
}

} // namespace golden
