// Compares CLI transcripts against tests/golden/*.out; --update rewrites them.
#include <algorithm>
#include <iostream>
#include <optional>

#include "golden.hpp"

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: golden_runner <dir> [--update]\n";
        return 2;
    }
    const golden::fs::path dir = argv[1];
    const bool update = argc > 2 && std::string(argv[2]) == "--update";
    const auto scripts = golden::scripts(dir);
    if (scripts.empty()) {
        std::cerr << "no scripts in " << dir << '\n';
        return 1;
    }
    int bad = 0;
    for (const auto& s : scripts) {
        if (update) {
            golden::fs::path out = s;
            out.replace_extension(".out");
            std::ofstream(out, std::ios::binary) << golden::transcript(s);
            std::cout << "wrote " << out.filename().string() << '\n';
            continue;
        }
        if (const auto m = golden::compare(s)) {
            ++bad;
            std::cout << "FAIL " << s.filename().string() << " line " << m->line << "\n  expected: " << m->expected
                      << "\n  got:      " << m->got << '\n';
        } else {
            std::cout << "ok   " << s.filename().string() << '\n';
        }
    }
    return bad == 0 ? 0 : 1;
}
