#include <doctest.h>

#include <random>

#include "psido/kernels.hpp"

using namespace psido;
using namespace psido::kernels;

TEST_CASE("serial and OpenMP sweeps agree")
{
    std::mt19937_64 gen(12345);
    for (int round = 0; round < 20; ++round) {
        const std::size_t n = 1 + gen() % 60;
        std::vector<std::uint64_t> salt(n * n * n);
        for (auto& s : salt)
            s = gen() % 997;
        const std::uint64_t cut = gen() % 997;

        auto pred = [&](Elem i) { return salt[i] < cut; };
        CHECK(serial::membership_sweep(n, pred) == omp::membership_sweep(n, pred));

        auto triple = [&](Elem a, Elem b, Elem c) { return salt[(a * n + b) * n + c] != cut % 50; };
        CHECK(serial::first_failing_triple(n, triple) == omp::first_failing_triple(n, triple));

        auto pair = [&](Elem a, Elem b) { return salt[a * n + b] > cut / 20; };
        CHECK(serial::first_failing_pair(n, pair) == omp::first_failing_pair(n, pair));

        auto job = [&](std::size_t i) { return salt[i] * 3 + i; };
        CHECK(serial::map_indexed<std::uint64_t>(n, job) == omp::map_indexed<std::uint64_t>(n, job));
    }
}

TEST_CASE("first failure is the lexicographically least")
{
    auto holds = [](Elem a, Elem b, Elem c) { return !((a == 3 && b == 1 && c == 2) || (a == 5 && b == 0 && c == 0)); };
    const auto s = serial::first_failing_triple(8, holds);
    REQUIRE(s);
    CHECK(*s == Triple{3, 1, 2});
    CHECK(omp::first_failing_triple(8, holds) == s);
    CHECK_FALSE(first_failing_pair(8, [](Elem, Elem) { return true; }, Exec::parallel).has_value());
}
