#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "psido/fixtures.hpp"
#include "psido/ideal.hpp"
#include "psido/kernels.hpp"
#include "psido/series.hpp"

namespace psido {

struct Failure {
    std::string input;
    std::string expected;
    std::string got;
    std::string witness;
};

enum class SuiteStatus { ran, skipped, partial };
std::string_view to_string(SuiteStatus s);

struct VerificationReport {
    std::string suite;
    std::string fixture;
    std::uint64_t seed = 0;
    std::size_t cases_run = 0;
    std::size_t passed = 0;
    std::vector<Failure> failures;
    double elapsed_ms = 0;
    SuiteStatus status = SuiteStatus::ran;
    std::string note;

    bool ok() const { return failures.empty(); }
    /// Counts one case; stores the failure record when `pass` is false.
    void record(bool pass, Failure f = {});
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    std::size_t trials = 200;
    std::size_t conjugation_trials = 50;
    std::uint64_t conjugation_max_j = 5;
    std::size_t degeneration_trials = 100;
    std::size_t witness_length = 10;
    /// Rings up to this order get every ideal enumerated; larger ones only
    /// their principal ideals.
    std::size_t ideal_enumeration_limit = 64;
    PrecisionPolicy precision;
    Exec exec = Exec::parallel;
};

/// Deterministic stream for one (seed, suite, fixture) triple.
class SuiteRng {
public:
    SuiteRng(std::uint64_t seed, std::string_view suite, std::string_view fixture);

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);
    Elem pick(const std::vector<Elem>& pool) { return pool[below(pool.size())]; }

private:
    std::mt19937_64 gen_;
};

/// Exact series with top uniform in [−3, 3], 1 to 6 consecutive degrees, and
/// coefficients drawn from `pool`.
Series random_series(SuiteRng& rng, const RingPtr& r, const DerivationPtr& d,
                     const std::vector<Elem>& pool);

/// "[(2, #5), (0, #1)]": degree and raw element index per known term, plus the
/// floor for inexact series. Enough to rebuild the series.
std::string term_list(const Series& f);

VerificationReport suite_delta_compat(const Fixture& fx, const VerifyOptions& opt);
VerificationReport suite_ideal_lifts(const Fixture& fx, const VerifyOptions& opt);
/// One ideal only.
VerificationReport suite_ideal_lifts(const Fixture& fx, const Ideal& i, const VerifyOptions& opt);
VerificationReport suite_delta_orbit(const Fixture& fx, const VerifyOptions& opt);
VerificationReport suite_series_tnilp(const Fixture& fx, const VerifyOptions& opt);
VerificationReport suite_series_tnilp(const Fixture& fx, const Ideal& i, const VerifyOptions& opt);
VerificationReport suite_main_theorem(const Fixture& fx, const VerifyOptions& opt);
VerificationReport suite_higher_prime(const Fixture& fx, const VerifyOptions& opt);
VerificationReport suite_counterexample(std::uint32_t m, std::uint32_t n, std::uint32_t k_max,
                                        const VerifyOptions& opt);

VerificationReport suite_relations(const Fixture& fx, const VerifyOptions& opt);
VerificationReport suite_series_axioms(const Fixture& fx, const VerifyOptions& opt);
VerificationReport suite_conjugation(const Fixture& fx, const VerifyOptions& opt);
VerificationReport suite_levitzki(const Fixture& fx, const VerifyOptions& opt);
VerificationReport suite_radical_collapse(const Fixture& fx, const VerifyOptions& opt);
VerificationReport suite_degeneration(const Fixture& fx, const VerifyOptions& opt);

/// Suite names accepted by run_suite, in run order.
const std::vector<std::string>& suite_names();

/// One suite over every fixture of the catalog (the counterexample suite
/// ignores the catalog and runs its three default sizes).
std::vector<VerificationReport> run_suite(std::string_view suite, const std::vector<Fixture>& catalog,
                                          const VerifyOptions& opt);

std::vector<VerificationReport> run_all(const std::vector<Fixture>& catalog, const VerifyOptions& opt);

} // namespace psido
