#include "psido/verify.hpp"

#include <fmt/format.h>

#include <chrono>
#include <map>

#include "psido/binomial.hpp"
#include "psido/constructors.hpp"
#include "psido/radicals.hpp"
#include "psido/truncated_algebra.hpp"

namespace psido {

std::string_view to_string(SuiteStatus s)
{
    switch (s) {
    case SuiteStatus::ran:
        return "ran";
    case SuiteStatus::skipped:
        return "skipped";
    case SuiteStatus::partial:
        return "partial";
    }
    return "?";
}

void VerificationReport::record(bool pass, Failure f)
{
    ++cases_run;
    if (pass)
        ++passed;
    else
        failures.push_back(std::move(f));
}

SuiteRng::SuiteRng(std::uint64_t seed, std::string_view suite, std::string_view fixture)
{
    // FNV-1a over the seed bytes, the suite name and the fixture name.
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&](unsigned char c) {
        h ^= c;
        h *= 0x100000001b3ull;
    };
    for (int k = 0; k < 8; ++k)
        mix(static_cast<unsigned char>(seed >> (8 * k)));
    for (char c : suite)
        mix(static_cast<unsigned char>(c));
    mix(0);
    for (char c : fixture)
        mix(static_cast<unsigned char>(c));
    gen_.seed(h);
}

std::uint64_t SuiteRng::below(std::uint64_t n)
{
    // Rejection sampling keeps the draw identical across standard libraries.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do
        x = gen_();
    while (x >= limit);
    return x % n;
}

std::int64_t SuiteRng::between(std::int64_t lo, std::int64_t hi)
{
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Series random_series(SuiteRng& rng, const RingPtr& r, const DerivationPtr& d,
                     const std::vector<Elem>& pool)
{
    const std::int64_t top = rng.between(-3, 3);
    const std::int64_t width = rng.between(1, 6);
    std::vector<Series::Term> terms;
    for (std::int64_t k = 0; k < width; ++k)
        terms.emplace_back(top - k, rng.pick(pool));
    return from_terms(r, d, terms);
}

std::string term_list(const Series& f)
{
    std::string out = "[";
    bool first = true;
    for (const auto& [deg, c] : f.terms()) {
        out += fmt::format("{}({}, #{})", first ? "" : ", ", deg, c);
        first = false;
    }
    out += "]";
    if (!f.exact())
        out += fmt::format(" floor {}", f.floor());
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

VerificationReport start(std::string suite, std::string fixture, const VerifyOptions& opt)
{
    VerificationReport rep;
    rep.suite = std::move(suite);
    rep.fixture = std::move(fixture);
    rep.seed = opt.seed;
    return rep;
}

std::string label(const Fixture& fx)
{
    return fmt::format("{} ({})", fx.name, fx.descriptor());
}

template <typename Body>
VerificationReport timed(VerificationReport rep, Body&& body)
{
    const auto t0 = Clock::now();
    try {
        body(rep);
    } catch (const std::exception& e) {
        rep.record(false, {"suite body", "no exception", "exception", e.what()});
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return rep;
}

void skip(VerificationReport& rep, std::string why)
{
    rep.status = SuiteStatus::skipped;
    rep.note = std::move(why);
}

std::vector<Elem> all_elements(const FiniteRing& r)
{
    std::vector<Elem> v(r.order());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = static_cast<Elem>(k);
    return v;
}

// Every known coefficient lies in `s` and the unknown tail subgroup does too.
bool coefficients_in(const Series& f, const ElementSet& s)
{
    for (Elem c : f.coeffs())
        if (!s.contains(c))
            return false;
    return f.unknown().subset_of(s);
}

std::string elem(const FiniteRing& r, Elem e)
{
    return fmt::format("{} (#{})", r.display(e), e);
}

std::vector<Ideal> ideals_to_scan(const Fixture& fx, const VerifyOptions& opt)
{
    return fx.ring->order() <= opt.ideal_enumeration_limit ? enumerate_ideals(fx.ring)
                                                            : principal_ideals(fx.ring);
}

std::optional<std::pair<Elem, Elem>> compatibility_witness(const FiniteRing& r, const Derivation& d)
{
    for (std::size_t a = 0; a < r.order(); ++a)
        for (std::size_t b = 0; b < r.order(); ++b) {
            const auto ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
            if (r.mul(ea, eb) == r.zero() && r.mul(ea, d(eb)) != r.zero())
                return std::pair{ea, eb};
        }
    return std::nullopt;
}

bool skip_unless_compatible(VerificationReport& rep, const Fixture& fx)
{
    if (fx.meta.delta_compatible)
        return false;
    const auto w = compatibility_witness(*fx.ring, *fx.derivation);
    const FiniteRing& R = *fx.ring;
    skip(rep, fmt::format("not delta-compatible: {} * {} = 0 but {} * d({}) != 0",
                          R.display(w->first), R.display(w->second), R.display(w->first),
                          R.display(w->second)));
    return true;
}

// Restriction of d to a δ-stable subset relabelled by `subring`.
DerivationPtr restrict_derivation(const RingPtr& sub, const std::vector<Elem>& new_to_old,
                                  const Derivation& d, std::size_t ambient_order)
{
    std::vector<Elem> old_to_new(ambient_order, 0);
    for (std::size_t k = 0; k < new_to_old.size(); ++k)
        old_to_new[new_to_old[k]] = static_cast<Elem>(k);
    std::vector<Elem> table(new_to_old.size());
    for (std::size_t k = 0; k < new_to_old.size(); ++k)
        table[k] = old_to_new[d(new_to_old[k])];
    return std::make_shared<Derivation>(sub, std::move(table), d.description() + " (restricted)");
}

ElementSet map_set(const ElementSet& s, const std::vector<Elem>& new_to_old, std::size_t universe)
{
    ElementSet out(universe);
    s.for_each([&](Elem e) { out.insert(new_to_old[e]); });
    return out;
}

bool needs_unital(VerificationReport& rep, const Fixture& fx)
{
    if (fx.ring->unital())
        return false;
    skip(rep, "ring has no identity, so x is not an element of the series ring");
    return true;
}

// f·g_1·f·g_2 ⋯ f·g_k with fresh random g_t; `trace` collects the inputs.
Series interleaved_product(SuiteRng& rng, const Fixture& fx, const Series& f, std::size_t k,
                           const std::vector<Elem>& ring_pool, const PrecisionPolicy& policy,
                           std::string& trace)
{
    Series acc = f;
    trace = "f=" + term_list(f);
    for (std::size_t t = 0; t < k; ++t) {
        if (t > 0)
            acc = mul(acc, f, policy);
        const Series g = random_series(rng, fx.ring, fx.derivation, ring_pool);
        trace += fmt::format("; g{}={}", t + 1, term_list(g));
        acc = mul(acc, g, policy);
    }
    return acc;
}

} // namespace

// ---------------------------------------------------------------------------

VerificationReport suite_delta_compat(const Fixture& fx, const VerifyOptions& opt)
{
    return timed(start("delta_compat", label(fx), opt), [&](VerificationReport& rep) {
        if (skip_unless_compatible(rep, fx))
            return;
        const FiniteRing& R = *fx.ring;
        const Derivation& D = *fx.derivation;
        const Elem z = R.zero();
        for (std::size_t a = 0; a < R.order(); ++a)
            for (std::size_t b = 0; b < R.order(); ++b) {
                const auto ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
                if (R.mul(ea, eb) != z)
                    continue;
                std::string bad;
                const auto orbit_b = D.orbit(eb);
                for (std::size_t n = 0; n < orbit_b.size() && bad.empty(); ++n)
                    if (R.mul(ea, orbit_b[n]) != z)
                        bad = fmt::format("a*d^{}(b) = {}", n, R.display(R.mul(ea, orbit_b[n])));
                const auto orbit_a = D.orbit(ea);
                for (std::size_t m = 0; m < orbit_a.size() && bad.empty(); ++m)
                    if (R.mul(orbit_a[m], eb) != z)
                        bad = fmt::format("d^{}(a)*b = {}", m, R.display(R.mul(orbit_a[m], eb)));
                rep.record(bad.empty(), {fmt::format("a={}, b={}", elem(R, ea), elem(R, eb)), "0",
                                         bad, fmt::format("a=#{} b=#{}", a, b)});
            }
    });
}

VerificationReport suite_ideal_lifts(const Fixture& fx, const Ideal& i, const VerifyOptions& opt)
{
    const FiniteRing& R = *fx.ring;
    const std::string iname = R.display_set(i.members);
    return timed(start("ideal_lifts", label(fx), opt), [&](VerificationReport& rep) {
        if (needs_unital(rep, fx))
            return;
        SuiteRng rng(opt.seed, "ideal_lifts/" + iname, fx.name);
        const auto ipool = i.members.members();
        const auto rpool = all_elements(R);
        const bool delta_ideal = is_delta_ideal(R, *fx.derivation, i);

        // (1) I((x⁻¹;δ)) absorbs right multiplication.
        for (std::size_t t = 0; t < opt.trials; ++t) {
            const Series f = random_series(rng, fx.ring, fx.derivation, ipool);
            const Series g = random_series(rng, fx.ring, fx.derivation, rpool);
            const Series fg = mul(f, g, opt.precision);
            rep.record(coefficients_in(fg, i.members),
                       {fmt::format("I={}, f*g", iname), "coefficients in I", to_string(fg),
                        fmt::format("f={} g={}", term_list(f), term_list(g))});
        }

        // (2) x·a ∈ I((x⁻¹;δ)) for every a ∈ I exactly when I is a δ-ideal.
        const Series x = x_power(fx.ring, fx.derivation, 1);
        std::optional<Elem> escape;
        for (Elem a : ipool) {
            const Series xa = mul(x, embed_scalar(fx.ring, fx.derivation, a), opt.precision);
            if (!coefficients_in(xa, i.members)) {
                escape = a;
                break;
            }
        }
        rep.record(delta_ideal == !escape.has_value(),
                   {fmt::format("I={}, x*a for a in I", iname),
                    delta_ideal ? "all in I((x^-1;d))" : "some x*a outside I((x^-1;d))",
                    escape ? fmt::format("x*{} leaves I", R.display(*escape)) : "all inside",
                    escape ? fmt::format("a=#{}", *escape) : ""});
        if (delta_ideal)
            for (std::size_t t = 0; t < opt.trials; ++t) {
                const Series g = random_series(rng, fx.ring, fx.derivation, rpool);
                const Series f = random_series(rng, fx.ring, fx.derivation, ipool);
                const Series gf = mul(g, f, opt.precision);
                rep.record(coefficients_in(gf, i.members),
                           {fmt::format("I={}, g*f", iname), "coefficients in I", to_string(gf),
                            fmt::format("g={} f={}", term_list(g), term_list(f))});
            }

        // (3) Products of k I-series vanish when I is a nilpotent δ-ideal of index k.
        const auto k = nilpotency_index(R, i.members);
        if (delta_ideal && k) {
            for (std::size_t t = 0; t < opt.trials; ++t) {
                Series acc = random_series(rng, fx.ring, fx.derivation, ipool);
                std::string trace = term_list(acc);
                for (std::size_t m = 1; m < *k; ++m) {
                    const Series f = random_series(rng, fx.ring, fx.derivation, ipool);
                    trace += " * " + term_list(f);
                    acc = mul(acc, f, opt.precision);
                }
                rep.record(acc.is_zero(), {fmt::format("I={}, product of {} I-series", iname, *k),
                                           "0 (exact)", to_string(acc), trace});
            }
        }
    });
}

VerificationReport suite_ideal_lifts(const Fixture& fx, const VerifyOptions& opt)
{
    VerificationReport total = start("ideal_lifts", label(fx), opt);
    const auto t0 = Clock::now();
    for (const Ideal& i : ideals_to_scan(fx, opt)) {
        VerificationReport part = suite_ideal_lifts(fx, i, opt);
        if (part.status == SuiteStatus::skipped) {
            total.status = part.status;
            total.note = part.note;
            break;
        }
        total.cases_run += part.cases_run;
        total.passed += part.passed;
        for (auto& f : part.failures)
            total.failures.push_back(std::move(f));
    }
    total.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return total;
}

VerificationReport suite_delta_orbit(const Fixture& fx, const VerifyOptions& opt)
{
    return timed(start("delta_orbit", label(fx), opt), [&](VerificationReport& rep) {
        if (skip_unless_compatible(rep, fx))
            return;
        const FiniteRing& R = *fx.ring;
        const Derivation& D = *fx.derivation;
        auto right_ideal = [&](Elem a) {
            ElementSet s(R.order());
            for (std::size_t x = 0; x < R.order(); ++x)
                s.insert(R.mul(a, static_cast<Elem>(x)));
            if (!R.unital())
                s.insert(a);
            return s;
        };
        for (std::size_t a = 0; a < R.order(); ++a) {
            const auto ea = static_cast<Elem>(a);
            if (!is_left_t_nilpotent(R, right_ideal(ea)).t_nilpotent)
                continue;
            const std::size_t len = D.orbit(ea).size();
            Elem b = ea;
            for (std::size_t i = 1; i <= len; ++i) {
                b = D(b);
                const TNilpVerdict v = is_left_t_nilpotent(R, right_ideal(b));
                std::string w;
                if (v.cycle)
                    for (Elem s : v.cycle->sequence)
                        w += fmt::format("#{} ", s);
                rep.record(v.t_nilpotent,
                           {fmt::format("a={}, i={}", elem(R, ea), i), "d^i(a)R left T-nilpotent",
                            "cycle found", w});
            }
        }
    });
}

VerificationReport suite_series_tnilp(const Fixture& fx, const Ideal& i, const VerifyOptions& opt)
{
    const FiniteRing& R = *fx.ring;
    const std::string iname = R.display_set(i.members);
    return timed(start("series_tnilp", label(fx), opt), [&](VerificationReport& rep) {
        if (!is_delta_ideal(R, *fx.derivation, i)) {
            skip(rep, fmt::format("{} is not a delta-ideal", iname));
            return;
        }
        if (!is_left_t_nilpotent(R, i.members).t_nilpotent) {
            skip(rep, fmt::format("{} is not left T-nilpotent", iname));
            return;
        }
        const auto k = nilpotency_index(R, i.members);
        SuiteRng rng(opt.seed, "series_tnilp/" + iname, fx.name);
        const auto ipool = i.members.members();
        rep.record(k.has_value(), {fmt::format("I={}", iname), "nilpotent", "not nilpotent", ""});
        if (!k)
            return;
        for (std::size_t t = 0; t < opt.trials; ++t) {
            Series acc = random_series(rng, fx.ring, fx.derivation, ipool);
            std::string trace = term_list(acc);
            std::size_t factors = 1;
            while (!acc.is_zero() && factors < *k) {
                const Series f = random_series(rng, fx.ring, fx.derivation, ipool);
                trace += " * " + term_list(f);
                acc = mul(acc, f, opt.precision);
                ++factors;
            }
            rep.record(acc.is_zero(), {fmt::format("I={}, left-to-right product", iname),
                                       fmt::format("0 within {} factors", *k), to_string(acc), trace});
        }

        // Stage containment: I^(α+1)-series times I-series lands in I^(α).
        auto [sub, new_to_old] = subring(*fx.ring, i.members);
        const auto restricted = restrict_derivation(sub, new_to_old, *fx.derivation, R.order());
        const AnnihilatorSeries ann = upper_left_annihilator_series(*sub, restricted.get());
        for (std::size_t alpha = 0; alpha + 1 < ann.stages.size(); ++alpha) {
            const ElementSet lower = map_set(ann.stages[alpha], new_to_old, R.order());
            const ElementSet upper = map_set(ann.stages[alpha + 1], new_to_old, R.order());
            const auto upool = upper.members();
            for (std::size_t t = 0; t < opt.trials; ++t) {
                const Series f = random_series(rng, fx.ring, fx.derivation, upool);
                const Series g = random_series(rng, fx.ring, fx.derivation, ipool);
                const Series fg = mul(f, g, opt.precision);
                rep.record(coefficients_in(fg, lower),
                           {fmt::format("I={}, stage {}", iname, alpha + 1),
                            fmt::format("coefficients in {}", R.display_set(lower)), to_string(fg),
                            fmt::format("f={} g={}", term_list(f), term_list(g))});
            }
        }
    });
}

VerificationReport suite_series_tnilp(const Fixture& fx, const VerifyOptions& opt)
{
    VerificationReport total = start("series_tnilp", label(fx), opt);
    const auto t0 = Clock::now();
    std::size_t used = 0;
    for (const Ideal& i : ideals_to_scan(fx, opt)) {
        VerificationReport part = suite_series_tnilp(fx, i, opt);
        if (part.status == SuiteStatus::skipped)
            continue;
        ++used;
        total.cases_run += part.cases_run;
        total.passed += part.passed;
        for (auto& f : part.failures)
            total.failures.push_back(std::move(f));
    }
    total.note = fmt::format("{} left T-nilpotent delta-ideals", used);
    total.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return total;
}

VerificationReport suite_main_theorem(const Fixture& fx, const VerifyOptions& opt)
{
    return timed(start("main_theorem", label(fx), opt), [&](VerificationReport& rep) {
        if (needs_unital(rep, fx))
            return;
        const FiniteRing& R = *fx.ring;
        const Derivation& D = *fx.derivation;
        SuiteRng rng(opt.seed, "main_theorem", fx.name);
        const IlDeltaResult il = radideal_Il_delta(R, D, opt.exec);
        const Ideal p = prime_radical(fx.ring, opt.exec);
        const auto k = nilpotency_index(R, p.members);
        const auto rpool = all_elements(R);
        const auto ipool = il.members.members();
        rep.note = fmt::format("I_l,d = {}; P = {}; index {}", R.display_set(il.members),
                               R.display_set(p.members), k ? std::to_string(*k) : "none");
        rep.record(k.has_value(), {"prime radical", "nilpotent", "not nilpotent", ""});
        if (!k)
            return;

        // ⊇: interleaved products with k copies of f vanish.
        for (std::size_t t = 0; t < opt.trials; ++t) {
            const Series f = random_series(rng, fx.ring, fx.derivation, ipool);
            std::string trace;
            const Series prod = interleaved_product(rng, fx, f, *k, rpool, opt.precision, trace);
            rep.record(prod.is_zero(), {fmt::format("f*g1*...*f*g{}", *k), "0 (exact)",
                                        to_string(prod), trace});
        }

        // ⊆: the cycle witness of each a outside I_l,d lifts to products of
        // δ^j(f)·r with leading coefficient s_1⋯s_t.
        for (std::size_t a = 0; a < R.order(); ++a) {
            const auto ea = static_cast<Elem>(a);
            if (il.members.contains(ea))
                continue;
            const IlDeltaProbe probe = probe_il_delta(R, D, ea);
            const CycleWitness& cyc = *probe.verdict.cycle;
            std::vector<Elem> seq;
            for (std::size_t t = 0; t < opt.witness_length; ++t) {
                const std::size_t r = cyc.sequence.size();
                const std::size_t period = r - 1 - cyc.repeat_from;
                const std::size_t idx = t < r ? t : cyc.repeat_from + 1 + (t - r) % period;
                seq.push_back(cyc.sequence[idx]);
            }
            for (std::int64_t n : {1, -1}) {
                const Series f = from_terms(fx.ring, fx.derivation, {{n, ea}});
                Series acc = from_terms(fx.ring, fx.derivation, {{0, *R.one()}});
                Elem expect = *R.one();
                std::string bad;
                for (std::size_t t = 0; t < seq.size() && bad.empty(); ++t) {
                    const Origin o = *probe.origin[seq[t]];
                    acc = mul(acc, delta_series(f, o.j), opt.precision);
                    if (o.right)
                        acc = mul(acc, embed_scalar(fx.ring, fx.derivation, *o.right), opt.precision);
                    expect = R.mul(expect, seq[t]);
                    const std::int64_t deg = static_cast<std::int64_t>(t + 1) * n;
                    const auto lead = acc.leading();
                    if (expect == R.zero() || !lead || lead->first != deg || lead->second != expect)
                        bad = fmt::format("length {}: leading {} at degree {}, expected {} at {}", t + 1,
                                          lead ? R.display(lead->second) : "none",
                                          lead ? lead->first : 0, R.display(expect), deg);
                }
                std::string w;
                for (Elem s : seq) {
                    const Origin o = *probe.origin[s];
                    w += fmt::format("(j={}, r={}) ", o.j, o.right ? fmt::format("#{}", *o.right) : "-");
                }
                rep.record(bad.empty(), {fmt::format("a={}, f=a*x^{}", elem(R, ea), n),
                                         fmt::format("nonzero leading coefficients up to length {}",
                                                     opt.witness_length),
                                         bad, w});
            }
        }
    });
}

VerificationReport suite_higher_prime(const Fixture& fx, const VerifyOptions& opt)
{
    return timed(start("higher_prime", label(fx), opt), [&](VerificationReport& rep) {
        const FiniteRing& R = *fx.ring;
        RadidealChain chain;
        try {
            chain = higher_radideals(fx.ring, fx.derivation, opt.exec);
        } catch (const ChainError& e) {
            rep.status = SuiteStatus::partial;
            rep.note = e.what();
            return;
        }
        SuiteRng rng(opt.seed, "higher_prime", fx.name);
        const Ideal& limit = chain.limit;
        rep.note = fmt::format("limit {} at step {}", R.display_set(limit.members),
                               chain.stabilization_step);

        // (a) strict growth and stabilization within |R| stages.
        bool strict = true;
        for (std::size_t s = 1; s < chain.stages.size(); ++s)
            strict = strict && chain.stages[s - 1].members.subset_of(chain.stages[s].members) &&
                     !(chain.stages[s - 1].members == chain.stages[s].members);
        rep.record(strict && chain.stabilization_step <= R.order(),
                   {"chain", fmt::format("strictly ascending, stable within {} steps", R.order()),
                    fmt::format("step {}", chain.stabilization_step), ""});

        // (b) each stage step is the δ-radideal of the previous quotient, and
        // the projection is a homomorphism of series rings.
        const auto rpool = all_elements(R);
        Ideal prev{fx.ring, ElementSet(R.order(), {R.zero()}), Sidedness::two_sided};
        for (std::size_t s = 0; s < chain.stages.size(); ++s) {
            const QuotientData q = quotient_ring(fx.ring, prev, fx.derivation.get());
            const IlDeltaResult qr = radideal_Il_delta(*q.quotient, *q.induced_derivation, opt.exec);
            ElementSet image(q.quotient->order());
            chain.stages[s].members.for_each([&](Elem e) { image.insert(q.projection[e]); });
            rep.record(image == qr.members,
                       {fmt::format("stage {}", s + 1), q.quotient->display_set(qr.members),
                        q.quotient->display_set(image), ""});
            auto project = [&](const Series& f) {
                std::vector<Elem> coeffs;
                for (Elem c : f.coeffs())
                    coeffs.push_back(q.projection[c]);
                ElementSet u(q.quotient->order());
                f.unknown().for_each([&](Elem e) { u.insert(q.projection[e]); });
                return Series::make(q.quotient, q.induced_derivation, f.floor(), std::move(coeffs),
                                    additive_closure(*q.quotient, u));
            };
            const std::size_t checks = std::max<std::size_t>(1, opt.trials / 10);
            for (std::size_t t = 0; t < checks; ++t) {
                const Series f = random_series(rng, fx.ring, fx.derivation, rpool);
                const Series g = random_series(rng, fx.ring, fx.derivation, rpool);
                const Series down = project(mul(f, g, opt.precision));
                const Series up = mul(project(f), project(g), opt.precision);
                const std::int64_t fl = common_floor(down, up);
                rep.record(equal_to_floor(down, up, fl),
                           {fmt::format("stage {} projection", s), to_string(up), to_string(down),
                            fmt::format("f={} g={}", term_list(f), term_list(g))});
            }
            prev = chain.stages[s];
        }

        // (c) R/P_d has no δ-radideal and P_d-series generate vanishing products.
        const QuotientData top = quotient_ring(fx.ring, limit, fx.derivation.get());
        const IlDeltaResult qr = radideal_Il_delta(*top.quotient, *top.induced_derivation, opt.exec);
        rep.record(qr.members.size() == 1,
                   {"R/P_d", "{0}", top.quotient->display_set(qr.members), ""});
        const auto k = nilpotency_index(R, limit.members);
        rep.record(k.has_value(), {"P_d", "nilpotent", "not nilpotent", ""});
        if (k) {
            const auto ppool = limit.members.members();
            for (std::size_t t = 0; t < opt.trials; ++t) {
                const Series f = random_series(rng, fx.ring, fx.derivation, ppool);
                std::string trace;
                const Series prod = interleaved_product(rng, fx, f, *k, rpool, opt.precision, trace);
                rep.record(prod.is_zero(), {fmt::format("P_d-series, {} interleaved factors", *k),
                                            "0 (exact)", to_string(prod), trace});
            }
        }
        if (fx.meta.zero_derivation) {
            const Ideal p = prime_radical(fx.ring, opt.exec);
            rep.record(p.members == limit.members, {"chain limit vs prime radical",
                                                    R.display_set(p.members),
                                                    R.display_set(limit.members), ""});
        }
    });
}

VerificationReport suite_counterexample(std::uint32_t m, std::uint32_t n, std::uint32_t k_max,
                                        const VerifyOptions& opt)
{
    std::vector<std::uint32_t> exps;
    for (std::uint32_t i = 1; i <= n; ++i)
        exps.push_back(i + 1);
    std::string exps_text;
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps_text += fmt::format("{}{}", i ? "," : "", exps[i]);
    const std::string fixture = fmt::format("counterexample m={} n={} (exponents {})", m, n, exps_text);
    return timed(start("counterexample", fixture, opt), [&](VerificationReport& rep) {
        const TruncatedAlgebra alg(m, exps);
        rep.note = fmt::format("order {}^{}", m, alg.monomials());

        // Commutative, unital, δ = 0: Σ δ^j(a)R = aR, and aR is left
        // T-nilpotent exactly when a is nilpotent, with the same bound.
        for (std::uint32_t i = 0; i < n; ++i) {
            const auto idx = alg.nilpotency_index(alg.generator(i), alg.monomials() + 1);
            rep.record(idx && *idx == i + 2,
                       {fmt::format("{} in I_l,d", alg.generator_name(i)),
                        fmt::format("nilpotent of index {}", i + 2),
                        idx ? fmt::format("index {}", *idx) : "not nilpotent", ""});
        }

        // Table cross-check where the ring fits under the order bound.
        const double bits = alg.log2_order();
        if (bits <= 12.0 + 1e-9) {
            const RingPtr r = make_truncated_poly(m, exps);
            const DerivationPtr d = Derivation::zero(r);
            for (std::uint32_t i = 0; i < n; ++i) {
                const Elem a = *r->generator(alg.generator_name(i));
                const IlDeltaProbe probe = probe_il_delta(*r, *d, a);
                rep.record(probe.verdict.t_nilpotent && probe.verdict.bound == i + 2,
                           {fmt::format("{} via Cayley tables", alg.generator_name(i)),
                            fmt::format("left T-nilpotent, bound {}", i + 2),
                            probe.verdict.t_nilpotent
                                ? fmt::format("bound {}", probe.verdict.bound)
                                : "not T-nilpotent",
                            ""});
            }
        }

        const LaurentPoly f = counterexample_series(alg);
        LaurentPoly power = f;
        for (std::uint32_t k = 1; k <= k_max; ++k) {
            if (k > 1)
                power = laurent_mul(alg, power, f);
            rep.record(!laurent_is_zero(alg, power),
                       {fmt::format("f^{}", k), "nonzero", laurent_display(alg, power),
                        fmt::format("f = {}", laurent_display(alg, f))});
        }
    });
}

// ---------------------------------------------------------------------------

VerificationReport suite_relations(const Fixture& fx, const VerifyOptions& opt)
{
    return timed(start("relations", label(fx), opt), [&](VerificationReport& rep) {
        if (needs_unital(rep, fx))
            return;
        const FiniteRing& R = *fx.ring;
        const Derivation& D = *fx.derivation;
        const Series x = x_power(fx.ring, fx.derivation, 1);
        const Series xinv = x_power(fx.ring, fx.derivation, -1);
        const std::int64_t floor = -1 - opt.precision.default_floor_drop;
        for (std::size_t a = 0; a < R.order(); ++a) {
            const auto ea = static_cast<Elem>(a);
            const Series sa = embed_scalar(fx.ring, fx.derivation, ea);
            const Series lhs = mul(x, sa, opt.precision);
            const Series rhs = from_terms(fx.ring, fx.derivation, {{1, ea}, {0, D(ea)}});
            rep.record(lhs.exact() && equal_to_floor(lhs, rhs, common_floor(lhs, rhs)),
                       {fmt::format("x*{}", elem(R, ea)), to_string(rhs), to_string(lhs), ""});

            // Σ (−1)^i δ^i(a) x^(−i−1), term by term.
            std::vector<Series::Term> terms;
            Elem cur = ea;
            bool terminated = false;
            for (std::int64_t i = 0; -i - 1 >= floor; ++i) {
                if (cur == R.zero()) {
                    terminated = true;
                    break;
                }
                terms.emplace_back(-i - 1, i % 2 == 0 ? cur : R.neg(cur));
                cur = D(cur);
            }
            const Series expected = from_terms(fx.ring, fx.derivation, terms);
            const Series got = mul(xinv, sa, opt.precision, floor);
            bool ok = got.exact() == (terminated || D.orbit_terminates(ea));
            if (ok) {
                const std::int64_t fl = got.exact() ? common_floor(got, expected) : got.floor();
                ok = got.floor() <= floor || got.exact();
                ok = ok && equal_to_floor(got, expected, std::max(fl, floor));
            }
            rep.record(ok, {fmt::format("x^-1*{}", elem(R, ea)), to_string(expected), to_string(got),
                            term_list(got)});
            const Series cp = commute_pow(fx.ring, fx.derivation, -1, ea, floor);
            rep.record(cp.exact() == got.exact() &&
                           equal_to_floor(cp, got, std::max(common_floor(cp, got), floor)),
                       {fmt::format("commute_pow(-1, {})", elem(R, ea)), to_string(got),
                        to_string(cp), ""});
        }
    });
}

VerificationReport suite_series_axioms(const Fixture& fx, const VerifyOptions& opt)
{
    return timed(start("series_axioms", label(fx), opt), [&](VerificationReport& rep) {
        SuiteRng rng(opt.seed, "series_axioms", fx.name);
        const auto pool = all_elements(*fx.ring);
        for (std::size_t t = 0; t < opt.trials; ++t) {
            const Series f = random_series(rng, fx.ring, fx.derivation, pool);
            const Series g = random_series(rng, fx.ring, fx.derivation, pool);
            const Series h = random_series(rng, fx.ring, fx.derivation, pool);
            const std::string w =
                fmt::format("f={} g={} h={}", term_list(f), term_list(g), term_list(h));
            const auto& P = opt.precision;
            const Series l = mul(mul(f, g, P), h, P);
            const Series r = mul(f, mul(g, h, P), P);
            rep.record(equal_to_floor(l, r, common_floor(l, r)),
                       {"(fg)h vs f(gh)", to_string(r), to_string(l), w});
            const Series dl = mul(f, add(g, h), P);
            const Series dr = add(mul(f, g, P), mul(f, h, P));
            rep.record(equal_to_floor(dl, dr, common_floor(dl, dr)),
                       {"f(g+h) vs fg+fh", to_string(dr), to_string(dl), w});
            const Series el = mul(add(f, g), h, P);
            const Series er = add(mul(f, h, P), mul(g, h, P));
            rep.record(equal_to_floor(el, er, common_floor(el, er)),
                       {"(f+g)h vs fh+gh", to_string(er), to_string(el), w});
        }
    });
}

VerificationReport suite_conjugation(const Fixture& fx, const VerifyOptions& opt)
{
    return timed(start("conjugation", label(fx), opt), [&](VerificationReport& rep) {
        if (needs_unital(rep, fx))
            return;
        SuiteRng rng(opt.seed, "conjugation", fx.name);
        const auto pool = all_elements(*fx.ring);
        for (std::size_t t = 0; t < opt.conjugation_trials; ++t) {
            const Series f = random_series(rng, fx.ring, fx.derivation, pool);
            for (std::uint64_t j = 0; j <= opt.conjugation_max_j; ++j) {
                const auto res = conjugation_check(
                    f, j, f.top() + static_cast<std::int64_t>(j) - opt.precision.default_floor_drop,
                    opt.precision);
                rep.record(res.holds, {fmt::format("j={}, f={}", j, to_string(f)), to_string(res.lhs),
                                       to_string(res.rhs), term_list(f)});
            }
        }
    });
}

VerificationReport suite_levitzki(const Fixture& fx, const VerifyOptions& opt)
{
    return timed(start("levitzki", label(fx), opt), [&](VerificationReport& rep) {
        const FiniteRing& R = *fx.ring;
        for (const Ideal& i : ideals_to_scan(fx, opt)) {
            auto [sub, new_to_old] = subring(*fx.ring, i.members);
            const bool stable = is_delta_ideal(R, *fx.derivation, i);
            DerivationPtr d = stable ? restrict_derivation(sub, new_to_old, *fx.derivation, R.order())
                                     : nullptr;
            const TNilpVerdict v = is_left_t_nilpotent(*sub, ElementSet::full(sub->order()));
            const AnnihilatorSeries ann = upper_left_annihilator_series(*sub, d.get());
            const std::string in = fmt::format("N={}", R.display_set(i.members));
            rep.record(v.t_nilpotent == ann.reached_top,
                       {in, fmt::format("T-nilpotent={}", v.t_nilpotent),
                        fmt::format("annihilator series reaches N={}", ann.reached_top), ""});
            rep.record(witness_valid(*sub, ElementSet::full(sub->order()), v),
                       {in, "valid witness", "witness does not check", ""});
            if (d) {
                bool all = true;
                for (bool b : ann.delta_stable)
                    all = all && b;
                rep.record(all, {in, "every stage delta-stable", "unstable stage", ""});
            }
        }
    });
}

VerificationReport suite_radical_collapse(const Fixture& fx, const VerifyOptions& opt)
{
    return timed(start("radical_collapse", label(fx), opt), [&](VerificationReport& rep) {
        const FiniteRing& R = *fx.ring;
        const Ideal il = radideal_Il(fx.ring, opt.exec);
        const Ideal p = prime_radical(fx.ring, opt.exec);
        const RadidealChain chain = higher_radideals(fx.ring, nullptr, opt.exec);
        rep.note = fmt::format("I_l = {}", R.display_set(il.members));
        rep.record(is_ideal(R, il.members), {"I_l", "an ideal", R.display_set(il.members), ""});
        rep.record(il.members == p.members,
                   {"I_l vs P", R.display_set(p.members), R.display_set(il.members), ""});
        rep.record(chain.limit.members == p.members, {"chain limit vs P", R.display_set(p.members),
                                                      R.display_set(chain.limit.members), ""});
        const auto members = il.members.members();
        for (std::size_t x = 0; x < members.size(); ++x)
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                const Ideal sum = ideal_generated(fx.ring, ElementSet(R.order(), {members[x], members[y]}));
                rep.record(is_left_t_nilpotent(R, sum.members).t_nilpotent,
                           {fmt::format("({}, {})", R.display(members[x]), R.display(members[y])),
                            "left T-nilpotent", "not", ""});
            }
        for (std::size_t a = 0; a < R.order(); ++a) {
            ElementSet ar(R.order());
            for (std::size_t x = 0; x < R.order(); ++x)
                ar.insert(R.mul(static_cast<Elem>(a), static_cast<Elem>(x)));
            if (!R.unital())
                ar.insert(static_cast<Elem>(a));
            if (!is_left_t_nilpotent(R, ar).t_nilpotent)
                continue;
            const Ideal gen = ideal_generated(fx.ring, ElementSet(R.order(), {static_cast<Elem>(a)}));
            rep.record(is_left_t_nilpotent(R, gen.members).t_nilpotent,
                       {fmt::format("RaR for a={}", elem(R, static_cast<Elem>(a))), "left T-nilpotent",
                        "not", ""});
        }
    });
}

namespace {

// Plain convolution, usable only when R is commutative and δ = 0.
Series commutative_product(const Series& f, const Series& g)
{
    const FiniteRing& R = *f.ring();
    std::map<std::int64_t, Elem> acc;
    for (const auto& [i, a] : f.terms())
        for (const auto& [j, b] : g.terms()) {
            Elem& slot = acc.try_emplace(i + j, R.zero()).first->second;
            slot = R.add(slot, R.mul(a, b));
        }
    std::vector<Series::Term> terms(acc.begin(), acc.end());
    return from_terms(f.ring(), f.derivation(), terms);
}

} // namespace

VerificationReport suite_degeneration(const Fixture& fx, const VerifyOptions& opt)
{
    return timed(start("degeneration", label(fx), opt), [&](VerificationReport& rep) {
        if (!fx.meta.zero_derivation || !fx.meta.commutative) {
            skip(rep, "needs a commutative ring with the zero derivation");
            return;
        }
        SuiteRng rng(opt.seed, "degeneration", fx.name);
        const auto pool = all_elements(*fx.ring);
        for (std::size_t t = 0; t < opt.degeneration_trials; ++t) {
            const Series f = random_series(rng, fx.ring, fx.derivation, pool);
            const Series g = random_series(rng, fx.ring, fx.derivation, pool);
            const Series got = mul(f, g, opt.precision);
            const Series want = commutative_product(f, g);
            rep.record(got.exact() && equal_to_floor(got, want, common_floor(got, want)),
                       {"f*g", to_string(want), to_string(got),
                        fmt::format("f={} g={}", term_list(f), term_list(g))});
        }
    });
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {
        "relations",    "series_axioms", "conjugation",   "degeneration", "delta_compat",
        "ideal_lifts",  "delta_orbit",   "series_tnilp",  "levitzki",     "radical_collapse",
        "main_theorem", "higher_prime",  "counterexample"};
    return names;
}

std::vector<VerificationReport> run_suite(std::string_view suite, const std::vector<Fixture>& catalog,
                                          const VerifyOptions& opt)
{
    using Fn = VerificationReport (*)(const Fixture&, const VerifyOptions&);
    static const std::map<std::string, Fn, std::less<>> table = {
        {"relations", suite_relations},
        {"series_axioms", suite_series_axioms},
        {"conjugation", suite_conjugation},
        {"degeneration", suite_degeneration},
        {"delta_compat", suite_delta_compat},
        {"ideal_lifts", static_cast<Fn>(suite_ideal_lifts)},
        {"delta_orbit", suite_delta_orbit},
        {"series_tnilp", static_cast<Fn>(suite_series_tnilp)},
        {"levitzki", suite_levitzki},
        {"radical_collapse", suite_radical_collapse},
        {"main_theorem", suite_main_theorem},
        {"higher_prime", suite_higher_prime},
    };
    if (suite == "counterexample") {
        if (catalog.empty())
            return {};
        std::vector<VerificationReport> out;
        for (std::uint32_t n = 1; n <= 3; ++n)
            out.push_back(suite_counterexample(2, n, n, opt));
        return out;
    }
    const auto it = table.find(suite);
    if (it == table.end())
        throw std::invalid_argument(fmt::format("unknown suite '{}'", suite));
    const Fn fn = it->second;
    return kernels::map_indexed<VerificationReport>(
        catalog.size(), [&](std::size_t k) { return fn(catalog[k], opt); }, opt.exec);
}

std::vector<VerificationReport> run_all(const std::vector<Fixture>& catalog, const VerifyOptions& opt)
{
    std::vector<VerificationReport> out;
    for (const auto& name : suite_names()) {
        auto part = run_suite(name, catalog, opt);
        for (auto& r : part)
            out.push_back(std::move(r));
    }
    return out;
}

} // namespace psido
