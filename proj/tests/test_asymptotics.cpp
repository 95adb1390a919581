#include "catch_amalgamated.hpp"

#include <cmath>
#include <random>

#include "littlewood/asymptotics.hpp"
#include "test_util.hpp"

using namespace littlewood;

namespace {

GeneralizedTrigSum sym(double a0, std::vector<TrigTerm> terms) {
    GeneralizedTrigSum H;
    H.form = TrigForm::symmetric_form;
    H.a0 = a0;
    H.terms = std::move(terms);
    return H;
}

GeneralizedTrigSum sine_wave() {
    GeneralizedTrigSum H;
    H.form = TrigForm::im_form;
    H.terms = {{Complex(1.0, 0.0), Frequency::of_rational(1, 1)}};
    return H; // Im e(u) = sin(2 pi u)
}

const double kSqrt2 = std::sqrt(2.0);

// random instance satisfying the sign-change criterion (strict branch)
GeneralizedTrigSum random_criterion_instance(std::mt19937_64& rng) {
    GeneralizedTrigSum H;
    H.form = TrigForm::symmetric_form;
    const int l = testutil::uniform_int(rng, 2, 5);
    std::vector<double> freqs;
    for (int j = 0; j + 1 < l; ++j) {
        if (rng() & 1) {
            const long long q = testutil::uniform_int(rng, 2, 9);
            const long long p = testutil::uniform_int(rng, 1, static_cast<int>(q) - 1);
            freqs.push_back(static_cast<double>(p) / static_cast<double>(q));
        } else {
            freqs.push_back(std::fmod(testutil::uniform(rng, 0.05, 0.95) * kSqrt2, 1.0));
        }
    }
    std::sort(freqs.begin(), freqs.end());
    freqs.erase(std::unique(freqs.begin(), freqs.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-6; }),
                freqs.end());
    for (double f : freqs) {
        if (f <= 0.0 || f >= 1.0) continue;
        Complex amp(testutil::uniform(rng, -1.0, 1.0), testutil::uniform(rng, -1.0, 1.0));
        // declared tags: q<=16 denominators are rational; everything else irrational
        bool rat = false;
        long long rp = 0, rq = 1;
        for (long long q = 2; q <= 16 && !rat; ++q) {
            const double scaled = f * static_cast<double>(q);
            if (std::abs(scaled - std::nearbyint(scaled)) < 1e-9) {
                rat = true;
                rp = static_cast<long long>(std::nearbyint(scaled));
                rq = q;
            }
        }
        H.terms.push_back({amp, rat ? Frequency::of_rational(rp, rq) : Frequency::of_irrational(f)});
    }
    const double al = testutil::uniform(rng, 0.5, 1.5);
    H.terms.push_back({Complex(al, testutil::uniform(rng, -0.3, 0.3)), Frequency::of_rational(1, 1)});
    const double top = std::abs(H.terms.back().amplitude);
    H.a0 = testutil::uniform(rng, 0.0, 1.8 * top); // strictly below 2|a_l|
    return H;
}

} // namespace

TEST_CASE("eval worked examples") {
    CHECK(std::abs(sine_wave().eval(0.25) - 1.0) < 1e-12);

    auto H2 = sym(2.0, {{Complex(1.0, 0.0), Frequency::of_rational(1, 1)}});
    CHECK(std::abs(H2.eval(0.5)) < 1e-12);

    auto H3 = sym(2.0, {{Complex(1.0, 0.0), Frequency::of_irrational(kSqrt2 - 1.0)},
                        {Complex(1.0, 0.0), Frequency::of_rational(1, 1)}});
    CHECK(std::abs(H3.eval(0.0) - 6.0) < 1e-12);
}

TEST_CASE("signchange_criterion worked examples") {
    auto H1 = sym(0.0, {{Complex(0.7, 0.2), Frequency::of_rational(1, 1)}});
    CHECK(signchange_criterion(H1) == SignChangeOutcome::InfinitelyMany);

    auto H2 = sym(2.0, {{Complex(1.0, 0.0), Frequency::of_rational(1, 1)}});
    CHECK(signchange_criterion(H2) == SignChangeOutcome::Inconclusive);

    auto H3 = sym(2.0, {{Complex(1.0, 0.0), Frequency::of_irrational(kSqrt2 - 1.0)},
                        {Complex(1.0, 0.0), Frequency::of_rational(1, 1)}});
    CHECK(signchange_criterion(H3) == SignChangeOutcome::InfinitelyMany);

    auto bad = sym(1.0, {{Complex(1.0, 0.0), Frequency::of_rational(1, 2)}});
    CHECK_THROWS_AS(signchange_criterion(bad), not_normalized);
}

TEST_CASE("count_changes worked examples") {
    CHECK(count_changes(sine_wave(), 0.0, 3.0, 1024) == 6);

    auto flat = sym(2.0, {{Complex(1.0, 0.0), Frequency::of_rational(1, 1)}});
    CHECK(count_changes(flat, 0.0, 3.0, 1024) == 0);

    auto Heq = sym(2.0, {{Complex(1.0, 0.0), Frequency::of_irrational(kSqrt2 - 1.0)},
                         {Complex(1.0, 0.0), Frequency::of_rational(1, 1)}});
    CHECK(count_changes(Heq, 0.0, 200.0, 100000) >= 4);

    CHECK_THROWS_AS(count_changes(sine_wave(), 0.0, 3.0, 64), error);
}

TEST_CASE("criterion positives produce growing sign-change counts") {
    std::mt19937_64 rng(87);
    int tested = 0;
    while (tested < 20) {
        auto H = random_criterion_instance(rng);
        if (signchange_criterion(H) != SignChangeOutcome::InfinitelyMany) continue;
        ++tested;
        const double mf = std::max(1.0, H.max_frequency());
        auto res = [&](double W) { return static_cast<std::size_t>(80.0 * W * mf); };
        const long long c1 = count_changes(H, 0.0, 25.0, res(25));
        const long long c2 = count_changes(H, 0.0, 50.0, res(50));
        const long long c3 = count_changes(H, 0.0, 100.0, res(100));
        REQUIRE(c2 > c1);
        REQUIRE(c3 > c2);
    }
}

TEST_CASE("weyl_moments worked examples") {
    {
        auto H = sym(0.0, {{Complex(1.0, 0.0), Frequency::of_irrational(kSqrt2 / 2.0)}});
        auto w = weyl_moments(H, 0.0, 100000);
        CHECK(std::abs(w.predicted_limit - 2.0) < 1e-12);
        CHECK(std::abs(w.mean2 - 2.0) < 0.05);
    }
    {
        auto w = weyl_moments(sine_wave(), 0.3, 1000);
        CHECK(w.predicted_limit == 0.0);
    }
    {
        // complement pair rho, 1-rho with amplitudes chosen so the pair term
        // vanishes at theta = 0
        const double rho = kSqrt2 / 2.0;
        GeneralizedTrigSum H = sym(0.0, {{Complex(1.0, 0.0), Frequency::of_irrational(rho)},
                                         {Complex(-1.0, 0.0), Frequency::of_irrational(1.0 - rho)}});
        H.complement_pairs = {{0, 1}};
        auto w = weyl_moments(H, 0.0, 20000);
        CHECK(std::abs(w.predicted_limit) < 1e-12);
        CHECK(std::abs(w.mean2) < 1e-12); // H vanishes on the integer orbit
    }
    {
        GeneralizedTrigSum H = sym(0.0, {{Complex(1.0, 0.0), Frequency::of_irrational(0.3)},
                                         {Complex(1.0, 0.0), Frequency::of_rational(1, 2)}});
        H.complement_pairs = {{0, 1}};
        CHECK_THROWS_AS(weyl_moments(H, 0.0, 10), untagged_frequency);
    }
}

TEST_CASE("partial sums along the rational period grow at the periodic value") {
    // w1(u) = 2 cos(2 pi u) has w1(0) = 2 and w1(1/2) = -2; adding an
    // irrational term only contributes bounded sums.
    auto H = sym(0.0, {{Complex(1.0, 0.0), Frequency::of_irrational(kSqrt2 / 2.0)},
                       {Complex(1.0, 0.0), Frequency::of_rational(1, 1)}});
    const long long n = 10000;
    auto wp = weyl_moments(H, 0.0, n);
    auto wm = weyl_moments(H, 0.5, n);
    CHECK(std::abs(wp.mean1 - 2.0) < 0.2);  // slope +kappa within 10%
    CHECK(std::abs(wm.mean1 + 2.0) < 0.2);
}

TEST_CASE("local_profile exact rescaling of a single block") {
    FamilySpec F;
    FamilyBlock b;
    b.terms = {{Complex(1.0, 0.0), 0.0, 0.0, 0}}; // constant coefficient 1
    b.rho = Frequency::of_rational(1, 1);
    F.blocks.push_back(b); // H_N = Im e(N theta) = sin(2 pi N theta)
    for (long long N : {1024LL, 4096LL, 16384LL}) {
        auto prof = local_profile(F, N, 0.0, 10.0, 2048);
        REQUIRE(prof.b.size() == 1);
        CHECK(std::abs(prof.b[0] - Complex(1.0, 0.0)) < 1e-12);
        CHECK(prof.sup_error <= 1e-10);
    }
}

TEST_CASE("local_profile error halves when the anchor offset is fixed") {
    // constant blocks, rho = 1/3: r(N) = round(N/3) misses rho*N by exactly
    // 1/3 for N a power of two, so the sup error scales like 1/N.
    FamilySpec F;
    FamilyBlock b1, b2;
    b1.terms = {{Complex(1.0, 0.0), 0.0, 0.0, 0}};
    b1.rho = Frequency::of_rational(1, 3);
    b2.terms = {{Complex(1.0, 0.0), 0.0, 0.0, 0}};
    b2.rho = Frequency::of_rational(1, 1);
    F.blocks = {b1, b2};
    double prev = -1.0;
    for (long long N : {1024LL, 2048LL, 4096LL}) {
        auto prof = local_profile(F, N, 0.0, 5.0, 2048);
        if (prev > 0.0) CHECK(prof.sup_error / prev <= 0.6);
        prev = prof.sup_error;
    }
}

TEST_CASE("local_profile error tracks deg B / N for growing blocks") {
    FamilySpec F;
    FamilyBlock b1, b2;
    b1.terms = {{Complex(1.0, 0.0), 1.0, 0.5, 0}}; // frequency ~ sqrt(N)
    b1.rho = Frequency::of_rational(1, 2);
    b2.terms = {{Complex(1.0, 0.0), 0.0, 0.0, 0}};
    b2.rho = Frequency::of_rational(1, 1);
    F.blocks = {b1, b2};
    std::vector<double> errs;
    for (long long N : {1024LL, 2048LL, 4096LL, 8192LL, 16384LL}) {
        errs.push_back(local_profile(F, N, 0.25, 10.0, 2048).sup_error);
        CHECK(F.degree_bound(N) == static_cast<long long>(std::llround(std::sqrt(static_cast<double>(N)))));
    }
    for (std::size_t i = 1; i < errs.size(); ++i) CHECK(errs[i] / errs[i - 1] <= 0.8);
}

TEST_CASE("prop1_oscillation grows with N on the two-periodic pattern") {
    // D = 2, A_1 = 1 + z: strict hypothesis at m = 0
    std::vector<ExpPoly> B{ExpPoly{{{Complex(1.0, 0.0), 0}, {Complex(1.0, 0.0), 1}}}};
    std::vector<double> rho{1.0};
    auto r1 = prop1_oscillation(B, rho, 2, 1 << 10, 0.05, 40.0);
    auto r2 = prop1_oscillation(B, rho, 2, 1 << 14, 0.05, 40.0);
    CHECK(r1.oscillations >= 1);
    CHECK(r2.oscillations >= r1.oscillations);
    CHECK(r1.m_used == 0);
}

TEST_CASE("prop1_oscillation hypothesis failures") {
    // B_l identically zero
    std::vector<ExpPoly> Bz{ExpPoly{{}}};
    CHECK_THROWS_AS(prop1_oscillation(Bz, {1.0}, 2, 1024, 0.05, 10.0), hypothesis_fails);

    // h_m-style pattern (0,1,0,-1): equality at every m, no middle blocks
    std::vector<ExpPoly> Bh{ExpPoly{{{Complex(1.0, 0.0), 1}, {Complex(-1.0, 0.0), 3}}}};
    CHECK_THROWS_AS(prop1_oscillation(Bh, {1.0}, 4, 1024, 0.05, 10.0), hypothesis_fails);
}

TEST_CASE("cancellation_roots verifies the vanishing family") {
    {
        FamilySpec F;
        FamilyBlock b0, bl;
        b0.terms = {{Complex(1.0, 0.0), 0.0, 0.0, 0}};
        b0.rho = Frequency::of_rational(0, 1);
        bl.terms = {{Complex(-1.0, 0.0), 0.0, 0.0, 0}};
        bl.rho = Frequency::of_rational(1, 1);
        F.blocks = {b0, bl}; // Im(1 - e(N theta)) = -sin(2 pi N theta)
        auto rep = cancellation_roots(F, 512);
        CHECK(rep.N == 512);
        CHECK(rep.max_abs <= 1e-9);
    }
    {
        FamilySpec F;
        FamilyBlock b0, bl;
        b0.terms = {{Complex(1.0, 0.0), 0.0, 0.0, 0}, {Complex(1.0, 0.0), 0.0, 0.0, 1}};
        b0.rho = Frequency::of_rational(0, 1);
        bl.terms = {{Complex(-1.0, 0.0), 0.0, 0.0, 0}, {Complex(-1.0, 0.0), 0.0, 0.0, 1}};
        bl.rho = Frequency::of_rational(1, 1);
        F.blocks = {b0, bl}; // B_0 = 1 + e(theta), B_l = -(1 + e(theta))
        CHECK(cancellation_roots(F, 256).max_abs <= 1e-9);
    }
    {
        FamilySpec F;
        FamilyBlock b0, bl;
        b0.terms = {{Complex(1.0, 0.0), 0.0, 0.0, 0}};
        b0.rho = Frequency::of_rational(0, 1);
        bl.terms = {{Complex(1.0, 0.0), 0.0, 0.0, 0}}; // not negated
        bl.rho = Frequency::of_rational(1, 1);
        F.blocks = {b0, bl};
        CHECK_THROWS_AS(cancellation_roots(F, 128), not_cancellation);
    }
}

TEST_CASE("parseval_pattern_checks worked examples") {
    auto p1 = parseval_pattern_checks({1, 1}, PatternCase::even_case);
    CHECK(p1.sum_sq == 4);
    CHECK(p1.sum_ok());

    auto p2 = parseval_pattern_checks({0, 1}, PatternCase::odd_case);
    CHECK(p2.sum_sq == 2);
    CHECK(p2.sum_ok());

    auto p3 = parseval_pattern_checks({0, 1, 0, -1}, PatternCase::odd_case);
    CHECK(p3.sum_sq == 8);
    CHECK(p3.sum_ok());
    CHECK(p3.im_sum <= 8);
    CHECK(p3.im_ok());

    CHECK_THROWS_AS(parseval_pattern_checks({0, 2}, PatternCase::odd_case), bad_support);
    CHECK_THROWS_AS(parseval_pattern_checks({1, 0}, PatternCase::even_case), bad_support);
}

TEST_CASE("parseval identities are exact on random patterns") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        const int D = 2 * testutil::uniform_int(rng, 1, 16);
        std::vector<long long> even(static_cast<std::size_t>(D)), odd(static_cast<std::size_t>(D), 0);
        for (int m = 0; m < D; ++m) {
            even[static_cast<std::size_t>(m)] = (rng() & 1) ? 1 : -1;
            if (m % 2 == 1) odd[static_cast<std::size_t>(m)] = (rng() & 1) ? 1 : -1;
        }
        auto pe = parseval_pattern_checks(even, PatternCase::even_case);
        REQUIRE(pe.sum_ok());
        REQUIRE(pe.im_ok());
        auto po = parseval_pattern_checks(odd, PatternCase::odd_case);
        REQUIRE(po.sum_ok());
        REQUIRE(po.im_ok());
    }
}
