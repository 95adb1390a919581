#include "catch_amalgamated.hpp"

#include <random>

#include "littlewood/spectral.hpp"
#include "test_util.hpp"

using namespace littlewood;

namespace {

std::vector<Complex> random_factor(std::mt19937_64& rng, int maxdeg) {
    std::vector<Complex> d(static_cast<std::size_t>(testutil::uniform_int(rng, 1, maxdeg)) + 1);
    for (auto& v : d) v = Complex(testutil::uniform(rng, -1.0, 1.0), testutil::uniform(rng, -1.0, 1.0));
    if (std::abs(d.back()) < 1e-3) d.back() += Complex(1.0, 0.0);
    return d;
}

} // namespace

TEST_CASE("autocorrelation worked examples") {
    auto w1 = autocorrelation({Complex(1), Complex(1)});
    CHECK(w1.coeff(0) == Complex(2.0));
    CHECK(w1.coeff(1) == Complex(1.0));

    auto w2 = autocorrelation({Complex(1), Complex(2)});
    CHECK(w2.coeff(0) == Complex(5.0));
    CHECK(w2.coeff(1) == Complex(2.0));

    auto w3 = autocorrelation({Complex(1)});
    CHECK(w3.coeff(0) == Complex(1.0));
    CHECK(w3.top() == 0);
}

TEST_CASE("autocorrelation is invariant under phase and reverse-conjugate") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        auto d = random_factor(rng, 12);
        const Complex lambda = std::polar(1.0, testutil::uniform(rng, 0.0, 6.28));
        std::vector<Complex> alt(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) alt[i] = lambda * std::conj(d[d.size() - 1 - i]);
        auto w1 = autocorrelation(d);
        auto w2 = autocorrelation(alt);
        for (int n = 0; n <= w1.top(); ++n) REQUIRE(std::abs(w1.coeff(n) - w2.coeff(n)) < 1e-12);
    }
}

TEST_CASE("fejer_riesz_factor worked examples") {
    {
        auto f = fejer_riesz_factor(TrigPoly::from_real_half({2.0, 1.0}), 1e-8);
        REQUIRE(f.d.size() == 2);
        CHECK(f.residual <= 1e-8);
        CHECK(std::abs(std::abs(f.d[0]) - 1.0) < 1e-7);
        CHECK(std::abs(std::abs(f.d[1]) - 1.0) < 1e-7);
    }
    {
        auto f = fejer_riesz_factor(TrigPoly::from_real_half({5.0, 2.0}), 1e-8);
        CHECK(f.residual <= 1e-8);
        double lo = std::min(std::abs(f.d[0]), std::abs(f.d[1]));
        double hi = std::max(std::abs(f.d[0]), std::abs(f.d[1]));
        CHECK(std::abs(lo - 1.0) < 1e-7);
        CHECK(std::abs(hi - 2.0) < 1e-7);
    }
    try {
        fejer_riesz_factor(TrigPoly::from_real_half({1.0, 1.0}), 1e-8);
        FAIL("expected not_nonnegative");
    } catch (const not_nonnegative& e) {
        CHECK(std::abs(e.witness_t - 3.14159265) < 0.5);
        CHECK(e.witness_value < 0.0);
    }
}

TEST_CASE("factor-then-autocorrelate round trip") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 100; ++trial) {
        auto d = random_factor(rng, 32);
        auto w = autocorrelation(d);
        auto f = fejer_riesz_factor(w, 1e-8);
        REQUIRE(f.residual <= 1e-8);
        auto back = autocorrelation(f.d);
        for (int n = 0; n <= w.top(); ++n) REQUIRE(std::abs(back.coeff(n) - w.coeff(n)) <= 1e-8);
    }
}

TEST_CASE("coefficient_sign_change_test worked examples") {
    CHECK(coefficient_sign_change_test(TrigPoly::from_real_half({1.0, 1.0})) == SignChangeVerdict::HasSignChange);
    CHECK(coefficient_sign_change_test(TrigPoly::from_real_half({2.0, 1.0})) == SignChangeVerdict::Inconclusive);
    CHECK(coefficient_sign_change_test(TrigPoly::from_real_half({2.0, 0.0, 1.0})) == SignChangeVerdict::Inconclusive);
    // equality with a nonzero middle coefficient
    CHECK(coefficient_sign_change_test(TrigPoly::from_real_half({2.0, 1.0, 1.0})) == SignChangeVerdict::HasSignChange);
    CHECK_THROWS_AS(coefficient_sign_change_test(TrigPoly::from_real_half({1.0, 0.0})), zero_leading);
}

TEST_CASE("find_sign_change worked examples") {
    auto cert = find_sign_change(TrigPoly::from_real_half({1.0, 1.0}), 256);
    REQUIRE(cert.has_value());
    CHECK(cert->w_plus > 0.0);
    CHECK(cert->w_minus < 0.0);
    CHECK(std::abs(cert->w_plus - 3.0) < 1e-3);
    CHECK(std::abs(cert->w_minus + 1.0) < 1e-3);

    CHECK_FALSE(find_sign_change(TrigPoly::from_real_half({2.0, 1.0}), 256).has_value());
    CHECK_THROWS_AS(find_sign_change(TrigPoly::from_real_half({2.0, 1.0}), 4), error);
}

TEST_CASE("sign-change positives are certified on random integer instances") {
    std::mt19937_64 rng(1618);
    int positives = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int N = testutil::uniform_int(rng, 1, 32);
        std::vector<double> half(static_cast<std::size_t>(N) + 1);
        for (auto& v : half) v = testutil::uniform_int(rng, -3, 3);
        if (half.back() == 0.0) half.back() = 1.0;
        TrigPoly w = TrigPoly::from_real_half(half);
        if (coefficient_sign_change_test(w) == SignChangeVerdict::HasSignChange) {
            ++positives;
            auto cert = find_sign_change(w, 1 << 12);
            REQUIRE(cert.has_value());
            REQUIRE(cert->w_plus > 0.0);
            REQUIRE(cert->w_minus < 0.0);
        }
    }
    CHECK(positives > 100); // the generator must actually exercise the test
}
