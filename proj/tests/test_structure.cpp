#include "catch_amalgamated.hpp"

#include <random>

#include "littlewood/enumsearch.hpp"
#include "littlewood/structure.hpp"
#include "test_util.hpp"

using namespace littlewood;

namespace {
std::vector<long long> seq_of(std::initializer_list<long long> v) { return std::vector<long long>(v); }

std::vector<long long> q_sequence(const QPoly& q) {
    return std::vector<long long>(q.coeffs.begin(), q.coeffs.end());
}
} // namespace

TEST_CASE("decompose worked examples") {
    auto d1 = decompose(seq_of({1, 1, 1, 1}), 1, false);
    REQUIRE(d1.block_count() == 1);
    CHECK(d1.blocks[0].pattern == std::vector<long long>{1});

    auto d2 = decompose(seq_of({1, 1, 1, -1, -1}), 1, false);
    REQUIRE(d2.block_count() == 2);
    CHECK(d2.blocks[0].begin == 0);
    CHECK(d2.blocks[0].end == 3);
    CHECK(d2.blocks[1].begin == 3);
    CHECK(d2.blocks[1].end == 5);

    auto d3 = decompose(seq_of({1, -1, 1, -1, 1, 1, -1}), 2, false);
    REQUIRE(d3.block_count() == 2);
    CHECK(d3.blocks[0].end == 5);
}

TEST_CASE("period_profile worked examples") {
    std::vector<long long> alt(16);
    for (std::size_t i = 0; i < 16; ++i) alt[i] = (i % 2 == 0) ? 1 : -1;
    auto prof = period_profile(alt, 2);
    CHECK(prof[0] == std::pair<std::size_t, std::size_t>{1, 16});
    CHECK(prof[1] == std::pair<std::size_t, std::size_t>{2, 1});

    std::vector<long long> ones(16, 1);
    for (const auto& [D, L] : period_profile(ones, 6)) CHECK(L == 1);

    // h_m corresponds to an odd-degree reciprocal Littlewood polynomial whose
    // Q-coefficients are 4-periodic.
    auto P = parse_signs("+-+-++-+-+");
    REQUIRE(P.is_reciprocal());
    auto q = build_Q(P);
    auto qprof = period_profile(q_sequence(q), 4);
    CHECK(qprof[3].second == 1);
}

TEST_CASE("aligned decomposition: stability on exactly periodic input") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t D = static_cast<std::size_t>(testutil::uniform_int(rng, 1, 6));
        std::vector<long long> pat(D);
        for (auto& v : pat) v = testutil::uniform_int(rng, -2, 2);
        const std::size_t len = static_cast<std::size_t>(testutil::uniform_int(rng, 1, 200));
        std::vector<long long> seq(len);
        for (std::size_t n = 0; n < len; ++n) seq[n] = pat[n % D];
        CHECK(decompose(seq, D, true).block_count() == 1);
        CHECK(decompose(seq, D, false).block_count() == 1);
    }
}

TEST_CASE("greedy equals the DP minimum") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t len = static_cast<std::size_t>(testutil::uniform_int(rng, 1, 256));
        const std::size_t D = static_cast<std::size_t>(testutil::uniform_int(rng, 1, 6));
        std::vector<long long> seq(len);
        // biased sampling produces longer periodic runs
        for (std::size_t n = 0; n < len; ++n) {
            if (n >= D && testutil::uniform_int(rng, 0, 9) < 8) seq[n] = seq[n - D];
            else seq[n] = testutil::uniform_int(rng, -1, 1);
        }
        const bool aligned = (trial % 2 == 0);
        CHECK(decompose(seq, D, aligned).block_count() == min_blocks_dp(seq, D, aligned));
    }
}

TEST_CASE("to_geometric worked examples") {
    {
        std::vector<long long> ones(8, 1);
        auto form = to_geometric(decompose(ones, 1, true), ones);
        REQUIRE(form.patterns.size() == 1);
        CHECK(form.patterns[0] == IntPoly({1}));
        CHECK(form.breakpoints == std::vector<std::size_t>{0, 8});
        CHECK(form.residual_terms == 0);
    }
    {
        std::vector<long long> alt{1, -1, 1, -1, 1, -1, 1, -1};
        auto form = to_geometric(decompose(alt, 2, true), alt);
        REQUIRE(form.patterns.size() == 1);
        CHECK(form.patterns[0] == IntPoly({1, -1}));
        CHECK(form.residual_terms == 0);
    }
    {
        // two-block input
        std::vector<long long> seq{1, 1, 1, 1, -1, 1, -1, 1, -1, 1};
        auto dec = decompose(seq, 2, true);
        REQUIRE(dec.block_count() == 2);
        auto form = to_geometric(dec, seq); // constructor verifies the identity exactly
        CHECK(form.patterns.size() == 2);
    }
    CHECK_THROWS_AS(to_geometric(decompose(seq_of({1, 1, 1}), 2, false), seq_of({1, 1, 1})), not_aligned);
}

TEST_CASE("to_geometric residual bound and exactness on random input") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t len = static_cast<std::size_t>(testutil::uniform_int(rng, 1, 128));
        const std::size_t D = static_cast<std::size_t>(testutil::uniform_int(rng, 1, 5));
        std::vector<long long> seq(len);
        long long maxc = 0;
        for (std::size_t n = 0; n < len; ++n) {
            if (n >= D && testutil::uniform_int(rng, 0, 9) < 8) seq[n] = seq[n - D];
            else seq[n] = testutil::uniform_int(rng, -2, 2);
            maxc = std::max(maxc, std::llabs(seq[n]));
        }
        if (seq.back() == 0) seq.back() = 1, maxc = std::max(maxc, 1LL);
        auto form = to_geometric(decompose(seq, D, true), seq);
        for (const auto& v : form.residual.coeffs()) {
            BigInt bound = 2 * BigInt(maxc);
            CHECK(abs(v) <= bound);
        }
    }
}

TEST_CASE("to_corollary_form worked examples") {
    {
        // exactly periodic: no delta blocks
        std::vector<long long> eps{0, 1, 0, -1};
        std::vector<long long> seq(16);
        for (std::size_t n = 0; n < 16; ++n) seq[n] = eps[n % 4];
        auto form = to_corollary_form(seq, 4, eps);
        CHECK(form.blocks.empty());
        CHECK(form.delta_in_allowed_set);
        CHECK(form.closed_form_checked);
    }
    {
        // one flipped sign: a single block of length D containing it
        std::vector<long long> eps{1, -1};
        std::vector<long long> seq(20);
        for (std::size_t n = 0; n < 20; ++n) seq[n] = eps[n % 2];
        const std::size_t t = 7;
        seq[t] = -seq[t];
        auto form = to_corollary_form(seq, 2, eps);
        REQUIRE(form.blocks.size() == 1);
        CHECK(form.blocks[0].end - form.blocks[0].begin == 2);
        CHECK(form.blocks[0].begin <= t);
        CHECK(t < form.blocks[0].end);
        CHECK(form.blocks[0].pattern[t % 2] == -2 * eps[t % 2]);
        CHECK(form.delta_in_allowed_set);
    }
    CHECK_THROWS_AS(to_corollary_form(seq_of({1, 1}), 4, seq_of({1, 1})), length_mismatch);
}

TEST_CASE("delta values from odd-degree Littlewood Q land in {-2 eps, 0}") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        const int N = 2 * testutil::uniform_int(rng, 5, 18) + 1;
        auto P = testutil::random_reciprocal(N, rng);
        auto q = q_sequence(build_Q(P));
        const std::size_t D = 4;
        auto eps = decompose(q, D, true).blocks[0].pattern;
        auto form = to_corollary_form(q, D, eps);
        CHECK(form.delta_in_allowed_set);
    }
}
