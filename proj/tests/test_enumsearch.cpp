#include "catch_amalgamated.hpp"

#include "littlewood/enumsearch.hpp"

using namespace littlewood;

namespace {
std::vector<std::string> sign_list(int N) {
    std::vector<std::string> out;
    for (const auto& p : enumerate_reciprocal(N)) out.push_back(to_sign_string(p));
    return out;
}
} // namespace

TEST_CASE("enumerate_reciprocal canonical representatives") {
    CHECK(sign_list(1) == std::vector<std::string>{"++"});
    CHECK(sign_list(2) == std::vector<std::string>{"+++", "+-+"});
    CHECK(sign_list(3) == std::vector<std::string>{"++++", "+--+"});
    CHECK(enumerate_reciprocal(8).size() == 16);

    for (int N = 1; N <= 9; ++N) {
        CHECK(reciprocal_count(N) == (1ULL << (N / 2)));
        for (const auto& p : enumerate_reciprocal(N)) {
            CHECK(p.is_reciprocal());
            CHECK(p.coeffs.back() == 1);
        }
    }
}

TEST_CASE("min_roots small-degree exact values") {
    auto r1 = min_roots(1, Convention::with_multiplicity);
    CHECK(r1.minimum == 1);
    REQUIRE_FALSE(r1.witnesses.empty());
    CHECK(r1.witnesses[0] == "++");
    CHECK(r1.enumerated == 1);

    auto r2 = min_roots(2, Convention::with_multiplicity);
    CHECK(r2.minimum == 2);
    CHECK(r2.enumerated == 2);

    auto r3m = min_roots(3, Convention::with_multiplicity);
    CHECK(r3m.minimum == 3);

    auto r3d = min_roots(3, Convention::distinct);
    CHECK(r3d.minimum == 2);
    REQUIRE_FALSE(r3d.witnesses.empty());
    CHECK(r3d.witnesses[0] == "+--+");

    CHECK_THROWS_AS(min_roots(41, Convention::with_multiplicity), budget_exceeded);
}

TEST_CASE("histograms are complete and consistent") {
    auto dual = scan_reciprocal(6);
    long long total_m = 0, total_d = 0;
    for (const auto& [k, v] : dual.mult.histogram) total_m += v;
    for (const auto& [k, v] : dual.distinct.histogram) total_d += v;
    CHECK(total_m == static_cast<long long>(dual.enumerated));
    CHECK(total_d == static_cast<long long>(dual.enumerated));
    CHECK(dual.mult.histogram.begin()->first == dual.mult.minimum);
    CHECK(dual.distinct.minimum <= dual.mult.minimum);
}

TEST_CASE("parallel scan matches serial scan") {
    for (int N : {5, 9, 12}) {
        auto serial = scan_reciprocal(N, 1);
        auto par = scan_reciprocal(N, 4);
        CHECK(serial.mult.minimum == par.mult.minimum);
        CHECK(serial.mult.histogram == par.mult.histogram);
        CHECK(serial.distinct.minimum == par.distinct.minimum);
        CHECK(serial.distinct.histogram == par.distinct.histogram);
        CHECK(serial.mult.witness_indices == par.mult.witness_indices);
    }
}

TEST_CASE("average_roots exact values") {
    CHECK(average_roots_exhaustive(1) == BigRat(1));
    CHECK(average_roots_exhaustive(3) == BigRat(3));
    for (int N = 1; N <= 12; ++N) {
        BigRat avg = average_roots_exhaustive(N);
        CHECK(avg >= BigRat(N, 4)); // at least N/4 roots on average
    }
}

TEST_CASE("average_roots sampled mode is seeded and sane") {
    auto a = average_roots_sampled(20, 1000, 7);
    auto b = average_roots_sampled(20, 1000, 7);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    CHECK(a.mean >= 5.0); // N/4 on average
}

TEST_CASE("lower bounds at small degree") {
    for (int N = 1; N <= 12; ++N) {
        auto rm = min_roots(N, Convention::with_multiplicity);
        auto rd = min_roots(N, Convention::distinct);
        CHECK(rm.minimum >= 1);
        if (N % 2 == 1 && N >= 3) CHECK(rm.minimum >= 3);
        // For odd degree the half-angle cosine form sees each root twice, so
        // the per-period root count is 2 x distinct; that count stays >= 5
        // from N = 7 on (the with-multiplicity minimum drops to 3 there,
        // witness +-++++-+).
        if (N % 2 == 1 && N >= 7) {
            CHECK(2 * rd.minimum >= 5);
            CHECK(rm.minimum == 3);
        }
    }
}

TEST_CASE("zl table rows are reproducible") {
    auto rows1 = compute_zl_table(8, 2);
    auto rows2 = compute_zl_table(8, 1);
    REQUIRE(rows1.size() == rows2.size());
    for (std::size_t i = 0; i < rows1.size(); ++i) {
        CHECK(rows1[i].mult.minimum == rows2[i].mult.minimum);
        CHECK(rows1[i].mult.histogram == rows2[i].mult.histogram);
        CHECK(rows1[i].distinct.histogram == rows2[i].distinct.histogram);
    }
}
