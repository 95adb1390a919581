#ifndef LITTLEWOOD_ENUMSEARCH_HPP
#define LITTLEWOOD_ENUMSEARCH_HPP

#include <chrono>
#include <future>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "littlewood/rootcount.hpp"

namespace littlewood {

enum class Convention { with_multiplicity, distinct };

inline const char* convention_name(Convention c) {
    return c == Convention::with_multiplicity ? "mult" : "distinct";
}

constexpr int kDefaultSearchBudget = 40;
constexpr std::size_t kMaxWitnesses = 32;

/// Number of canonical representatives of reciprocal degree-N Littlewood
/// polynomials modulo global negation: the upper half is free, a_N is pinned
/// to +1.
inline unsigned long long reciprocal_count(int N) {
    return 1ULL << (N / 2);
}

/// k-th canonical representative. Bits of k, most significant first over a
/// width-floor(N/2) window, drive a_{ceil(N/2)} .. a_{N-1}; bit 0 means '+'.
inline LittlewoodPoly canonical_reciprocal(int N, unsigned long long k) {
    std::vector<int> c(static_cast<std::size_t>(N) + 1, 1);
    const int width = N / 2;
    const int first_free = (N + 1) / 2;
    for (int i = 0; i < width; ++i) {
        const int bit = static_cast<int>((k >> (width - 1 - i)) & 1ULL);
        const int v = bit ? -1 : 1;
        c[static_cast<std::size_t>(first_free + i)] = v;
        c[static_cast<std::size_t>(N - (first_free + i))] = v;
    }
    return LittlewoodPoly(std::move(c));
}

inline std::vector<LittlewoodPoly> enumerate_reciprocal(int N) {
    if (N < 1) throw error("enumerate_reciprocal requires N >= 1");
    std::vector<LittlewoodPoly> out;
    const unsigned long long total = reciprocal_count(N);
    out.reserve(total);
    for (unsigned long long k = 0; k < total; ++k) out.push_back(canonical_reciprocal(N, k));
    return out;
}

struct ConventionTally {
    long long minimum = -1;
    std::map<long long, long long> histogram;
    std::vector<unsigned long long> witness_indices; // capped at kMaxWitnesses

    void add(long long value, unsigned long long index) {
        ++histogram[value];
        if (minimum < 0 || value < minimum) {
            minimum = value;
            witness_indices.assign(1, index);
        } else if (value == minimum && witness_indices.size() < kMaxWitnesses) {
            witness_indices.push_back(index);
        }
    }

    void merge(const ConventionTally& o) {
        for (const auto& [k, v] : o.histogram) histogram[k] += v;
        if (o.minimum >= 0 && (minimum < 0 || o.minimum < minimum)) {
            minimum = o.minimum;
            witness_indices = o.witness_indices;
        } else if (o.minimum == minimum) {
            for (auto idx : o.witness_indices) {
                if (witness_indices.size() >= kMaxWitnesses) break;
                witness_indices.push_back(idx);
            }
        }
    }
};

struct DualSearchResult {
    int degree = 0;
    unsigned long long enumerated = 0;
    double wall_time_s = 0.0;
    ConventionTally mult;
    ConventionTally distinct;

    const ConventionTally& tally(Convention c) const {
        return c == Convention::with_multiplicity ? mult : distinct;
    }
};

/// Spec-facing view of one convention of a dual scan.
struct SearchResult {
    int degree;
    Convention convention;
    long long minimum;
    std::map<long long, long long> histogram;
    std::vector<std::string> witnesses;
    unsigned long long enumerated;
    double wall_time_s;
};

namespace detail {

inline ConventionTally scan_range_mult(int N, unsigned long long lo, unsigned long long hi,
                                       ConventionTally& distinct_out) {
    ConventionTally mult;
    for (unsigned long long k = lo; k < hi; ++k) {
        const ZCount z = count_unimodular(canonical_reciprocal(N, k));
        mult.add(z.with_multiplicity, k);
        distinct_out.add(z.distinct, k);
    }
    return mult;
}

} // namespace detail

/// Exhaustive dual census over all canonical representatives of degree N.
/// One Sturm run per polynomial yields both conventions.
inline DualSearchResult scan_reciprocal(int N, int jobs = 1, int budget = kDefaultSearchBudget) {
    if (N < 1) throw error("degree must be >= 1");
    if (N > budget) throw budget_exceeded("degree " + std::to_string(N) + " exceeds budget " + std::to_string(budget));
    const auto t0 = std::chrono::steady_clock::now();
    DualSearchResult res;
    res.degree = N;
    res.enumerated = reciprocal_count(N);

    int prefix = 0;
    while ((1 << prefix) < jobs) ++prefix;
    while (prefix > 0 && (1ULL << prefix) > res.enumerated) --prefix;
    const unsigned long long shards = 1ULL << prefix;
    const unsigned long long per = res.enumerated / shards;

    if (shards <= 1) {
        res.mult = detail::scan_range_mult(N, 0, res.enumerated, res.distinct);
    } else {
        std::vector<std::future<std::pair<ConventionTally, ConventionTally>>> futs;
        futs.reserve(shards);
        for (unsigned long long s = 0; s < shards; ++s) {
            const unsigned long long lo = s * per;
            const unsigned long long hi = (s + 1 == shards) ? res.enumerated : lo + per;
            futs.push_back(std::async(std::launch::async, [N, lo, hi]() {
                ConventionTally dist;
                ConventionTally mult = detail::scan_range_mult(N, lo, hi, dist);
                return std::make_pair(std::move(mult), std::move(dist));
            }));
        }
        for (auto& f : futs) {
            auto [m, d] = f.get();
            res.mult.merge(m);
            res.distinct.merge(d);
        }
    }
    res.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

inline SearchResult select_result(const DualSearchResult& dual, Convention c) {
    const ConventionTally& t = dual.tally(c);
    SearchResult r;
    r.degree = dual.degree;
    r.convention = c;
    r.minimum = t.minimum;
    r.histogram = t.histogram;
    for (auto idx : t.witness_indices) r.witnesses.push_back(to_sign_string(canonical_reciprocal(dual.degree, idx)));
    r.enumerated = dual.enumerated;
    r.wall_time_s = dual.wall_time_s;
    return r;
}

/// Exact minimum of the unimodular root count over reciprocal degree-N
/// Littlewood polynomials under the chosen convention.
inline SearchResult min_roots(int N, Convention convention, int jobs = 1, int budget = kDefaultSearchBudget) {
    return select_result(scan_reciprocal(N, jobs, budget), convention);
}

/// Exact mean of the with-multiplicity root count over canonical
/// representatives.
inline BigRat average_roots_exhaustive(int N, int jobs = 1, int budget = kDefaultSearchBudget) {
    const DualSearchResult dual = scan_reciprocal(N, jobs, budget);
    BigInt total(0);
    for (const auto& [value, count] : dual.mult.histogram) total += BigInt(value) * BigInt(count);
    return BigRat(total, BigInt(dual.enumerated));
}

struct SampledAverage {
    double mean = 0.0;
    double std_error = 0.0;
    unsigned long long samples = 0;
};

inline SampledAverage average_roots_sampled(int N, unsigned long long k, std::uint64_t seed) {
    if (N < 1) throw error("degree must be >= 1");
    if (k == 0) throw error("sample count must be positive");
    std::mt19937_64 rng(seed);
    const unsigned long long total = reciprocal_count(N);
    double sum = 0.0, sumsq = 0.0;
    for (unsigned long long i = 0; i < k; ++i) {
        const unsigned long long idx = rng() % total;
        const ZCount z = count_unimodular(canonical_reciprocal(N, idx));
        const double v = static_cast<double>(z.with_multiplicity);
        sum += v;
        sumsq += v * v;
    }
    SampledAverage out;
    out.samples = k;
    out.mean = sum / static_cast<double>(k);
    const double var = (k > 1) ? (sumsq - sum * sum / static_cast<double>(k)) / static_cast<double>(k - 1) : 0.0;
    out.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(k));
    return out;
}

/// Rows of the Z_L table; persistence lives with the JSON layer.
inline std::vector<DualSearchResult> compute_zl_table(int N_max, int jobs = 1, int budget = kDefaultSearchBudget) {
    if (N_max < 1) throw error("N_max must be >= 1");
    if (N_max > budget) throw budget_exceeded("N_max exceeds budget");
    std::vector<DualSearchResult> rows;
    rows.reserve(static_cast<std::size_t>(N_max));
    for (int N = 1; N <= N_max; ++N) rows.push_back(scan_reciprocal(N, jobs, budget));
    return rows;
}

} // namespace littlewood

#endif
