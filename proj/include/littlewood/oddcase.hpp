#ifndef LITTLEWOOD_ODDCASE_HPP
#define LITTLEWOOD_ODDCASE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <future>
#include <string>
#include <vector>

#include "littlewood/bigint.hpp"
#include "littlewood/errors.hpp"

namespace littlewood {

/// Antisymmetric coefficient pattern of even period D: entries in {-1, 0, 1},
/// zero at even indices, eps_m = -eps_{D-m}, not identically zero. D = 2 is
/// impossible (antisymmetry forces the zero pattern).
struct OddPattern {
    int D = 0;
    std::vector<int> eps;

    OddPattern(int period, std::vector<int> e) : D(period), eps(std::move(e)) {
        if (D < 2 || D % 2 != 0) throw invalid_pattern("period must be even and >= 2");
        if (eps.size() != static_cast<std::size_t>(D)) throw invalid_pattern("pattern length must equal D");
        bool nonzero = false;
        for (int m = 0; m < D; ++m) {
            const int v = eps[static_cast<std::size_t>(m)];
            if (v < -1 || v > 1) throw invalid_pattern("entries must lie in {-1, 0, 1}");
            if (m % 2 == 0 && v != 0) throw invalid_pattern("even indices must be zero");
            const int w = eps[static_cast<std::size_t>((D - m) % D)];
            if (v != -w) throw invalid_pattern("pattern must satisfy eps_m = -eps_{D-m}");
            nonzero = nonzero || v != 0;
        }
        if (!nonzero) throw invalid_pattern("pattern is identically zero");
    }
};

/// sum_m s_m sin(m t) with integer coefficients (index 0 unused).
struct SinePoly {
    std::vector<long long> s;

    double eval(double t) const {
        double r = 0.0;
        for (std::size_t m = 1; m < s.size(); ++m)
            if (s[m] != 0) r += static_cast<double>(s[m]) * std::sin(static_cast<double>(m) * t);
        return r;
    }

    bool identically_zero() const {
        for (std::size_t m = 1; m < s.size(); ++m)
            if (s[m] != 0) return false;
        return true;
    }
};

/// a(t) = 2 sum_{m=0}^{D/2} eps_m sin(mt); real, odd, 2pi-periodic.
inline SinePoly build_a(const OddPattern& pat) {
    SinePoly a;
    a.s.assign(static_cast<std::size_t>(pat.D / 2) + 1, 0);
    for (int m = 1; m <= pat.D / 2; ++m) a.s[static_cast<std::size_t>(m)] = 2 * pat.eps[static_cast<std::size_t>(m)];
    return a;
}

/// One term delta_m (sin(mt) - sin((m - p_m D) t)); vanishes at every
/// gamma_r = 2 pi r / D.
struct DiffTerm {
    long long m = 0;
    long long p = 0;
    long long delta = 0;
};

struct DifferenceSinePoly {
    int D = 0;
    std::vector<DiffTerm> terms;

    double eval(double t) const {
        double r = 0.0;
        for (const auto& tm : terms) {
            const double lo = static_cast<double>(tm.m - tm.p * D);
            r += static_cast<double>(tm.delta) *
                 (std::sin(static_cast<double>(tm.m) * t) - std::sin(lo * t));
        }
        return r;
    }

    bool identically_zero() const { return terms.empty(); }

    long long max_frequency() const {
        long long f = 1;
        for (const auto& tm : terms) f = std::max({f, std::llabs(tm.m), std::llabs(tm.m - tm.p * D)});
        return f;
    }
};

/// Builds the difference polynomial with delta_m = -2 eps_{m mod D}; terms
/// whose delta vanishes are identically zero and are dropped.
inline DifferenceSinePoly make_difference(const OddPattern& pat,
                                          const std::vector<std::pair<long long, long long>>& mp) {
    DifferenceSinePoly s;
    s.D = pat.D;
    for (const auto& [m, p] : mp) {
        if (m < 1 || p < 1) throw error("terms need m >= 1 and p >= 1");
        if (std::llabs(m) < std::llabs(m - p * pat.D)) throw error("|m| >= |m - pD| violated");
        const long long delta = -2 * pat.eps[static_cast<std::size_t>(m % pat.D)];
        if (delta != 0) s.terms.push_back({m, p, delta});
    }
    return s;
}

// ---------------------------------------------------------------------------
// Anchor-group decomposition s_Lambda(t) = Im sum_j C_j(t) e^{i n_j t}
// ---------------------------------------------------------------------------

struct CjGroup {
    long long anchor = 0; // n_j
    std::vector<DiffTerm> terms;
};

struct CjDecomposition {
    int D = 0;
    long long p = 0;
    double gap_threshold = 8.0;
    std::vector<CjGroup> groups;
};

namespace detail {

inline long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

/// largest multiple of D strictly less than x
inline long long largest_multiple_below(long long D, long long x) {
    return D * floor_div(x - 1, D);
}

} // namespace detail

inline std::complex<double> eval_Cj(const CjGroup& g, int D, double t) {
    std::complex<double> s(0.0);
    for (const auto& tm : g.terms) {
        const double hi = static_cast<double>(tm.m - g.anchor);
        const double lo = static_cast<double>(tm.m - tm.p * D - g.anchor);
        s += static_cast<double>(tm.delta) *
             (std::polar(1.0, hi * t) - std::polar(1.0, lo * t));
    }
    return s;
}

inline double eval_decomposition(const CjDecomposition& dec, double t) {
    std::complex<double> s(0.0);
    for (const auto& g : dec.groups)
        s += eval_Cj(g, dec.D, t) * std::polar(1.0, static_cast<double>(g.anchor) * t);
    return s.imag();
}

/// Groups terms whose frequencies differ by at most T*p and anchors each group
/// at the largest multiple of D below (smallest m) - pD.
inline CjDecomposition group_and_decompose(const DifferenceSinePoly& s, long long p, double T = 8.0) {
    if (p < 1) throw error("scale p must be >= 1");
    CjDecomposition dec;
    dec.D = s.D;
    dec.p = p;
    dec.gap_threshold = T;
    std::vector<DiffTerm> sorted = s.terms;
    std::sort(sorted.begin(), sorted.end(), [](const DiffTerm& a, const DiffTerm& b) { return a.m < b.m; });
    for (const auto& tm : sorted) {
        const bool fresh = dec.groups.empty() ||
                           static_cast<double>(tm.m - dec.groups.back().terms.back().m) >
                               T * static_cast<double>(p);
        if (fresh) {
            CjGroup g;
            g.anchor = detail::largest_multiple_below(s.D, tm.m - p * s.D);
            dec.groups.push_back(std::move(g));
        }
        dec.groups.back().terms.push_back(tm);
    }
    return dec;
}

/// Exact identity sum_r a(gamma_r) Im(C_j)''(gamma_r)
///               = 2 D^2 sum_{m in group} p_m (2m - 2 n_j - p_m D).
/// Both sides are computed over exact integers; the left side reduces to the
/// orthogonality sum_r sin(2pi a r / D) sin(2pi b r / D) = (D/2)([a=b]-[a=-b])
/// on residues mod D.
inline std::pair<BigInt, BigInt> derivative_parseval(const OddPattern& pat, const CjGroup& group) {
    const int D = pat.D;
    for (const auto& tm : group.terms) {
        const long long expected = -2 * pat.eps[static_cast<std::size_t>(tm.m % D)];
        if (tm.delta != expected) throw delta_mismatch("term delta does not match -2 eps_{m mod D}");
    }
    // a(gamma_r) = sum_k c_k sin(2 pi k r / D)
    std::vector<BigInt> c(static_cast<std::size_t>(D), BigInt(0));
    for (int m = 1; m <= D / 2; ++m) c[static_cast<std::size_t>(m)] += 2 * pat.eps[static_cast<std::size_t>(m)];
    // Im(C_j)''(gamma_r) = sum_k d_k sin(2 pi k r / D)
    std::vector<BigInt> d(static_cast<std::size_t>(D), BigInt(0));
    BigInt rhs(0);
    for (const auto& tm : group.terms) {
        const BigInt factor = BigInt(tm.p) * D * (2 * tm.m - 2 * group.anchor - tm.p * D);
        d[static_cast<std::size_t>(tm.m % D)] += -BigInt(tm.delta) * factor;
        rhs += BigInt(tm.p) * (2 * tm.m - 2 * group.anchor - tm.p * D);
    }
    rhs *= 2 * BigInt(D) * D;
    BigInt lhs(0);
    for (int k = 0; k < D; ++k) {
        lhs += c[static_cast<std::size_t>(k)] * d[static_cast<std::size_t>(k)];
        lhs -= c[static_cast<std::size_t>(k)] * d[static_cast<std::size_t>((D - k) % D)];
    }
    lhs *= BigInt(D) / 2;
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// kappa gap search
// ---------------------------------------------------------------------------

enum class KappaRegion { full_period, around_best_r };

struct RDiagnostic {
    int r = 0;
    double a_value = 0.0;
    double c1_second_derivative = 0.0; // Im(C_1)''(gamma_r)
    bool sign_match = false;
};

struct KappaReport {
    double gamma_star = 0.0;
    double gap = 0.0; // |a + s1|(gamma*) - |a - s2|(gamma*)
    int best_r = 0;
    std::vector<RDiagnostic> diagnostics;
};

/// Maximizes |a + s1| - |a - s2| on a grid, either over a full period or over
/// the interval (gamma_r - c/p, gamma_r + c/p) around the best residue point.
inline KappaReport kappa_gap_search(const SinePoly& a, const DifferenceSinePoly& s1,
                                    const DifferenceSinePoly& s2, KappaRegion region,
                                    std::size_t resolution, double c = 0.5) {
    if (s1.identically_zero() && s2.identically_zero()) throw both_zero();
    const int D = s1.terms.empty() ? s2.D : s1.D;

    // combined truncated polynomial and its leading group, for the residue scan
    DifferenceSinePoly all;
    all.D = D;
    all.terms = s1.terms;
    all.terms.insert(all.terms.end(), s2.terms.begin(), s2.terms.end());
    long long p = 1;
    for (const auto& tm : all.terms) p = std::max(p, tm.p);
    const CjDecomposition dec = group_and_decompose(all, p);

    KappaReport rep;
    double best_score = -1e300;
    for (int r = 0; r < D; ++r) {
        const double gr = 2.0 * 3.14159265358979323846 * r / D;
        RDiagnostic diag;
        diag.r = r;
        diag.a_value = a.eval(gr);
        double cpp = 0.0;
        if (!dec.groups.empty()) {
            const CjGroup& g = dec.groups.front();
            for (const auto& tm : g.terms) {
                const double hi = static_cast<double>(tm.m - g.anchor);
                const double lo = static_cast<double>(tm.m - tm.p * D - g.anchor);
                cpp += static_cast<double>(tm.delta) *
                       (-hi * hi * std::sin(hi * gr) + lo * lo * std::sin(lo * gr));
            }
        }
        diag.c1_second_derivative = cpp;
        diag.sign_match = diag.a_value * cpp > 0.0;
        const double score = (diag.sign_match ? 1e6 : 1.0) * std::abs(diag.a_value);
        if (score > best_score) {
            best_score = score;
            rep.best_r = r;
        }
        rep.diagnostics.push_back(diag);
    }

    double lo = 0.0, hi = 2.0 * 3.14159265358979323846;
    if (region == KappaRegion::around_best_r) {
        const double gr = 2.0 * 3.14159265358979323846 * rep.best_r / D;
        lo = gr - c / static_cast<double>(p);
        hi = gr + c / static_cast<double>(p);
    }
    rep.gap = -1e300;
    for (std::size_t k = 0; k <= resolution; ++k) {
        const double t = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(resolution);
        const double av = a.eval(t);
        const double gap = std::abs(av + s1.eval(t)) - std::abs(av - s2.eval(t));
        if (gap > rep.gap) {
            rep.gap = gap;
            rep.gamma_star = t;
        }
    }
    return rep;
}

struct TruncationCheck {
    double sup = 0.0;   // sup over (gamma_r - c/p, gamma_r + c/p) of |s|
    double bound = 0.0; // 2 |Lambda| D c
};

/// |sin a - sin b| = |2 cos((a+b)/2) sin((a-b)/2)| gives |s| <= 2 |Lambda| D c
/// on the shrinking interval around gamma_r.
inline TruncationCheck truncation_bound_check(const DifferenceSinePoly& s, double c, long long p, int r) {
    if (p < 1) throw error("p must be >= 1");
    TruncationCheck out;
    out.bound = 2.0 * static_cast<double>(s.terms.size()) * static_cast<double>(s.D) * c;
    const double gr = 2.0 * 3.14159265358979323846 * r / std::max(1, s.D);
    const double lo = gr - c / static_cast<double>(p), hi = gr + c / static_cast<double>(p);
    const std::size_t grid = 4096;
    for (std::size_t k = 0; k <= grid; ++k) {
        const double t = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(grid);
        out.sup = std::max(out.sup, std::abs(s.eval(t)));
    }
    return out;
}

struct IntervalMoments {
    double first = 0.0;
    double second = 0.0;
    double predicted_second = 0.0; // |I| * (1/2) sum_j |C_j(gamma)|^2
};

/// Composite-Simpson moments of s_Lambda over I, with at least 64 panels per
/// shortest oscillation.
inline IntervalMoments interval_moments(const CjDecomposition& dec, double lo, double hi) {
    if (hi <= lo) throw error("empty interval");
    long long maxfreq = 1;
    for (const auto& g : dec.groups)
        for (const auto& tm : g.terms) maxfreq = std::max({maxfreq, std::llabs(tm.m), std::llabs(tm.m - tm.p * dec.D)});
    const double shortest = 2.0 * 3.14159265358979323846 / static_cast<double>(maxfreq);
    std::size_t panels = static_cast<std::size_t>(std::ceil(64.0 * (hi - lo) / shortest));
    panels = std::max<std::size_t>(panels, 128);
    if (panels % 2 == 1) ++panels;

    double s1 = 0.0, s2 = 0.0;
    const double h = (hi - lo) / static_cast<double>(panels);
    for (std::size_t k = 0; k <= panels; ++k) {
        const double t = lo + h * static_cast<double>(k);
        const double v = eval_decomposition(dec, t);
        const double w = (k == 0 || k == panels) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
        s1 += w * v;
        s2 += w * v * v;
    }
    IntervalMoments out;
    out.first = s1 * h / 3.0;
    out.second = s2 * h / 3.0;
    const double gamma = (lo + hi) / 2.0;
    double amp = 0.0;
    for (const auto& g : dec.groups) amp += std::norm(eval_Cj(g, dec.D, gamma));
    out.predicted_second = (hi - lo) * 0.5 * amp;
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force probe of the kappa(k) question
// ---------------------------------------------------------------------------

struct ProbeSine {
    std::vector<std::pair<int, int>> terms; // (frequency, sign)
};

struct ProbeResult {
    double kappa = 0.0;
    ProbeSine s1, s2;
    double gamma = 0.0; // maximizer for the minimizing pair
};

namespace detail {

inline void enumerate_probe_classes(int k, int M, std::vector<ProbeSine>& out) {
    // subsets of {1..M} of size 1..k; first sign fixed +1 (|s| classes)
    std::vector<int> subset;
    auto rec = [&](auto&& self, int next, int remaining) -> void {
        if (!subset.empty()) {
            const std::size_t signs = 1ULL << (subset.size() - 1);
            for (std::size_t mask = 0; mask < signs; ++mask) {
                ProbeSine s;
                for (std::size_t i = 0; i < subset.size(); ++i)
                    s.terms.emplace_back(subset[i], i == 0 ? 1 : ((mask >> (i - 1)) & 1 ? -1 : 1));
                out.push_back(std::move(s));
            }
        }
        if (remaining == 0) return;
        for (int n = next; n <= M; ++n) {
            subset.push_back(n);
            self(self, n + 1, remaining - 1);
            subset.pop_back();
        }
    };
    rec(rec, 1, k);
}

} // namespace detail

/// Minimum over ordered pairs of distinct sine polynomials (distinct as
/// unsigned functions: pairs s2 = +-s1 are excluded since their absolute
/// values coincide identically) of max over a full period of |s1| - |s2|.
inline ProbeResult problem2_probe(int k, int M, std::size_t resolution, int jobs = 1) {
    if (k < 1 || k > 3 || M < 1 || M > 30) throw budget_exceeded("probe budget is k <= 3, M <= 30");
    if (resolution < 64 * static_cast<std::size_t>(M)) throw error("probe resolution too small");
    std::vector<ProbeSine> classes;
    detail::enumerate_probe_classes(k, M, classes);

    // sin(2 pi n g / res) lookup
    std::vector<double> table(resolution);
    for (std::size_t g = 0; g < resolution; ++g)
        table[g] = std::sin(2.0 * 3.14159265358979323846 * static_cast<double>(g) / static_cast<double>(resolution));
    auto value = [&](const ProbeSine& s, std::size_t g) {
        double v = 0.0;
        for (const auto& [n, sg] : s.terms)
            v += sg * table[(static_cast<std::size_t>(n) * g) % resolution];
        return std::abs(v);
    };

    struct Best {
        double kappa = 1e300;
        std::size_t i = 0, j = 0;
        double gamma = 0.0;
    };
    auto scan = [&](std::size_t ilo, std::size_t ihi, double cap) {
        Best best;
        best.kappa = cap;
        for (std::size_t i = ilo; i < ihi; ++i) {
            for (std::size_t j = 0; j < classes.size(); ++j) {
                if (i == j) continue;
                double mx = -1e300;
                double arg = 0.0;
                for (std::size_t g = 0; g < resolution; ++g) {
                    const double gap = value(classes[i], g) - value(classes[j], g);
                    if (gap > mx) {
                        mx = gap;
                        arg = 2.0 * 3.14159265358979323846 * static_cast<double>(g) / static_cast<double>(resolution);
                        if (mx > best.kappa) break; // cannot improve the minimum
                    }
                }
                if (mx < best.kappa || (mx == best.kappa && std::make_pair(i, j) < std::make_pair(best.i, best.j))) {
                    best.kappa = mx;
                    best.i = i;
                    best.j = j;
                    best.gamma = arg;
                }
            }
        }
        return best;
    };

    Best best;
    if (jobs <= 1 || classes.size() < 64) {
        best = scan(0, classes.size(), 1e300);
    } else {
        const std::size_t shards = static_cast<std::size_t>(jobs);
        std::vector<std::future<Best>> futs;
        const std::size_t per = (classes.size() + shards - 1) / shards;
        for (std::size_t s = 0; s < shards; ++s) {
            const std::size_t lo = s * per, hi = std::min(classes.size(), lo + per);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, [&, lo, hi]() { return scan(lo, hi, 1e300); }));
        }
        best.kappa = 1e300;
        for (auto& f : futs) {
            Best b = f.get();
            if (b.kappa < best.kappa ||
                (b.kappa == best.kappa && std::make_pair(b.i, b.j) < std::make_pair(best.i, best.j)))
                best = b;
        }
    }

    ProbeResult out;
    out.kappa = best.kappa;
    out.s1 = classes[best.i];
    out.s2 = classes[best.j];
    out.gamma = best.gamma;
    return out;
}

} // namespace littlewood

#endif
