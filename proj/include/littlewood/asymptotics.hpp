#ifndef LITTLEWOOD_ASYMPTOTICS_HPP
#define LITTLEWOOD_ASYMPTOTICS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "littlewood/errors.hpp"

namespace littlewood {

using Complex = std::complex<double>;

constexpr double kTwoPi = 6.283185307179586476925286766559;

/// e(t) = exp(2 pi i t)
inline Complex e_of(double t) { return std::polar(1.0, kTwoPi * t); }

/// Real frequency with an explicit rationality tag. Rationality is declared,
/// never inferred from the floating-point value.
struct Frequency {
    bool rational = true;
    long long p = 0;
    long long q = 1;
    double value = 0.0;

    static Frequency of_rational(long long p, long long q) {
        if (q <= 0) throw error("rational frequency needs q > 0");
        Frequency f;
        f.rational = true;
        f.p = p;
        f.q = q;
        f.value = static_cast<double>(p) / static_cast<double>(q);
        return f;
    }

    static Frequency of_irrational(double v) {
        Frequency f;
        f.rational = false;
        f.value = v;
        return f;
    }

    bool is_one() const { return rational && p == q; }
    bool is_zero() const { return rational && p == 0; }
};

struct TrigTerm {
    Complex amplitude;
    Frequency freq;
};

enum class TrigForm { symmetric_form, im_form };

/// Finite generalized trigonometric sum. In symmetric form the value is
/// a0 + sum_j (a_j e(rho_j u) + conj(a_j) e(-rho_j u)); in Im form it is
/// Im sum_j b_j e(rho_j u).
struct GeneralizedTrigSum {
    TrigForm form = TrigForm::symmetric_form;
    double a0 = 0.0; // symmetric-form constant
    std::vector<TrigTerm> terms;
    std::vector<std::pair<int, int>> complement_pairs; // declared rho_i + rho_j = 1 (irrational tags)

    double eval(double u) const {
        if (form == TrigForm::symmetric_form) {
            double s = a0;
            for (const auto& t : terms) s += 2.0 * (t.amplitude * e_of(t.freq.value * u)).real();
            return s;
        }
        Complex s(0.0);
        for (const auto& t : terms) s += t.amplitude * e_of(t.freq.value * u);
        return s.imag();
    }

    double max_frequency() const {
        double m = 0.0;
        for (const auto& t : terms) m = std::max(m, std::abs(t.freq.value));
        return m;
    }

    /// Im form -> symmetric form: Im(b e(rho u)) = (b/2i) e(rho u) + conj.
    GeneralizedTrigSum to_symmetric() const {
        if (form == TrigForm::symmetric_form) return *this;
        GeneralizedTrigSum s;
        s.form = TrigForm::symmetric_form;
        s.complement_pairs = complement_pairs;
        const Complex half_i(0.0, -0.5); // 1/(2i)
        for (const auto& t : terms) {
            if (t.freq.is_zero()) s.a0 += t.amplitude.imag();
            else s.terms.push_back({t.amplitude * half_i, t.freq});
        }
        return s;
    }
};

enum class SignChangeOutcome { InfinitelyMany, Inconclusive };

/// Criterion for infinitely many sign changes: the input must be a normalized
/// symmetric form with 0 < rho_1 < ... < rho_l = 1. Yes iff 2|a_l| > |a_0|,
/// or 2|a_l| = |a_0| with some middle a_j nonzero.
inline SignChangeOutcome signchange_criterion(const GeneralizedTrigSum& H) {
    if (H.form != TrigForm::symmetric_form) throw not_normalized("symmetric form required");
    if (H.terms.empty()) throw not_normalized("no oscillatory terms");
    for (std::size_t j = 0; j < H.terms.size(); ++j) {
        const double v = H.terms[j].freq.value;
        if (v <= 0.0 || v > 1.0) throw not_normalized("frequencies must lie in (0, 1]");
        if (j + 1 < H.terms.size() && !(v < H.terms[j + 1].freq.value))
            throw not_normalized("frequencies must be strictly increasing");
    }
    if (!H.terms.back().freq.is_one()) throw not_normalized("top frequency must be the rational 1");
    const double al = std::abs(H.terms.back().amplitude);
    if (al == 0.0) throw not_normalized("top amplitude is zero");
    const double a0 = std::abs(H.a0);
    const double tol = 1e-12 * std::max(1.0, a0);
    if (2.0 * al > a0 + tol) return SignChangeOutcome::InfinitelyMany;
    if (std::abs(2.0 * al - a0) <= tol) {
        for (std::size_t j = 0; j + 1 < H.terms.size(); ++j)
            if (std::abs(H.terms[j].amplitude) > 1e-12) return SignChangeOutcome::InfinitelyMany;
    }
    return SignChangeOutcome::Inconclusive;
}

/// Sign changes of H on a uniform grid over the window [u0, u1], closed
/// cyclically (the last nonzero sign is compared against the first, matching
/// the period-grid convention of the root-count oracle). Monotone
/// nondecreasing in the resolution.
inline long long count_changes(const GeneralizedTrigSum& H, double u0, double u1, std::size_t resolution) {
    if (u1 <= u0) throw error("empty window");
    const double needed = 64.0 * (u1 - u0) * std::max(1.0, H.max_frequency());
    if (static_cast<double>(resolution) < needed)
        throw error("resolution below 64*(u1-u0)*max_frequency");
    long long changes = 0;
    int prev = 0, first = 0;
    for (std::size_t k = 0; k < resolution; ++k) {
        const double u = u0 + (u1 - u0) * static_cast<double>(k) / static_cast<double>(resolution);
        const double v = H.eval(u);
        const int sg = (v > 0.0) - (v < 0.0);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++changes;
        if (first == 0) first = sg;
        prev = sg;
    }
    if (prev != 0 && first != 0 && prev != first) ++changes;
    return changes;
}

struct WeylMoments {
    double mean1 = 0.0;
    double mean2 = 0.0;
    double predicted_limit = 0.0; // limit of mean2 from the irrational part
};

/// Empirical first and second moments of H(theta + m) over m = 1..n, plus the
/// predicted second-moment limit
///   2 [ sum_{Lambda_2} |a_j|^2 + sum_{{i,j} in Lambda_1} |a_i e(theta/2) + conj(a_j) e(-theta/2)|^2 ],
/// where Lambda_1 are the declared complement pairs among irrational
/// frequencies and Lambda_2 the remaining irrationals.
inline WeylMoments weyl_moments(const GeneralizedTrigSum& Hin, double theta, long long n) {
    if (n <= 0) throw error("n must be positive");
    const GeneralizedTrigSum H = Hin.to_symmetric();
    std::vector<bool> paired(H.terms.size(), false);
    for (const auto& [i, j] : H.complement_pairs) {
        if (i < 0 || j < 0 || i >= static_cast<int>(H.terms.size()) || j >= static_cast<int>(H.terms.size()))
            throw untagged_frequency("complement pair index out of range");
        if (H.terms[static_cast<std::size_t>(i)].freq.rational || H.terms[static_cast<std::size_t>(j)].freq.rational)
            throw untagged_frequency("complement pairs must join irrational frequencies");
        if (std::abs(H.terms[static_cast<std::size_t>(i)].freq.value +
                     H.terms[static_cast<std::size_t>(j)].freq.value - 1.0) > 1e-9)
            throw untagged_frequency("declared pair does not sum to 1");
        paired[static_cast<std::size_t>(i)] = paired[static_cast<std::size_t>(j)] = true;
    }

    WeylMoments out;
    double s1 = 0.0, s2 = 0.0;
    for (long long m = 1; m <= n; ++m) {
        const double v = H.eval(theta + static_cast<double>(m));
        s1 += v;
        s2 += v * v;
    }
    out.mean1 = s1 / static_cast<double>(n);
    out.mean2 = s2 / static_cast<double>(n);

    double pred = 0.0;
    for (std::size_t j = 0; j < H.terms.size(); ++j)
        if (!H.terms[j].freq.rational && !paired[j]) pred += std::norm(H.terms[j].amplitude);
    for (const auto& [i, j] : H.complement_pairs) {
        const Complex ai = H.terms[static_cast<std::size_t>(i)].amplitude;
        const Complex aj = H.terms[static_cast<std::size_t>(j)].amplitude;
        pred += std::norm(ai * e_of(theta / 2.0) + std::conj(aj) * e_of(-theta / 2.0));
    }
    out.predicted_limit = 2.0 * pred;
    return out;
}

// ---------------------------------------------------------------------------
// Block families H_N(theta) = Im sum_j B_j^(N)(theta) e(r_j^(N) theta)
// ---------------------------------------------------------------------------

/// One exponential term of a block polynomial; the integer frequency may grow
/// with N as round(scale * N^power) + offset (power < 1 keeps deg B = o(N)).
struct ExpTermSpec {
    Complex coeff;
    double freq_scale = 0.0;
    double freq_power = 0.0;
    long long freq_offset = 0;

    long long freq_at(long long N) const {
        const double k = freq_scale * std::pow(static_cast<double>(N), freq_power);
        return static_cast<long long>(std::llround(k)) + freq_offset;
    }
};

struct FamilyBlock {
    std::vector<ExpTermSpec> terms;
    Frequency rho;          // target ratio of the anchor frequency
    long long r_offset = 0; // r_j(N) = round(rho N) + r_offset

    long long r_at(long long N) const {
        return static_cast<long long>(std::llround(rho.value * static_cast<double>(N))) + r_offset;
    }

    Complex eval_B(long long N, double theta) const {
        Complex s(0.0);
        for (const auto& t : terms) s += t.coeff * e_of(static_cast<double>(t.freq_at(N)) * theta);
        return s;
    }

    long long degree_at(long long N) const {
        long long d = 0;
        for (const auto& t : terms) d = std::max(d, std::llabs(t.freq_at(N)));
        return d;
    }
};

struct FamilySpec {
    std::vector<FamilyBlock> blocks;

    double eval_H(long long N, double theta) const {
        Complex s(0.0);
        for (const auto& b : blocks) s += b.eval_B(N, theta) * e_of(static_cast<double>(b.r_at(N)) * theta);
        return s.imag();
    }

    long long degree_bound(long long N) const {
        long long d = 0;
        for (const auto& b : blocks) d = std::max(d, b.degree_at(N));
        return d;
    }
};

struct LocalProfile {
    std::vector<Complex> b;  // b_j^(N) = B_j(gamma) e(r_j gamma)
    double sup_error = 0.0;  // sup_u |H_N(gamma + u/N) - Im sum b_j e(rho_j u)|
};

/// Finite-N local rescaling profile at gamma over the window (-C, C).
inline LocalProfile local_profile(const FamilySpec& F, long long N, double gamma, double C,
                                  std::size_t grid = 2048) {
    LocalProfile out;
    out.b.reserve(F.blocks.size());
    for (const auto& blk : F.blocks)
        out.b.push_back(blk.eval_B(N, gamma) * e_of(static_cast<double>(blk.r_at(N)) * gamma));
    for (std::size_t k = 0; k <= grid; ++k) {
        const double u = -C + 2.0 * C * static_cast<double>(k) / static_cast<double>(grid);
        const double actual = F.eval_H(N, gamma + u / static_cast<double>(N));
        Complex model(0.0);
        for (std::size_t j = 0; j < F.blocks.size(); ++j)
            model += out.b[j] * e_of(F.blocks[j].rho.value * u);
        out.sup_error = std::max(out.sup_error, std::abs(actual - model.imag()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Oscillation counting for f_N (geometric-kernel form)
// ---------------------------------------------------------------------------

/// Fixed trigonometric polynomial sum c e(k theta) with integer frequencies.
struct ExpPoly {
    std::vector<std::pair<Complex, long long>> terms;

    Complex eval(double theta) const {
        Complex s(0.0);
        for (const auto& [c, k] : terms) s += c * e_of(static_cast<double>(k) * theta);
        return s;
    }

    bool identically_zero() const {
        for (const auto& [c, k] : terms)
            if (std::abs(c) > 0.0) return false;
        return true;
    }
};

struct OscillationReport {
    long long oscillations = 0; // completed -cN -> +cN alternations
    int m_used = 0;
    double window_lo = 0.0;
    double window_hi = 0.0;
    double level = 0.0; // cN
};

/// Largest multiple of D in the open interval (lo, hi).
inline long long largest_multiple_in(long long D, double lo, double hi) {
    long long t = static_cast<long long>(std::floor(hi / static_cast<double>(D))) * D;
    while (static_cast<double>(t) >= hi) t -= D;
    if (static_cast<double>(t) <= lo) throw error("no multiple of D inside the interval");
    return t;
}

/// Counts oscillations of
///   f_N(theta) = Re[ (e(theta D) - 1)^{-1} sum_j B_j(theta)(e(theta r_j) - e(theta r_{j-1})) ]
/// between -cN and +cN near theta = m/D, where m is chosen by the coefficient
/// hypothesis |B_l(m/D)| >= |Im B_1(m/D)| (with the equality refinement).
inline OscillationReport prop1_oscillation(const std::vector<ExpPoly>& B, const std::vector<double>& rho,
                                           long long D, long long N, double c, double window,
                                           std::size_t resolution = 1 << 16) {
    const std::size_t l = B.size();
    if (l == 0 || rho.size() != l) throw error("need l block polynomials and l ratios");
    if (std::abs(rho.back() - 1.0) > 1e-12) throw error("rho_l must be 1");

    // hypothesis scan over m = 0..D-1
    int m_strict = -1, m_equal = -1;
    std::ostringstream report;
    for (int m = 0; m < D; ++m) {
        const double x = static_cast<double>(m) / static_cast<double>(D);
        const double lhs = std::abs(B.back().eval(x));
        const double rhs = std::abs(B.front().eval(x).imag());
        const double tol = 1e-9 * std::max(1.0, rhs);
        if (lhs > rhs + tol) {
            if (m_strict < 0) m_strict = m;
            report << "m=" << m << ": strict |B_l|=" << lhs << " > |Im B_1|=" << rhs << "\n";
        } else if (std::abs(lhs - rhs) <= tol) {
            bool distinct_pair = false;
            for (std::size_t j = 0; j + 1 < l; ++j)
                if (std::abs(B[j + 1].eval(x) - B[j].eval(x)) > 1e-9) distinct_pair = true;
            if (distinct_pair && m_equal < 0) m_equal = m;
            report << "m=" << m << ": equality |B_l|=" << lhs
                   << (distinct_pair ? " with distinct adjacent blocks\n" : " and all adjacent blocks equal\n");
        } else {
            report << "m=" << m << ": fails |B_l|=" << lhs << " < |Im B_1|=" << rhs << "\n";
        }
    }
    const int m = m_strict >= 0 ? m_strict : m_equal;
    if (m < 0) throw hypothesis_fails(report.str());

    std::vector<long long> r(l + 1, 0);
    for (std::size_t j = 1; j <= l; ++j) {
        const double lo = (j == 1 ? 0.0 : rho[j - 2]) * static_cast<double>(N);
        const double hi = rho[j - 1] * static_cast<double>(N);
        r[j] = largest_multiple_in(D, lo, hi);
    }

    OscillationReport rep;
    rep.m_used = m;
    rep.level = c * static_cast<double>(N);
    const double center = static_cast<double>(m) / static_cast<double>(D);
    rep.window_lo = center - window / static_cast<double>(N);
    rep.window_hi = center + window / static_cast<double>(N);

    int state = 0; // +1 after touching +cN, -1 after touching -cN
    for (std::size_t k = 0; k <= resolution; ++k) {
        const double theta = rep.window_lo + (rep.window_hi - rep.window_lo) * static_cast<double>(k) /
                                                 static_cast<double>(resolution);
        const Complex den = e_of(static_cast<double>(D) * theta) - 1.0;
        if (std::abs(den) < 1e-12) continue;
        Complex num(0.0);
        for (std::size_t j = 1; j <= l; ++j)
            num += B[j - 1].eval(theta) *
                   (e_of(static_cast<double>(r[j]) * theta) - e_of(static_cast<double>(r[j - 1]) * theta));
        const double v = (num / den).real();
        if (v >= rep.level) {
            if (state == -1) ++rep.oscillations;
            state = +1;
        } else if (v <= -rep.level) {
            state = -1;
        }
    }
    return rep;
}

struct CancellationReport {
    long long N = 0;
    double max_abs = 0.0; // max |H_N(n/N)| over n in [N]
};

/// Cancellation case: B_l = -B_0 coefficient-wise and all middle blocks zero;
/// then theta = n/N is a root for every n in [N].
inline CancellationReport cancellation_roots(const FamilySpec& F, long long N, double tol = 1e-9) {
    if (F.blocks.size() < 2) throw not_cancellation();
    const FamilyBlock& b0 = F.blocks.front();
    const FamilyBlock& bl = F.blocks.back();
    if (!b0.rho.is_zero() || !bl.rho.is_one() || b0.r_offset != 0 || bl.r_offset != 0) throw not_cancellation();
    for (std::size_t j = 1; j + 1 < F.blocks.size(); ++j)
        for (const auto& t : F.blocks[j].terms)
            if (std::abs(t.coeff) > 0.0) throw not_cancellation();
    // coefficient-wise: same frequencies, negated coefficients
    auto canon = [N](const FamilyBlock& b) {
        std::vector<std::pair<long long, Complex>> v;
        for (const auto& t : b.terms)
            if (std::abs(t.coeff) > 0.0) v.emplace_back(t.freq_at(N), t.coeff);
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return v;
    };
    const auto c0 = canon(b0), cl = canon(bl);
    if (c0.size() != cl.size()) throw not_cancellation();
    for (std::size_t i = 0; i < c0.size(); ++i)
        if (c0[i].first != cl[i].first || std::abs(c0[i].second + cl[i].second) > 1e-12)
            throw not_cancellation();

    CancellationReport rep;
    rep.N = N;
    for (long long n = 1; n <= N; ++n)
        rep.max_abs = std::max(rep.max_abs, std::abs(F.eval_H(N, static_cast<double>(n) / static_cast<double>(N))));
    if (rep.max_abs > tol) throw error("cancellation roots exceed tolerance: " + std::to_string(rep.max_abs));
    return rep;
}

// ---------------------------------------------------------------------------
// Parseval pattern checks
// ---------------------------------------------------------------------------

enum class PatternCase { even_case, odd_case };

struct ParsevalCheck {
    long long sum_sq = 0;   // sum_m |A(zeta^m)|^2, evaluated exactly as D * sum eps^2
    long long expected = 0; // D^2 (even case) or D^2/2 (odd case)
    long long im_sum = 0;   // sum_m |Im A(zeta^m)|^2 = D * sum ((eps_m - eps_{D-m})/2)^2
    long long im_bound = 0; // D(D-1) or D^2/2

    bool sum_ok() const { return sum_sq == expected; }
    bool im_ok() const { return im_sum <= im_bound; }
};

inline ParsevalCheck parseval_pattern_checks(const std::vector<long long>& eps, PatternCase pc) {
    const long long D = static_cast<long long>(eps.size());
    if (D < 1) throw bad_support("empty pattern");
    if (pc == PatternCase::even_case) {
        for (long long v : eps)
            if (v != 1 && v != -1) throw bad_support("even case requires all entries +-1");
    } else {
        if (D % 2 != 0) throw bad_support("odd case requires even D");
        for (std::size_t m = 0; m < eps.size(); ++m) {
            if (m % 2 == 0 && eps[m] != 0) throw bad_support("odd case requires zeros at even indices");
            if (m % 2 == 1 && eps[m] != 1 && eps[m] != -1) throw bad_support("odd case requires +-1 at odd indices");
        }
    }
    ParsevalCheck out;
    long long ssq = 0;
    for (long long v : eps) ssq += v * v;
    out.sum_sq = D * ssq;
    out.expected = (pc == PatternCase::even_case) ? D * D : D * D / 2;
    long long im = 0;
    for (long long m = 1; m < D; ++m) {
        const long long diff = eps[static_cast<std::size_t>(m)] - eps[static_cast<std::size_t>(D - m)];
        im += (diff / 2) * (diff / 2);
    }
    out.im_sum = D * im;
    out.im_bound = (pc == PatternCase::even_case) ? D * (D - 1) : D * D / 2;
    return out;
}

} // namespace littlewood

#endif
