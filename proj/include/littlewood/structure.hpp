#ifndef LITTLEWOOD_STRUCTURE_HPP
#define LITTLEWOOD_STRUCTURE_HPP

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "littlewood/int_poly.hpp"

namespace littlewood {

/// One maximal interval [begin, end) on which the sequence is D-periodic.
/// pattern is indexed by the global residue n mod D; residues that do not
/// occur inside the block stay 0.
struct Block {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::vector<long long> pattern;
};

struct BlockDecomposition {
    std::size_t period = 1;
    bool aligned = false;
    std::vector<Block> blocks;

    std::size_t block_count() const { return blocks.size(); }
};

namespace detail {

// first index t >= from with seq[t] != seq[t-D], or len if none
inline std::vector<std::size_t> mismatch_table(const std::vector<long long>& seq, std::size_t D) {
    const std::size_t len = seq.size();
    std::vector<std::size_t> nextbad(len + 1, len);
    for (std::size_t n = len; n-- > 0;) {
        nextbad[n] = (n >= D && seq[n] != seq[n - D]) ? n : nextbad[n + 1];
    }
    return nextbad;
}

inline std::size_t greedy_extent(const std::vector<std::size_t>& nextbad, std::size_t len,
                                 std::size_t j, std::size_t D) {
    if (j + D >= len) return len;
    return nextbad[j + D];
}

inline std::vector<long long> block_pattern(const std::vector<long long>& seq, std::size_t D,
                                            std::size_t begin, std::size_t end) {
    std::vector<long long> pat(D, 0);
    for (std::size_t n = begin; n < end && n < begin + D; ++n) pat[n % D] = seq[n];
    return pat;
}

} // namespace detail

/// Greedy maximal-extension partition into D-periodic blocks. In aligned mode
/// every block start is a multiple of D (the final block absorbs the tail).
/// Greedy is optimal here because admissible blocks are order-constrained
/// intervals; min_blocks_dp provides the independent check.
inline BlockDecomposition decompose(const std::vector<long long>& seq, std::size_t D, bool aligned) {
    if (D < 1) throw error("period must be >= 1");
    if (seq.empty()) throw error("sequence must be nonempty");
    const std::size_t len = seq.size();
    const auto nextbad = detail::mismatch_table(seq, D);
    BlockDecomposition dec;
    dec.period = D;
    dec.aligned = aligned;
    std::size_t j = 0;
    while (j < len) {
        std::size_t e = detail::greedy_extent(nextbad, len, j, D);
        if (aligned && e < len) {
            e = D * (e / D);
        }
        dec.blocks.push_back({j, e, detail::block_pattern(seq, D, j, e)});
        j = e;
    }
    return dec;
}

/// Minimum number of blocks over all admissible partitions, by dynamic
/// programming. Independent reference for the greedy decomposition.
inline std::size_t min_blocks_dp(const std::vector<long long>& seq, std::size_t D, bool aligned) {
    if (D < 1) throw error("period must be >= 1");
    if (seq.empty()) throw error("sequence must be nonempty");
    const std::size_t len = seq.size();
    const auto nextbad = detail::mismatch_table(seq, D);
    const std::size_t inf = std::numeric_limits<std::size_t>::max() / 2;
    std::vector<std::size_t> dp(len + 1, inf);
    dp[0] = 0;
    auto start_ok = [&](std::size_t j) { return !aligned || j % D == 0; };
    auto end_ok = [&](std::size_t i) { return !aligned || i % D == 0 || i == len; };
    for (std::size_t j = 0; j < len; ++j) {
        if (dp[j] >= inf || !start_ok(j)) continue;
        const std::size_t emax = detail::greedy_extent(nextbad, len, j, D);
        for (std::size_t i = j + 1; i <= emax; ++i) {
            if (!end_ok(i)) continue;
            if (dp[j] + 1 < dp[i]) dp[i] = dp[j] + 1;
        }
    }
    return dp[len];
}

/// L(D) for D = 1..D_max using the aligned decomposition.
inline std::vector<std::pair<std::size_t, std::size_t>> period_profile(const std::vector<long long>& seq,
                                                                       std::size_t D_max) {
    if (D_max < 1) throw error("D_max must be >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(D_max);
    for (std::size_t D = 1; D <= D_max; ++D)
        out.emplace_back(D, decompose(seq, D, true).block_count());
    return out;
}

/// Geometric-series form: Q(z)(z^D-1) = sum_j A_j(z)(z^{r_j} - z^{r_{j-1}})
/// + E(z)(z^D-1), an exact polynomial identity.
struct GeometricForm {
    std::size_t period = 1;
    std::vector<std::size_t> breakpoints; // r_0 = 0 <= ... <= r_L, multiples of D
    std::vector<IntPoly> patterns;        // A_j for region (r_{j-1}, r_j], degree < D
    IntPoly residual;
    std::size_t residual_terms = 0;
};

inline GeometricForm to_geometric(const BlockDecomposition& dec, const std::vector<long long>& seq) {
    if (!dec.aligned) throw not_aligned();
    const std::size_t D = dec.period;
    const std::size_t len = seq.size();
    GeometricForm form;
    form.period = D;
    form.breakpoints.push_back(0);

    std::vector<BigInt> qc(len);
    for (std::size_t i = 0; i < len; ++i) qc[i] = seq[i];
    const IntPoly Q(std::move(qc));

    IntPoly covered;
    std::size_t prev = 0;
    for (const auto& blk : dec.blocks) {
        const std::size_t r = (blk.end == len) ? D * (len / D) : blk.end;
        if (r <= prev) continue;
        std::vector<BigInt> pat(D, BigInt(0));
        for (std::size_t m = 0; m < D; ++m) pat[m] = blk.pattern[m];
        IntPoly A(std::move(pat));
        // A_j * (z^{r_{j-1}} + z^{r_{j-1}+D} + ... + z^{r_j - D})
        std::vector<BigInt> comb(r, BigInt(0));
        for (std::size_t t = prev; t < r; t += D) comb[t] = 1;
        covered = covered + A * IntPoly(std::move(comb));
        form.breakpoints.push_back(r);
        form.patterns.push_back(std::move(A));
        prev = r;
    }
    form.residual = Q - covered;
    for (const auto& v : form.residual.coeffs())
        if (v != 0) ++form.residual_terms;

    // exact identity check
    std::vector<BigInt> zD(D + 1, BigInt(0));
    zD[0] = -1;
    zD[D] = 1;
    const IntPoly cyc(std::move(zD));
    IntPoly rhs = form.residual * cyc;
    for (std::size_t j = 0; j < form.patterns.size(); ++j) {
        const std::size_t rj = form.breakpoints[j + 1], rp = form.breakpoints[j];
        IntPoly step = IntPoly::monomial(BigInt(1), rj) - IntPoly::monomial(BigInt(1), rp);
        rhs = rhs + form.patterns[j] * step;
    }
    if (!(Q * cyc == rhs)) throw error("to_geometric: reconstruction identity failed");
    return form;
}

/// Identical-pattern (delta) form: Q = periodic extension of epsilon plus
/// D-aligned deviation blocks.
struct DeltaBlock {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::vector<long long> pattern; // delta values by global residue
};

struct CorollaryForm {
    std::size_t period = 1;
    std::vector<long long> epsilon;
    std::vector<DeltaBlock> blocks;
    bool delta_in_allowed_set = true; // every delta_m in {-2 eps_m, 0}
    bool closed_form_checked = false; // displayed (z^{N+1}-1)/(z^D-1) identity, needs D | N+1
};

inline CorollaryForm to_corollary_form(const std::vector<long long>& seq, std::size_t D,
                                       const std::vector<long long>& eps) {
    if (eps.size() != D) throw length_mismatch("epsilon length must equal the period");
    if (seq.empty()) throw error("sequence must be nonempty");
    const std::size_t len = seq.size();

    std::vector<long long> dev(len);
    for (std::size_t n = 0; n < len; ++n) dev[n] = seq[n] - eps[n % D];

    CorollaryForm form;
    form.period = D;
    form.epsilon = eps;
    for (const auto& blk : decompose(dev, D, true).blocks) {
        bool nonzero = false;
        for (long long v : blk.pattern) nonzero = nonzero || v != 0;
        if (!nonzero) continue;
        for (std::size_t m = 0; m < D; ++m) {
            const long long d = blk.pattern[m];
            if (d != 0 && d != -2 * eps[m]) form.delta_in_allowed_set = false;
        }
        form.blocks.push_back({blk.begin, blk.end, blk.pattern});
    }

    // exact reconstruction: Q == truncated periodic extension + deviation blocks
    std::vector<BigInt> qc(len), tc(len);
    for (std::size_t n = 0; n < len; ++n) {
        qc[n] = seq[n];
        tc[n] = eps[n % D];
    }
    const IntPoly Q(std::move(qc));
    IntPoly rhs(std::move(tc));
    for (const auto& blk : form.blocks) {
        std::vector<BigInt> bc(blk.end, BigInt(0));
        for (std::size_t n = blk.begin; n < blk.end; ++n) bc[n] = blk.pattern[n % D];
        rhs = rhs + IntPoly(std::move(bc));
    }
    if (!(Q == rhs)) throw error("to_corollary_form: reconstruction identity failed");

    if (len % D == 0) {
        // multiplied-through closed form: Q (z^D - 1) = A_eps (z^{N+1} - 1) + (sum blocks)(z^D - 1)
        std::vector<BigInt> ec(D);
        for (std::size_t m = 0; m < D; ++m) ec[m] = eps[m];
        const IntPoly A(std::move(ec));
        std::vector<BigInt> zD(D + 1, BigInt(0));
        zD[0] = -1;
        zD[D] = 1;
        const IntPoly cyc(std::move(zD));
        const IntPoly zN1 = IntPoly::monomial(BigInt(1), len) - IntPoly::constant(BigInt(1));
        IntPoly blocks_poly;
        for (const auto& blk : form.blocks) {
            std::vector<BigInt> bc(blk.end, BigInt(0));
            for (std::size_t n = blk.begin; n < blk.end; ++n) bc[n] = blk.pattern[n % D];
            blocks_poly = blocks_poly + IntPoly(std::move(bc));
        }
        if (!(Q * cyc == A * zN1 + blocks_poly * cyc))
            throw error("to_corollary_form: closed-form identity failed");
        form.closed_form_checked = true;
    }
    return form;
}

} // namespace littlewood

#endif
