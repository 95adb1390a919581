#ifndef LITTLEWOOD_ROOTCOUNT_HPP
#define LITTLEWOOD_ROOTCOUNT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "littlewood/int_poly.hpp"
#include "littlewood/polycore.hpp"

namespace littlewood {

/// Census of roots on the unit circle (or of a cosine polynomial on a period).
struct ZCount {
    long long distinct = 0;
    long long with_multiplicity = 0;
    long long at_plus_one = 0;  // multiplicity at z = 1 (theta = 0)
    long long at_minus_one = 0; // multiplicity at z = -1 (theta = pi)
    long long odd_multiplicity_count = 0;
};

/// F(cos theta) = f(theta) exactly, via A_n cos(n theta) = A_n T_n(x).
inline IntPoly chebyshev_transform(const CosinePoly& f) {
    const std::size_t n = f.A.size();
    std::vector<BigInt> acc(1, n > 0 ? BigInt(f.A[0]) : BigInt(0));
    if (n > 1) {
        // T_{k+1} = 2x T_k - T_{k-1}
        std::vector<BigInt> tprev{BigInt(1)};          // T_0
        std::vector<BigInt> tcur{BigInt(0), BigInt(1)}; // T_1
        acc.resize(n, BigInt(0));
        for (std::size_t k = 1; k < n; ++k) {
            if (f.A[k] != 0) {
                const BigInt a(f.A[k]);
                for (std::size_t i = 0; i < tcur.size(); ++i) acc[i] += a * tcur[i];
            }
            if (k + 1 < n) {
                std::vector<BigInt> tnext(k + 2, BigInt(0));
                for (std::size_t i = 0; i < tcur.size(); ++i) tnext[i + 1] = 2 * tcur[i];
                for (std::size_t i = 0; i < tprev.size(); ++i) tnext[i] -= tprev[i];
                tprev = std::move(tcur);
                tcur = std::move(tnext);
            }
        }
    }
    return IntPoly(std::move(acc));
}

/// One isolated real root: a rational interval containing exactly that root
/// (degenerate [r, r] when the root itself was pinned) plus its multiplicity.
struct RootRecord {
    BigRat lo, hi;
    int multiplicity;
};

namespace detail {

// Divide S by (q x - p) for the rational root p/q; exact by Gauss's lemma.
inline IntPoly deflate_rational(const IntPoly& S, const BigRat& r) {
    IntPoly lin(std::vector<BigInt>{-numerator(r), denominator(r)});
    return S.divide_exact(lin);
}

// Bisection over a squarefree factor: emit isolating intervals for all roots
// strictly inside (a, b). Split points never land on roots.
inline void isolate_squarefree(const IntPoly& S, const SturmChain& ch, int mult,
                               const BigRat& a, int va, const BigRat& b, int vb,
                               std::vector<RootRecord>& out) {
    const long long k = va - vb;
    if (k <= 0) return;
    if (k == 1) {
        out.push_back({a, b, mult});
        return;
    }
    BigRat m = (a + b) / 2;
    while (S.sign_at(m) == 0) m = (a + m) / 2;
    const int vm = ch.variations_at(m);
    isolate_squarefree(S, ch, mult, a, va, m, vm, out);
    isolate_squarefree(S, ch, mult, m, vm, b, vb, out);
}

} // namespace detail

/// Complete list of distinct real roots of F in the closed interval [a, b],
/// each with exact multiplicity and a rational isolating interval.
inline std::vector<RootRecord> count_real_roots(const IntPoly& F, const BigRat& a, const BigRat& b) {
    if (F.is_zero()) throw zero_polynomial();
    std::vector<RootRecord> out;
    if (F.degree() == 0) return out;
    for (auto& [mult, factor] : squarefree_decomposition(F)) {
        IntPoly S = factor;
        if (S.sign_at(a) == 0) {
            out.push_back({a, a, mult});
            S = detail::deflate_rational(S, a);
        }
        if (!S.is_zero() && S.degree() >= 1 && S.sign_at(b) == 0) {
            out.push_back({b, b, mult});
            S = detail::deflate_rational(S, b);
        }
        if (S.degree() < 1) continue;
        SturmChain ch = build_sturm(S);
        detail::isolate_squarefree(S, ch, mult, a, ch.variations_at(a), b, ch.variations_at(b), out);
    }
    std::sort(out.begin(), out.end(), [](const RootRecord& x, const RootRecord& y) { return x.lo < y.lo; });
    return out;
}

namespace detail {

// Multiplicity classes of roots in the open interval (0, 1). Requires
// F(0) != 0 and F(1) != 0. Even-support inputs are degree-halved first.
inline std::vector<MultClass> classes_01_open(IntPoly F) {
    while (F.degree() >= 2 && F.support_parity() == +1) F = F.compress_even();
    return root_classes_open(F, BigRat(0), BigRat(1));
}

// Same over (-1, 1); additionally requires F(-1) != 0 and F(0) != 0.
inline std::vector<MultClass> classes_symmetric_open(IntPoly F) {
    if (F.degree() >= 2 && F.support_parity() == +1) {
        auto classes = classes_01_open(F.compress_even());
        for (auto& c : classes) c.count *= 2;
        return classes;
    }
    return root_classes_open(F, BigRat(-1), BigRat(1));
}

inline int strip_root(IntPoly& F, long long r) {
    IntPoly copy = F;
    int m = deflate_root(copy, BigInt(r));
    F = std::move(copy);
    return m;
}

struct EndpointData {
    int at_one = 0;      // multiplicity of x = 1
    int at_minus_one = 0;
    int at_zero = 0;
};

inline EndpointData strip_endpoints(IntPoly& F) {
    EndpointData e;
    e.at_zero = static_cast<int>(F.trailing_zeros());
    if (e.at_zero > 0) F = F.shift_down(static_cast<std::size_t>(e.at_zero));
    e.at_one = strip_root(F, 1);
    e.at_minus_one = strip_root(F, -1);
    return e;
}

inline void fold_classes(ZCount& zc, const std::vector<MultClass>& classes) {
    for (const auto& c : classes) {
        zc.distinct += 2 * c.count;
        zc.with_multiplicity += 2 * static_cast<long long>(c.multiplicity) * c.count;
        if (c.multiplicity % 2 == 1) zc.odd_multiplicity_count += 2 * c.count;
    }
}

} // namespace detail

/// Exact census of unimodular roots of a reciprocal integer polynomial.
/// Multiplicities at z = +-1 are taken directly on P by deflation; interior
/// roots go through the cosine form and the Chebyshev transform.
inline ZCount count_unimodular(const IntPoly& P) {
    const int N = P.degree();
    CosinePoly f = to_cosine_general(P); // throws on non-reciprocal / zero input
    IntPoly F = chebyshev_transform(f);

    ZCount zc;
    {
        IntPoly w = P;
        zc.at_plus_one = deflate_root(w, BigInt(1));
    }
    {
        IntPoly w = P;
        zc.at_minus_one = deflate_root(w, BigInt(-1));
    }

    detail::EndpointData e = detail::strip_endpoints(F);
    std::vector<MultClass> classes;
    if (N % 2 == 0) {
        // theta = 0, pi are even-order roots of f; x = 0 is interior (z = +-i).
        if (2 * e.at_one != zc.at_plus_one || 2 * e.at_minus_one != zc.at_minus_one)
            throw error("count_unimodular: endpoint multiplicity mismatch");
        if (e.at_zero > 0) classes.push_back({e.at_zero, 1});
        auto inner = detail::classes_symmetric_open(F);
        classes.insert(classes.end(), inner.begin(), inner.end());
    } else {
        // Half-angle cover: x = 0 is z = -1, x = +-1 both map to z = 1.
        if (e.at_zero != zc.at_minus_one || 2 * e.at_one != zc.at_plus_one)
            throw error("count_unimodular: endpoint multiplicity mismatch");
        classes = detail::classes_01_open(F);
    }
    detail::fold_classes(zc, classes);
    zc.distinct += (zc.at_plus_one > 0) + (zc.at_minus_one > 0);
    zc.with_multiplicity += zc.at_plus_one + zc.at_minus_one;
    zc.odd_multiplicity_count += (zc.at_plus_one % 2) + (zc.at_minus_one % 2);
    return zc;
}

inline ZCount count_unimodular(const LittlewoodPoly& P) { return count_unimodular(P.to_int_poly()); }

/// Census of the roots of a cosine polynomial f(theta) on [0, 2pi).
/// at_plus_one / at_minus_one hold the theta-multiplicities at 0 and pi.
inline ZCount cosine_root_census(const CosinePoly& f) {
    IntPoly F = chebyshev_transform(f);
    if (F.is_zero()) throw zero_polynomial();
    ZCount zc;
    detail::EndpointData e = detail::strip_endpoints(F);
    zc.at_plus_one = 2 * e.at_one;
    zc.at_minus_one = 2 * e.at_minus_one;
    std::vector<MultClass> classes;
    if (e.at_zero > 0) classes.push_back({e.at_zero, 1});
    auto inner = detail::classes_symmetric_open(F);
    classes.insert(classes.end(), inner.begin(), inner.end());
    detail::fold_classes(zc, classes);
    zc.distinct += (e.at_one > 0) + (e.at_minus_one > 0);
    zc.with_multiplicity += zc.at_plus_one + zc.at_minus_one;
    return zc;
}

/// cos(2 pi j / res) table with exact values on the quadrant boundaries, so
/// grid points at multiples of pi/2 evaluate without roundoff junk.
inline std::vector<double> cosine_table(std::size_t res) {
    std::vector<double> t(res);
    const double step = 6.283185307179586476925286766559 / static_cast<double>(res);
    if (res % 4 != 0) {
        for (std::size_t j = 0; j < res; ++j) t[j] = std::cos(step * static_cast<double>(j));
        return t;
    }
    const std::size_t q = res / 4;
    for (std::size_t j = 0; j < q; ++j) t[j] = std::cos(step * static_cast<double>(j));
    t[q] = 0.0;
    for (std::size_t j = q + 1; j <= 2 * q; ++j) t[j] = -t[2 * q - j];
    for (std::size_t j = 2 * q + 1; j < 4 * q; ++j) t[j] = t[4 * q - j];
    return t;
}

/// Sign changes of f over a uniform cyclic grid on [0, 2pi). Exact zeros are
/// skipped, so the count lower-bounds the true number of sign changes.
inline long long grid_sign_change_oracle(const CosinePoly& f, std::size_t resolution) {
    const std::size_t min_res = 4 * (static_cast<std::size_t>(std::max(f.top_frequency(), 0)) + 1);
    if (resolution < min_res) throw error("grid resolution below 4*(degree+1)");
    const std::vector<double> table = cosine_table(resolution);
    int first = 0, prev = 0;
    long long changes = 0;
    for (std::size_t k = 0; k < resolution; ++k) {
        double v = f.A.empty() ? 0.0 : static_cast<double>(f.A[0]);
        for (std::size_t n = 1; n < f.A.size(); ++n)
            if (f.A[n] != 0) v += static_cast<double>(f.A[n]) * table[(n * k) % resolution];
        const int sg = (v > 0.0) - (v < 0.0);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++changes;
        if (first == 0) first = sg;
        prev = sg;
    }
    if (prev != 0 && first != 0 && prev != first) ++changes; // wrap-around
    return changes;
}

} // namespace littlewood

#endif
