#ifndef LITTLEWOOD_INT_POLY_HPP
#define LITTLEWOOD_INT_POLY_HPP

#include <algorithm>
#include <cassert>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "littlewood/bigint.hpp"
#include "littlewood/errors.hpp"

namespace littlewood {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeff(i) multiplies x^i. The zero polynomial has an empty coefficient vector.
/// All arithmetic is exact; no floating point.
class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    IntPoly(std::initializer_list<long long> coeffs) {
        c_.reserve(coeffs.size());
        for (long long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly constant(BigInt v) {
        IntPoly p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }

    static IntPoly monomial(BigInt v, std::size_t k) {
        IntPoly p;
        if (v != 0) {
            p.c_.assign(k + 1, BigInt(0));
            p.c_[k] = std::move(v);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const BigInt& leading() const {
        assert(!c_.empty());
        return c_.back();
    }

    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return IntPoly(std::move(r));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return IntPoly(std::move(r));
    }

    friend IntPoly operator-(const IntPoly& a) {
        std::vector<BigInt> r(a.c_);
        for (auto& v : r) v = -v;
        return IntPoly(std::move(r));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPoly(std::move(r));
    }

    friend IntPoly operator*(const IntPoly& a, const BigInt& s) {
        if (s == 0) return IntPoly();
        std::vector<BigInt> r(a.c_);
        for (auto& v : r) v *= s;
        return IntPoly(std::move(r));
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        std::vector<BigInt> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * BigInt(static_cast<long long>(i));
        return IntPoly(std::move(r));
    }

    BigInt eval(const BigInt& x) const {
        BigInt r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    /// q^deg * f(p/q). The sign equals sign(f(p/q)) when q > 0.
    BigInt eval_scaled(const BigInt& p, const BigInt& q) const {
        if (c_.empty()) return BigInt(0);
        BigInt r = c_.back();
        BigInt qp(1);
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            qp *= q;
            r = r * p + c_[i] * qp;
        }
        return r;
    }

    int sign_at(const BigRat& x) const {
        if (c_.empty()) return 0;
        const BigInt p = numerator(x);
        const BigInt q = denominator(x);
        if (p == 0) return sign_of(c_[0]);
        if (q == 1) {
            if (p == 1) {
                BigInt s(0);
                for (const auto& v : c_) s += v;
                return sign_of(s);
            }
            if (p == -1) {
                BigInt s(0);
                for (std::size_t i = 0; i < c_.size(); ++i)
                    s += (i % 2 == 0) ? c_[i] : -c_[i];
                return sign_of(s);
            }
        }
        return sign_of(eval_scaled(p, q));
    }

    double eval_double(double x) const {
        double r = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i].convert_to<double>();
        return r;
    }

    std::complex<double> eval_complex(std::complex<double> z) const {
        std::complex<double> r(0.0, 0.0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * z + c_[i].convert_to<double>();
        return r;
    }

    /// gcd of all coefficients, always >= 0; 0 only for the zero polynomial.
    BigInt content() const {
        BigInt g(0);
        for (const auto& v : c_) {
            g = boost::multiprecision::gcd(g, v);
            if (g == 1) break;
        }
        return g;
    }

    /// Divide by the (positive) content. Sign of the leading coefficient is kept.
    IntPoly primitive() const {
        if (c_.empty()) return IntPoly();
        BigInt g = content();
        if (g == 1) return *this;
        std::vector<BigInt> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] / g;
        return IntPoly(std::move(r));
    }

    /// Exact division; the divisor must divide *this over the integers.
    IntPoly divide_exact(const IntPoly& d) const {
        assert(!d.is_zero());
        if (is_zero()) return IntPoly();
        assert(degree() >= d.degree());
        std::vector<BigInt> rem(c_);
        std::vector<BigInt> q(c_.size() - d.c_.size() + 1, BigInt(0));
        const BigInt& lead = d.c_.back();
        for (std::size_t k = q.size(); k-- > 0;) {
            BigInt& top = rem[k + d.c_.size() - 1];
            if (top == 0) continue;
            BigInt f = top / lead;
            if (f * lead != top) throw error("divide_exact: division is not exact");
            q[k] = f;
            for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
        }
        for (const auto& v : rem)
            if (v != 0) throw error("divide_exact: nonzero remainder");
        return IntPoly(std::move(q));
    }

    /// Number of trailing zero coefficients (multiplicity of the root x = 0).
    std::size_t trailing_zeros() const {
        std::size_t t = 0;
        while (t < c_.size() && c_[t] == 0) ++t;
        return c_.empty() ? 0 : t;
    }

    /// Divide by x^t.
    IntPoly shift_down(std::size_t t) const {
        assert(trailing_zeros() >= t || is_zero());
        if (is_zero() || t == 0) return *this;
        return IntPoly(std::vector<BigInt>(c_.begin() + static_cast<std::ptrdiff_t>(t), c_.end()));
    }

    /// +1 if only even exponents carry nonzero coefficients, -1 if only odd, 0 mixed.
    int support_parity() const {
        bool even = false, odd = false;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            (i % 2 == 0 ? even : odd) = true;
        }
        if (even && !odd) return +1;
        if (odd && !even) return -1;
        return 0;
    }

    /// For F(x) = G(x^2), return G. Requires even support.
    IntPoly compress_even() const {
        assert(support_parity() == +1 || is_zero());
        std::vector<BigInt> r((c_.size() + 1) / 2, BigInt(0));
        for (std::size_t i = 0; i < c_.size(); i += 2) r[i / 2] = c_[i];
        return IntPoly(std::move(r));
    }

private:
    std::vector<BigInt> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// Pseudo-remainder of A by B, already adjusted so the result is congruent to
/// A modulo B up to a *positive* constant factor.
inline IntPoly pseudo_rem_pos(const IntPoly& A, const IntPoly& B) {
    assert(!B.is_zero());
    std::vector<BigInt> r(A.coeffs());
    const auto& b = B.coeffs();
    const BigInt& d = b.back();
    const std::size_t nb = b.size();
    long long steps = 0;
    auto deg = [&r]() {
        std::size_t n = r.size();
        while (n > 0 && r[n - 1] == 0) --n;
        return static_cast<int>(n) - 1;
    };
    int dr = deg();
    const int db = B.degree();
    while (dr >= db) {
        BigInt lead = r[static_cast<std::size_t>(dr)];
        // r <- d*r - lead * x^(dr-db) * B
        for (auto& v : r) v *= d;
        const std::size_t off = static_cast<std::size_t>(dr - db);
        for (std::size_t j = 0; j < nb; ++j) r[off + j] -= lead * b[j];
        ++steps;
        dr = deg();
    }
    if (d < 0 && (steps % 2) == 1)
        for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
}

/// Polynomial gcd over the integers via a primitive pseudo-remainder sequence.
/// Result is primitive with positive leading coefficient (content dropped).
inline IntPoly gcd_poly(IntPoly a, IntPoly b) {
    a = a.primitive();
    b = b.primitive();
    if (a.is_zero()) std::swap(a, b);
    if (b.is_zero()) {
        if (!a.is_zero() && a.leading() < 0) a = -a;
        return a;
    }
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem_pos(a, b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    if (a.leading() < 0) a = -a;
    return a;
}

/// Yun's squarefree decomposition: F ~ prod factor^multiplicity (up to content
/// and sign). Factors are primitive, squarefree, pairwise coprime, degree >= 1.
inline std::vector<std::pair<int, IntPoly>> squarefree_decomposition(const IntPoly& F) {
    if (F.is_zero()) throw zero_polynomial();
    std::vector<std::pair<int, IntPoly>> out;
    IntPoly f = F.primitive();
    if (f.degree() <= 0) return out;
    IntPoly fp = f.derivative();
    IntPoly g = gcd_poly(f, fp);
    if (g.degree() == 0) {
        out.emplace_back(1, f);
        return out;
    }
    IntPoly b = f.divide_exact(g).primitive();
    IntPoly c = fp.divide_exact(g);
    IntPoly d = (c - b.derivative());
    int i = 1;
    while (b.degree() > 0) {
        IntPoly a = gcd_poly(b, d);
        if (a.degree() > 0) out.emplace_back(i, a);
        b = b.divide_exact(a).primitive();
        IntPoly cnew = d.divide_exact(a);
        d = cnew - b.derivative();
        ++i;
    }
    return out;
}

/// Multiplicity of the integer root r, deflating P in place.
inline int deflate_root(IntPoly& P, const BigInt& r) {
    int mult = 0;
    IntPoly lin(std::vector<BigInt>{-r, BigInt(1)}); // (x - r)
    while (!P.is_zero() && P.degree() >= 1 && P.eval(r) == 0) {
        P = P.divide_exact(lin);
        ++mult;
    }
    return mult;
}

// ---------------------------------------------------------------------------
// Sturm sequences
// ---------------------------------------------------------------------------

/// Canonical Sturm chain of primitive parts: s0 = F, s1 = F', s_{k+1} =
/// -prem(s_{k-1}, s_k) up to positive factors. For arbitrary (not necessarily
/// squarefree) F, V(a) - V(b) counts the distinct real roots in (a, b] when
/// F(a) != 0.
struct SturmChain {
    std::vector<IntPoly> s;

    const IntPoly& poly() const { return s.front(); }

    int variations_at(const BigRat& x) const {
        int v = 0, prev = 0;
        for (const auto& p : s) {
            int sg = p.sign_at(x);
            if (sg == 0) continue;
            if (prev != 0 && sg != prev) ++v;
            prev = sg;
        }
        return v;
    }

    /// Distinct roots of the underlying polynomial in the open interval (a, b).
    /// Requires F(a) != 0 and F(b) != 0.
    long long count_open(const BigRat& a, const BigRat& b) const {
        assert(poly().sign_at(a) != 0 && poly().sign_at(b) != 0);
        return variations_at(a) - variations_at(b);
    }

    /// Degree of the last chain element: > 0 exactly when F has repeated roots.
    int tail_degree() const { return s.back().degree(); }
};

inline SturmChain build_sturm(const IntPoly& F) {
    assert(!F.is_zero());
    SturmChain ch;
    ch.s.push_back(F.primitive());
    if (F.degree() >= 1) {
        IntPoly d = F.derivative().primitive();
        ch.s.push_back(std::move(d));
        while (ch.s.back().degree() > 0) {
            IntPoly r = pseudo_rem_pos(ch.s[ch.s.size() - 2], ch.s.back());
            if (r.is_zero()) break;
            ch.s.push_back(-(r.primitive()));
        }
    }
    return ch;
}

/// (multiplicity, number of distinct roots with that multiplicity) inside an
/// open interval. Endpoints must not be roots.
struct MultClass {
    int multiplicity;
    long long count;
};

inline std::vector<MultClass> root_classes_open(const IntPoly& F, const BigRat& a, const BigRat& b) {
    std::vector<MultClass> out;
    if (F.degree() <= 0) return out;
    SturmChain ch = build_sturm(F);
    long long distinct = ch.count_open(a, b);
    if (distinct == 0) return out;
    if (ch.tail_degree() == 0) {
        out.push_back({1, distinct});
        return out;
    }
    for (const auto& [mult, factor] : squarefree_decomposition(F)) {
        if (factor.degree() <= 0) continue;
        SturmChain fch = build_sturm(factor);
        long long c = fch.count_open(a, b);
        if (c > 0) out.push_back({mult, c});
    }
    return out;
}

} // namespace littlewood

#endif
