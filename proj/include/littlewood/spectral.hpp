#ifndef LITTLEWOOD_SPECTRAL_HPP
#define LITTLEWOOD_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Eigenvalues>

#include "littlewood/errors.hpp"

namespace littlewood {

using Complex = std::complex<double>;

/// Trigonometric polynomial w(t) = sum_{n=-N}^{N} c_n e^{int}, stored as
/// c[k+N] for k in [-N, N]. Real-valued iff c_{-n} = conj(c_n).
struct TrigPoly {
    std::vector<Complex> c; // size 2N+1

    TrigPoly() : c(1, Complex(0.0)) {}
    explicit TrigPoly(std::vector<Complex> full) : c(std::move(full)) {
        if (c.empty() || c.size() % 2 == 0) throw error("TrigPoly needs an odd-length coefficient vector");
    }

    /// Build from c_0..c_N with the conjugate-symmetric extension.
    static TrigPoly from_half(const std::vector<Complex>& half) {
        if (half.empty()) throw error("empty coefficient list");
        const std::size_t N = half.size() - 1;
        std::vector<Complex> full(2 * N + 1);
        for (std::size_t n = 0; n <= N; ++n) {
            full[N + n] = half[n];
            full[N - n] = std::conj(half[n]);
        }
        return TrigPoly(std::move(full));
    }

    static TrigPoly from_real_half(const std::vector<double>& half) {
        std::vector<Complex> h(half.size());
        for (std::size_t i = 0; i < half.size(); ++i) h[i] = Complex(half[i], 0.0);
        return from_half(h);
    }

    int top() const { return static_cast<int>(c.size() / 2); }

    Complex coeff(int n) const {
        const int N = top();
        if (n < -N || n > N) return Complex(0.0);
        return c[static_cast<std::size_t>(n + N)];
    }

    bool conjugate_symmetric(double tol = 1e-12) const {
        const int N = top();
        for (int n = 0; n <= N; ++n)
            if (std::abs(coeff(-n) - std::conj(coeff(n))) > tol) return false;
        return true;
    }

    Complex eval(double t) const {
        const int N = top();
        Complex s(0.0);
        for (int n = -N; n <= N; ++n) s += coeff(n) * std::polar(1.0, n * t);
        return s;
    }

    double eval_real(double t) const { return eval(t).real(); }
};

/// c_n = sum_{j=0}^{N-n} d_j conj(d_{n+j}) for n >= 0, extended
/// conjugate-symmetrically. Always real-valued and nonnegative on the circle.
inline TrigPoly autocorrelation(const std::vector<Complex>& d) {
    if (d.empty()) throw error("autocorrelation of an empty vector");
    const std::size_t N = d.size() - 1;
    std::vector<Complex> half(N + 1, Complex(0.0));
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t j = 0; j + n <= N; ++j) half[n] += d[j] * std::conj(d[j + n]);
    half[0] = Complex(half[0].real(), 0.0);
    return TrigPoly::from_half(half);
}

struct SpectralFactor {
    std::vector<Complex> d;
    double residual = 0.0;
};

namespace detail {

inline std::vector<Complex> poly_roots(const std::vector<Complex>& a) {
    std::size_t deg = a.size();
    while (deg > 0 && std::abs(a[deg - 1]) == 0.0) --deg;
    if (deg <= 1) return {};
    const std::size_t d = deg - 1;
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(static_cast<long>(d), static_cast<long>(d));
    for (std::size_t i = 1; i < d; ++i) C(static_cast<long>(i), static_cast<long>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < d; ++i) C(static_cast<long>(i), static_cast<long>(d - 1)) = -a[i] / a[d];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<Complex> roots(d);
    for (std::size_t i = 0; i < d; ++i) roots[i] = es.eigenvalues()(static_cast<long>(i));
    // Newton polish against the input polynomial
    for (auto& z : roots) {
        for (int it = 0; it < 3; ++it) {
            Complex p(0.0), dp(0.0);
            for (std::size_t k = deg; k-- > 0;) {
                dp = dp * z + p;
                p = p * z + a[k];
            }
            if (std::abs(dp) < 1e-300) break;
            const Complex step = p / dp;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            if (std::abs(step) > 0.5) break;
            z -= step;
        }
    }
    return roots;
}

} // namespace detail

/// Fejer-Riesz factorization of a nonnegative real-valued trigonometric
/// polynomial: returns d with autocorrelation(d) ~ c. Roots of the lifted
/// polynomial z^N w(z) come in pairs rho <-> 1/conj(rho); the outer factor
/// keeps the member in the closed unit disc, with unit-circle roots taken at
/// half their (even) multiplicity. The result is scaled by a positive real
/// constant to match c_0.
inline SpectralFactor fejer_riesz_factor(const TrigPoly& c, double tol = 1e-8) {
    if (!c.conjugate_symmetric(1e-9)) throw error("fejer_riesz_factor requires a real-valued input");
    const int N = c.top();

    // nonnegativity pre-check on a grid
    {
        const int grid = std::max(64, 16 * N);
        double worst_t = 0.0, worst_v = 0.0;
        for (int k = 0; k < grid; ++k) {
            const double t = 6.283185307179586 * k / grid;
            const double v = c.eval_real(t);
            if (v < worst_v) {
                worst_v = v;
                worst_t = t;
            }
        }
        if (worst_v < -tol) throw not_nonnegative(worst_t, worst_v);
    }

    if (N == 0) {
        const double c0 = c.coeff(0).real();
        SpectralFactor f;
        f.d.assign(1, Complex(std::sqrt(std::max(0.0, c0)), 0.0));
        f.residual = std::abs(autocorrelation(f.d).coeff(0) - c.coeff(0));
        return f;
    }

    // roots of the lifted polynomial L(z) = z^N w(z), degree 2N
    std::vector<Complex> lifted(c.c);
    std::vector<Complex> roots = detail::poly_roots(lifted);

    constexpr double kBand = 1e-7; // unit-circle detection band
    std::vector<Complex> inside, on_circle;
    for (const Complex& r : roots) {
        const double m = std::abs(r);
        if (m < 1.0 - kBand) inside.push_back(r);
        else if (m <= 1.0 + kBand) on_circle.push_back(r);
    }
    // pair up circle roots by angle; each cluster must have even size
    std::vector<Complex> selected = inside;
    if (!on_circle.empty()) {
        std::sort(on_circle.begin(), on_circle.end(),
                  [](const Complex& x, const Complex& y) { return std::arg(x) < std::arg(y); });
        std::size_t i = 0;
        while (i < on_circle.size()) {
            std::size_t j = i + 1;
            while (j < on_circle.size() && std::abs(std::arg(on_circle[j]) - std::arg(on_circle[i])) < 1e-5) ++j;
            const std::size_t cluster = j - i;
            if (cluster % 2 != 0)
                throw odd_unit_circle_multiplicity("unit-circle root of odd numerical multiplicity near angle " +
                                                   std::to_string(std::arg(on_circle[i])));
            double mean_arg = 0.0;
            for (std::size_t k = i; k < j; ++k) mean_arg += std::arg(on_circle[k]);
            mean_arg /= static_cast<double>(cluster);
            for (std::size_t k = 0; k < cluster / 2; ++k) selected.push_back(std::polar(1.0, mean_arg));
            i = j;
        }
    }
    if (selected.size() != static_cast<std::size_t>(N))
        throw odd_unit_circle_multiplicity("root pairing failed: expected " + std::to_string(N) + " factors, got " +
                                           std::to_string(selected.size()));

    // monic product, true-autocorrelation factor, then conjugate for the
    // c_n = sum d_j conj(d_{n+j}) convention
    std::vector<Complex> q(1, Complex(1.0, 0.0)); // ascending powers
    for (const Complex& r : selected) {
        q.push_back(Complex(0.0));
        for (std::size_t k = q.size() - 1; k >= 1; --k) q[k] = q[k - 1] - r * q[k];
        q[0] = -r * q[0];
    }
    double norm2 = 0.0;
    for (const Complex& v : q) norm2 += std::norm(v);
    const double c0 = c.coeff(0).real();
    const double scale = std::sqrt(std::max(0.0, c0) / norm2);
    SpectralFactor f;
    f.d.resize(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) f.d[k] = std::conj(scale * q[k]);

    const TrigPoly back = autocorrelation(f.d);
    double resid = 0.0;
    for (int n = 0; n <= N; ++n) resid = std::max(resid, std::abs(back.coeff(n) - c.coeff(n)));
    f.residual = resid;
    if (resid > tol) throw error("factorization residual " + std::to_string(resid) + " exceeds tolerance");
    return f;
}

enum class SignChangeVerdict { HasSignChange, Inconclusive };

namespace detail {

inline bool integral(const Complex& z) {
    return z.real() == std::nearbyint(z.real()) && z.imag() == std::nearbyint(z.imag()) &&
           std::abs(z.real()) < 9.0e15 && std::abs(z.imag()) < 9.0e15;
}

inline long long norm2_int(const Complex& z) {
    const long long a = static_cast<long long>(std::nearbyint(z.real()));
    const long long b = static_cast<long long>(std::nearbyint(z.imag()));
    return a * a + b * b;
}

} // namespace detail

/// Coefficient condition for a sign change of a real-valued trig polynomial:
/// 2|c_N| > |c_0|, or 2|c_N| = |c_0| with some c_n != 0 for 0 < n < N.
/// Exact comparison for integer coefficients, 1e-12 tolerance otherwise.
inline SignChangeVerdict coefficient_sign_change_test(const TrigPoly& c) {
    const int N = c.top();
    const Complex cN = c.coeff(N);
    if (std::abs(cN) == 0.0) throw zero_leading();
    const Complex c0 = c.coeff(0);

    bool all_int = true;
    for (int n = 0; n <= N && all_int; ++n) all_int = detail::integral(c.coeff(n));

    bool strict, equal;
    if (all_int) {
        const long long lhs = 4 * detail::norm2_int(cN); // (2|cN|)^2
        const long long rhs = detail::norm2_int(c0);
        strict = lhs > rhs;
        equal = lhs == rhs;
    } else {
        const double lhs = 2.0 * std::abs(cN), rhs = std::abs(c0);
        const double tol = 1e-12 * std::max(1.0, rhs);
        strict = lhs > rhs + tol;
        equal = std::abs(lhs - rhs) <= tol;
    }
    if (strict) return SignChangeVerdict::HasSignChange;
    if (equal) {
        for (int n = 1; n < N; ++n) {
            const Complex cn = c.coeff(n);
            const bool nonzero = all_int ? detail::norm2_int(cn) != 0 : std::abs(cn) > 1e-12;
            if (nonzero) return SignChangeVerdict::HasSignChange;
        }
    }
    return SignChangeVerdict::Inconclusive;
}

struct SignChangeCertificate {
    double t_plus = 0.0;
    double t_minus = 0.0;
    double w_plus = 0.0;
    double w_minus = 0.0;
};

/// Grid search for evaluated witnesses w(t_plus) > 0 > w(t_minus).
inline std::optional<SignChangeCertificate> find_sign_change(const TrigPoly& c, int resolution) {
    if (resolution < 8 * std::max(1, c.top())) throw error("resolution below 8N");
    double best_max = -1e300, best_min = 1e300, t_max = 0.0, t_min = 0.0;
    for (int k = 0; k < resolution; ++k) {
        const double t = 6.283185307179586 * k / resolution;
        const double v = c.eval_real(t);
        if (v > best_max) {
            best_max = v;
            t_max = t;
        }
        if (v < best_min) {
            best_min = v;
            t_min = t;
        }
    }
    if (best_max > 0.0 && best_min < 0.0)
        return SignChangeCertificate{t_max, t_min, best_max, best_min};
    return std::nullopt;
}

} // namespace littlewood

#endif
