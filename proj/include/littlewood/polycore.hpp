#ifndef LITTLEWOOD_POLYCORE_HPP
#define LITTLEWOOD_POLYCORE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "littlewood/errors.hpp"
#include "littlewood/int_poly.hpp"

namespace littlewood {

/// Polynomial with every coefficient in {-1, +1}, stored low degree first.
struct LittlewoodPoly {
    std::vector<int> coeffs;

    LittlewoodPoly() = default;
    explicit LittlewoodPoly(std::vector<int> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) throw error("Littlewood polynomial must be nonempty");
        for (int v : coeffs)
            if (v != 1 && v != -1) throw error("Littlewood coefficients must be +1 or -1");
    }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    bool is_reciprocal() const {
        const std::size_t n = coeffs.size();
        for (std::size_t j = 0; j < n; ++j)
            if (coeffs[j] != coeffs[n - 1 - j]) return false;
        return true;
    }

    LittlewoodPoly negated() const {
        std::vector<int> c(coeffs);
        for (int& v : c) v = -v;
        return LittlewoodPoly(std::move(c));
    }

    IntPoly to_int_poly() const {
        std::vector<BigInt> c(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i];
        return IntPoly(std::move(c));
    }
};

/// ASCII '+' / '-' only; the Unicode minus sign is rejected.
inline LittlewoodPoly parse_signs(std::string_view s) {
    if (s.empty()) throw error("empty sign string");
    std::vector<int> c(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '+') c[i] = 1;
        else if (s[i] == '-') c[i] = -1;
        else throw invalid_character(i);
    }
    return LittlewoodPoly(std::move(c));
}

inline std::string to_sign_string(const LittlewoodPoly& p) {
    std::string s(p.coeffs.size(), '+');
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        if (p.coeffs[i] < 0) s[i] = '-';
    return s;
}

enum class Parity { all_frequencies, odd_only };

/// A_0 + sum_{n>=1} A_n cos(n theta). Odd-parity polynomials keep the full
/// coefficient vector with zeros at even indices; parity is an invariant, not
/// a storage layout.
struct CosinePoly {
    std::vector<std::int64_t> A;
    Parity parity = Parity::all_frequencies;

    CosinePoly() = default;
    CosinePoly(std::vector<std::int64_t> coeffs, Parity par) : A(std::move(coeffs)), parity(par) {
        if (parity == Parity::odd_only)
            for (std::size_t n = 0; n < A.size(); n += 2)
                if (A[n] != 0) throw error("odd-frequency cosine polynomial has a nonzero even coefficient");
    }

    int top_frequency() const {
        int m = static_cast<int>(A.size()) - 1;
        while (m > 0 && A[static_cast<std::size_t>(m)] == 0) --m;
        return m;
    }

    double eval(double theta) const {
        double r = A.empty() ? 0.0 : static_cast<double>(A[0]);
        for (std::size_t n = 1; n < A.size(); ++n)
            if (A[n] != 0) r += static_cast<double>(A[n]) * std::cos(static_cast<double>(n) * theta);
        return r;
    }
};

/// The half-coefficient polynomial Q attached to a reciprocal Littlewood P.
/// Even degree N: Q has degree N/2 and is itself Littlewood. Odd degree N:
/// Q has degree N with support on odd exponents only.
struct QPoly {
    std::vector<int> coeffs;
    bool odd_support = false;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    IntPoly to_int_poly() const {
        std::vector<BigInt> c(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i];
        return IntPoly(std::move(c));
    }

    std::complex<double> eval_circle(double theta) const {
        std::complex<double> z = std::polar(1.0, theta), r(0.0, 0.0);
        for (std::size_t i = coeffs.size(); i-- > 0;) r = r * z + static_cast<double>(coeffs[i]);
        return r;
    }
};

/// Boundary values of a reciprocal P as a cosine polynomial.
/// Even N: P(e^{i theta}) = e^{i theta N/2} f(theta) with
///   f = a_{N/2} + 2 sum a_{N/2+n} cos(n theta).
/// Odd N: P(e^{2 i theta}) = e^{i N theta} f(theta) with
///   f = 2 sum a_{(N-1)/2+n} cos((2n-1) theta).
inline CosinePoly to_cosine(const LittlewoodPoly& p) {
    if (!p.is_reciprocal()) throw not_reciprocal();
    const int N = p.degree();
    if (N % 2 == 0) {
        const int M = N / 2;
        std::vector<std::int64_t> A(static_cast<std::size_t>(M) + 1, 0);
        A[0] = p.coeffs[static_cast<std::size_t>(M)];
        for (int n = 1; n <= M; ++n) A[static_cast<std::size_t>(n)] = 2 * p.coeffs[static_cast<std::size_t>(M + n)];
        return CosinePoly(std::move(A), Parity::all_frequencies);
    }
    const int H = (N + 1) / 2;
    std::vector<std::int64_t> A(static_cast<std::size_t>(N) + 1, 0);
    for (int n = 1; n <= H; ++n)
        A[static_cast<std::size_t>(2 * n - 1)] = 2 * p.coeffs[static_cast<std::size_t>((N - 1) / 2 + n)];
    return CosinePoly(std::move(A), Parity::odd_only);
}

/// Same conversion for general reciprocal integer polynomials.
inline CosinePoly to_cosine_general(const IntPoly& p) {
    const int N = p.degree();
    if (N < 0) throw zero_polynomial();
    for (int j = 0; 2 * j <= N; ++j)
        if (p.coeff(static_cast<std::size_t>(j)) != p.coeff(static_cast<std::size_t>(N - j)))
            throw not_reciprocal();
    auto small = [](const BigInt& v) { return v.convert_to<std::int64_t>(); };
    if (N % 2 == 0) {
        const int M = N / 2;
        std::vector<std::int64_t> A(static_cast<std::size_t>(M) + 1, 0);
        A[0] = small(p.coeff(static_cast<std::size_t>(M)));
        for (int n = 1; n <= M; ++n) A[static_cast<std::size_t>(n)] = 2 * small(p.coeff(static_cast<std::size_t>(M + n)));
        return CosinePoly(std::move(A), Parity::all_frequencies);
    }
    const int H = (N + 1) / 2;
    std::vector<std::int64_t> A(static_cast<std::size_t>(N) + 1, 0);
    for (int n = 1; n <= H; ++n)
        A[static_cast<std::size_t>(2 * n - 1)] = 2 * small(p.coeff(static_cast<std::size_t>((N - 1) / 2 + n)));
    return CosinePoly(std::move(A), Parity::odd_only);
}

inline QPoly build_Q(const LittlewoodPoly& p) {
    if (!p.is_reciprocal()) throw not_reciprocal();
    const int N = p.degree();
    QPoly q;
    if (N % 2 == 0) {
        const int M = N / 2;
        q.coeffs.resize(static_cast<std::size_t>(M) + 1);
        for (int n = 0; n <= M; ++n) q.coeffs[static_cast<std::size_t>(n)] = p.coeffs[static_cast<std::size_t>(M + n)];
        q.odd_support = false;
    } else {
        q.coeffs.assign(static_cast<std::size_t>(N) + 1, 0);
        for (int n = 1; n <= (N + 1) / 2; ++n)
            q.coeffs[static_cast<std::size_t>(2 * n - 1)] = p.coeffs[static_cast<std::size_t>((N - 1) / 2 + n)];
        q.odd_support = true;
    }
    return q;
}

/// cos(theta) + sum_{j=0}^{N} (-1)^j cos((2j+1) theta); at most 2 roots in a
/// period for every N.
inline CosinePoly family_g(int N) {
    std::vector<std::int64_t> A(static_cast<std::size_t>(2 * N + 2), 0);
    A[1] = 1;
    for (int j = 0; j <= N; ++j) A[static_cast<std::size_t>(2 * j + 1)] += (j % 2 == 0) ? 1 : -1;
    return CosinePoly(std::move(A), Parity::odd_only);
}

/// sum_{n=0}^{2m} (-1)^n cos((2n+1) theta), odd frequencies only.
inline CosinePoly family_h(int m) {
    std::vector<std::int64_t> A(static_cast<std::size_t>(4 * m + 2), 0);
    for (int n = 0; n <= 2 * m; ++n) A[static_cast<std::size_t>(2 * n + 1)] = (n % 2 == 0) ? 1 : -1;
    return CosinePoly(std::move(A), Parity::odd_only);
}

/// sum coeffs[n] e^{i n theta} in double precision.
inline std::complex<double> eval_circle(const IntPoly& p, double theta) {
    std::complex<double> z = std::polar(1.0, theta), r(0.0, 0.0);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) r = r * z + p.coeffs()[i].convert_to<double>();
    return r;
}

inline std::complex<double> eval_circle(const LittlewoodPoly& p, double theta) {
    std::complex<double> z = std::polar(1.0, theta), r(0.0, 0.0);
    for (std::size_t i = p.coeffs.size(); i-- > 0;) r = r * z + static_cast<double>(p.coeffs[i]);
    return r;
}

} // namespace littlewood

#endif
