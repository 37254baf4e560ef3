#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace stablefp {

class NonConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr double pi_v = 3.141592653589793238462643383279502884;

// Lanczos coefficients, g = 7, n = 9.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_c[9] = {
    0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};

inline bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// valid for Re z >= 0.5
inline std::complex<double> lanczos_log_gamma_half_plane(std::complex<double> z) {
    std::complex<double> acc(lanczos_c[0], 0.0);
    for (int k = 1; k < 9; ++k) acc += lanczos_c[k] / (z - 1.0 + double(k));
    const std::complex<double> t = z + (lanczos_g - 0.5);
    return 0.5 * std::log(2.0 * pi_v) + (z - 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace detail

/// log Gamma(z) for complex z, poles at the non-positive integers excluded.
/// exp(log_gamma(z)) reproduces Gamma(z); for Re z < 1/2 the reflection
/// formula is used, so the imaginary part may differ from the principal
/// branch by a multiple of 2*pi (irrelevant once exponentiated).
inline std::complex<double> log_gamma(std::complex<double> z) {
    if (z.imag() == 0.0 && detail::is_nonpositive_integer(z.real()))
        throw std::domain_error("log_gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return detail::lanczos_log_gamma_half_plane(z);
    // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
    const std::complex<double> s = std::sin(detail::pi_v * z);
    return std::log(detail::pi_v) - std::log(s) -
           detail::lanczos_log_gamma_half_plane(1.0 - z);
}

inline std::complex<double> log_gamma(double x) {
    return log_gamma(std::complex<double>(x, 0.0));
}

/// log |Gamma(x)| together with the sign of Gamma(x), for real non-pole x.
struct SignedLogGamma {
    double log_abs;
    int sign;  // +1 or -1
};

inline SignedLogGamma lgamma_signed(double x) {
    if (detail::is_nonpositive_integer(x))
        throw std::domain_error("lgamma_signed: pole at non-positive integer");
    int sign = 1;
    if (x < 0.0) {
        // Gamma is negative on (-1,0), positive on (-2,-1), ...
        const long long k = static_cast<long long>(std::floor(x));
        sign = (k % 2 == 0) ? 1 : -1;
    }
    return {std::lgamma(x), sign};
}

/// Gamma(x) for real non-pole x (moderate arguments).
inline double real_gamma(double x) {
    const auto [la, s] = lgamma_signed(x);
    return s * std::exp(la);
}

/// 1/Gamma(x), entire in x: returns 0 at the non-positive integers.
inline double rgamma(double x) {
    if (detail::is_nonpositive_integer(x)) return 0.0;
    const auto [la, s] = lgamma_signed(x);
    return s * std::exp(-la);
}

/// Gamma(num)/Gamma(den) computed in log space; safe for large positive
/// arguments where the gammas themselves would overflow.  For huge arguments
/// the naive lgamma difference loses ~|lgamma|*eps absolute, so the ratio is
/// expanded as d*log(x) + (x+d-1/2)*log1p(d/x) - d + O(1/x) instead.
inline double gamma_ratio(double num, double den) {
    if (num > 1e8 && den > 1e8) {
        const double x = den, d = num - den;
        const double log_ratio = d * std::log(x) + (x + d - 0.5) * std::log1p(d / x) - d +
                                 (1.0 / (12.0 * (x + d)) - 1.0 / (12.0 * x));
        return std::exp(log_ratio);
    }
    const auto n = lgamma_signed(num);
    const auto d = lgamma_signed(den);
    return n.sign * d.sign * std::exp(n.log_abs - d.log_abs);
}

namespace detail {

inline double hyp2f1_series(double a, double b, double c, double z, int budget) {
    double term = 1.0, sum = 1.0;
    int small_count = 0;
    for (int n = 0; n < budget; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
        if (std::abs(term) <= 1e-16 * std::abs(sum)) {
            if (++small_count >= 2) return sum;
        } else {
            small_count = 0;
        }
        if (!std::isfinite(sum)) break;
    }
    throw NonConvergenceError("gauss_2f1: series did not converge within budget");
}

// Connection formula in powers of 1-z, valid when c-a-b is not an integer.
inline double hyp2f1_one_minus_z(double a, double b, double c, double z, int budget) {
    const double w = 1.0 - z;
    const double cab = c - a - b;
    const auto lc = lgamma_signed(c);

    double f1 = 0.0;
    if (rgamma(c - a) != 0.0 && rgamma(c - b) != 0.0) {
        const auto l1 = lgamma_signed(cab);
        const auto l2 = lgamma_signed(c - a);
        const auto l3 = lgamma_signed(c - b);
        const double coef = lc.sign * l1.sign * l2.sign * l3.sign *
                            std::exp(lc.log_abs + l1.log_abs - l2.log_abs - l3.log_abs);
        f1 = coef * hyp2f1_series(a, b, a + b - c + 1.0, w, budget);
    }
    double f2 = 0.0;
    if (rgamma(a) != 0.0 && rgamma(b) != 0.0) {
        const auto l1 = lgamma_signed(-cab);
        const auto l2 = lgamma_signed(a);
        const auto l3 = lgamma_signed(b);
        const double coef = lc.sign * l1.sign * l2.sign * l3.sign *
                            std::exp(lc.log_abs + l1.log_abs - l2.log_abs - l3.log_abs);
        f2 = coef * std::pow(w, cab) * hyp2f1_series(c - a, c - b, cab + 1.0, w, budget);
    }
    return f1 + f2;
}

inline double hyp2f1_dispatch(double a, double b, double c, double z, int budget);

// Pfaff transformation mapping z < 0 into [0,1).
inline double hyp2f1_negative_z(double a, double b, double c, double z, int budget) {
    const double w = z / (z - 1.0);
    if (std::abs(a) <= std::abs(b))
        return std::pow(1.0 - z, -a) * hyp2f1_dispatch(a, c - b, c, w, budget);
    return std::pow(1.0 - z, -b) * hyp2f1_dispatch(c - a, b, c, w, budget);
}

inline double hyp2f1_dispatch(double a, double b, double c, double z, int budget) {
    if (z == 0.0 || a == 0.0 || b == 0.0) return 1.0;
    if (c == a) return std::pow(1.0 - z, -b);
    if (c == b) return std::pow(1.0 - z, -a);
    if (z < 0.0) return hyp2f1_negative_z(a, b, c, z, budget);
    if (z <= 0.6) return hyp2f1_series(a, b, c, z, budget);

    const double cab = c - a - b;
    const bool cab_integral = std::abs(cab - std::round(cab)) < 1e-8;
    if (!cab_integral) return hyp2f1_one_minus_z(a, b, c, z, budget);
    // degenerate connection coefficients: fall back to the (slow) direct
    // series, which still converges for |z| < 1
    if (z <= 0.95) return hyp2f1_series(a, b, c, z, 4 * budget);
    throw NonConvergenceError(
        "gauss_2f1: z near 1 with integral c-a-b is not supported");
}

}  // namespace detail

/// Gauss hypergeometric function 2F1(a,b;c;z) for real parameters and
/// real argument z < 1.  Power series on [0, 0.6]; the 1-z connection
/// formula covers z in (0.6, 1); for z < 0 a Pfaff transformation maps the
/// argument back into [0, 1), which realises the analytic continuation.
inline double gauss_2f1(double a, double b, double c, double z, int budget = 10000) {
    if (detail::is_nonpositive_integer(c))
        throw std::domain_error("gauss_2f1: c must not be a non-positive integer");
    if (!(z < 1.0)) throw std::domain_error("gauss_2f1: requires z < 1");
    return detail::hyp2f1_dispatch(a, b, c, z, budget);
}

}  // namespace stablefp
