#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "stablefp/special_functions.hpp"
#include "stablefp/stable_process.hpp"

namespace stablefp {

/// Levy density of xi*, the Lamperti transform of the stable process
/// absorbed below zero:
///   c_plus  e^x (e^x - 1)^{-(alpha+1)}  for x > 0,
///   c_minus e^x (1 - e^x)^{-(alpha+1)}  for x < 0.
inline double xi_star_levy_density(const StableParams& p, double x) {
    if (x == 0.0) throw std::domain_error("xi_star_levy_density: x must be nonzero");
    const double ex = std::exp(x);
    if (x > 0.0) return p.c_plus * ex * std::pow(ex - 1.0, -(p.alpha + 1.0));
    return p.c_minus * ex * std::pow(1.0 - ex, -(p.alpha + 1.0));
}

/// Killing rate of xi*: c_minus/alpha = Gamma(alpha)/(Gamma(alpha rho_hat)
/// Gamma(1 - alpha rho_hat)).
inline double xi_star_killing_rate(const StableParams& p) {
    return p.c_minus / p.alpha;
}

/// Characteristic function of the jump distribution of the compound Poisson
/// component of xi:
///   sin(pi alpha rho)/(pi Gamma(alpha)) *
///   Gamma(1 - alpha rho + i theta) Gamma(alpha rho - i theta)
///   Gamma(1 + i theta) Gamma(alpha - i theta).
inline std::complex<double> jump_cf(const StableParams& p, double theta) {
    const double ar = p.alpha_rho();
    const std::complex<double> it(0.0, theta);
    const std::complex<double> lg = log_gamma(1.0 - ar + it) + log_gamma(ar - it) +
                                    log_gamma(1.0 + it) + log_gamma(p.alpha - it);
    const double pref = std::sin(detail::pi_v * ar) / (detail::pi_v * real_gamma(p.alpha));
    return pref * std::exp(lg);
}

/// Density of the compound Poisson jump distribution,
///   alpha/(Gamma(ar) Gamma(1-ar)) * Gamma(ar+1) Gamma(arh+1)/Gamma(alpha+2)
///   * e^{-ar x} 2F1(1, ar+1; alpha+2; 1 - e^{-x}),
/// with ar = alpha rho, arh = alpha rho_hat; the hypergeometric argument is
/// continued analytically for x < 0.
inline double jump_density(const StableParams& p, double x) {
    const double ar = p.alpha_rho();
    const double arh = p.alpha_rho_hat();
    const double pref = p.alpha * std::sin(detail::pi_v * ar) / detail::pi_v *
                        real_gamma(ar + 1.0) * real_gamma(arh + 1.0) *
                        rgamma(p.alpha + 2.0);
    const double z = -std::expm1(-x);  // 1 - e^{-x}
    if (z >= 1.0) {
        // e^{-x} below machine epsilon: use the Gauss limit of the series,
        // 2F1(1, ar+1; alpha+2; 1) = Gamma(alpha+2)Gamma(arh)/(Gamma(alpha+1)Gamma(arh+1))
        const double limit = real_gamma(p.alpha + 2.0) * real_gamma(arh) *
                             rgamma(p.alpha + 1.0) * rgamma(arh + 1.0);
        return pref * std::exp(-ar * x) * limit;
    }
    return pref * std::exp(-ar * x) * gauss_2f1(1.0, ar + 1.0, p.alpha + 2.0, z);
}

/// Jump law bundle: density and characteristic function as callables.
struct JumpLaw {
    std::function<double(double)> density;
    std::function<std::complex<double>(double)> cf;
};

inline JumpLaw make_jump_law(const StableParams& p) {
    return {[p](double x) { return jump_density(p, x); },
            [p](double theta) { return jump_cf(p, theta); }};
}

/// Characteristic exponent of xi^L (xi* with the independent killing removed):
///   Gamma(alpha - i theta) Gamma(1 + i theta) /
///   (Gamma(alpha rho_hat - i theta) Gamma(1 - alpha rho_hat + i theta))
///   - Gamma(alpha)/(Gamma(alpha rho_hat) Gamma(1 - alpha rho_hat)).
inline std::complex<double> psi_L(const StableParams& p, double theta) {
    const double arh = p.alpha_rho_hat();
    const std::complex<double> it(0.0, theta);
    const std::complex<double> lg = log_gamma(p.alpha - it) + log_gamma(1.0 + it) -
                                    log_gamma(arh - it) - log_gamma(1.0 - arh + it);
    return std::exp(lg) - xi_star_killing_rate(p);
}

/// Characteristic exponent of the compound Poisson component xi^C.
inline std::complex<double> psi_C(const StableParams& p, double theta) {
    return xi_star_killing_rate(p) * (1.0 - jump_cf(p, theta));
}

/// Characteristic exponent of xi in product form,
///   Gamma(alpha rho - i theta)/Gamma(-i theta) *
///   Gamma(1 - alpha rho + i theta)/Gamma(1 - alpha + i theta),
/// with 1/Gamma(0) = 0 so that psi_xi(0) = 0.  Equals psi_L + psi_C.
inline std::complex<double> psi_xi(const StableParams& p, double theta) {
    if (theta == 0.0) return {0.0, 0.0};
    const double ar = p.alpha_rho();
    const std::complex<double> it(0.0, theta);
    const std::complex<double> lg = log_gamma(ar - it) - log_gamma(-it) +
                                    log_gamma(1.0 - ar + it) - log_gamma(1.0 - p.alpha + it);
    return std::exp(lg);
}

}  // namespace stablefp
