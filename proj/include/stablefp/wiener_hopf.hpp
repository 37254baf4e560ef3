#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "stablefp/lamperti.hpp"
#include "stablefp/laplace_exponent.hpp"
#include "stablefp/quadrature.hpp"
#include "stablefp/special_functions.hpp"
#include "stablefp/stable_process.hpp"

namespace stablefp {

enum class Regime { SmallAlpha, LargeAlpha };  // alpha in (0,1] vs alpha in (1,2)

enum class LadderSide { Ascending, Descending };

inline Regime regime_of(const StableParams& p) {
    return p.alpha <= 1.0 ? Regime::SmallAlpha : Regime::LargeAlpha;
}

/// Levy density of the ascending/descending ladder height process of xi.
/// Small regime:
///   asc:  -1/Gamma(-ar)  * e^x      (e^x - 1)^{-(ar+1)}
///   desc: -1/Gamma(-arh) * e^{a x}  (e^x - 1)^{-(arh+1)}
/// Large regime:
///   asc:  (e^x-1)^{-(ar+1)} /Gamma(1-ar)   * (a - 1 + (1-arh) e^x)
///   desc: e^{(a-1)x} (e^x-1)^{-(arh+1)} /Gamma(1-arh) * (a - 1 + (1-ar) e^x)
/// with ar = alpha rho, arh = alpha rho_hat, a = alpha.
inline double ladder_levy_density(const StableParams& p, LadderSide side, double x) {
    if (!(x > 0.0)) throw std::domain_error("ladder_levy_density: x must be positive");
    const double ar = p.alpha_rho();
    const double arh = p.alpha_rho_hat();
    const double ex = std::exp(x);
    const double em1 = std::expm1(x);
    if (p.alpha <= 1.0) {
        if (side == LadderSide::Ascending)
            return -1.0 / real_gamma(-ar) * ex * std::pow(em1, -(ar + 1.0));
        return -1.0 / real_gamma(-arh) * std::exp(p.alpha * x) * std::pow(em1, -(arh + 1.0));
    }
    if (side == LadderSide::Ascending)
        return std::pow(em1, -(ar + 1.0)) / real_gamma(1.0 - ar) *
               (p.alpha - 1.0 + (1.0 - arh) * ex);
    return std::exp((p.alpha - 1.0) * x) * std::pow(em1, -(arh + 1.0)) /
           real_gamma(1.0 - arh) * (p.alpha - 1.0 + (1.0 - ar) * ex);
}

/// Renewal density of the ladder height process (density of the expected
/// occupation measure).  The large-regime tail integrals
/// int_x^inf e^{c z} (e^z - 1)^{g-2} dz are evaluated after u = e^{-z},
/// which turns them into finite Beta-type integrals
/// int_0^{e^{-x}} u^{1-alpha} (1-u)^{g-2} du.
inline double renewal_density(const StableParams& p, LadderSide side, double x,
                              double tol = 1e-12) {
    if (!(x > 0.0)) throw std::domain_error("renewal_density: x must be positive");
    const double ar = p.alpha_rho();
    const double arh = p.alpha_rho_hat();
    const double emx = std::exp(-x);
    if (p.alpha <= 1.0) {
        if (side == LadderSide::Ascending)
            return rgamma(ar) * std::pow(-std::expm1(-x), ar - 1.0);
        return rgamma(arh) * std::pow(-std::expm1(-x), arh - 1.0) *
               std::exp(-(1.0 - p.alpha) * x);
    }
    if (side == LadderSide::Ascending) {
        auto f = [&](double u) { return std::pow(u, 1.0 - p.alpha) * std::pow(1.0 - u, ar - 2.0); };
        const double tail = integrate_beta(f, 0.0, emx, 2.0 - p.alpha, 1.0, tol).value;
        return std::exp(-(p.alpha - 1.0) * x) *
               (gamma_ratio(2.0 - p.alpha, 1.0 - arh) + (1.0 - ar) * rgamma(ar) * tail);
    }
    auto f = [&](double u) { return std::pow(u, 1.0 - p.alpha) * std::pow(1.0 - u, arh - 2.0); };
    const double tail = integrate_beta(f, 0.0, emx, 2.0 - p.alpha, 1.0, tol).value;
    return gamma_ratio(2.0 - p.alpha, 1.0 - ar) + (1.0 - arh) * rgamma(arh) * tail;
}

/// Wiener-Hopf factors of xi together with the ladder Levy and renewal
/// densities of both ladder height processes.
struct WienerHopfPair {
    Regime regime;
    LaplaceExponent kappa;
    LaplaceExponent kappa_hat;
    std::function<double(double)> asc_levy_density;
    std::function<double(double)> desc_levy_density;
    std::function<double(double)> asc_renewal_density;
    std::function<double(double)> desc_renewal_density;
};

/// Ascending factor kappa evaluated at a complex argument through the
/// analytic Gamma-ratio formula (used for the factorisation identity).
inline std::complex<double> kappa_complex(const StableParams& p, std::complex<double> s) {
    const double ar = p.alpha_rho();
    if (p.alpha <= 1.0) {
        if (s == std::complex<double>(0.0, 0.0)) return {0.0, 0.0};
        return std::exp(log_gamma(ar + s) - log_gamma(s));
    }
    return (p.alpha - 1.0 + s) * std::exp(log_gamma(ar + s) - log_gamma(1.0 + s));
}

/// Descending factor kappa_hat at a complex argument.
inline std::complex<double> kappa_hat_complex(const StableParams& p, std::complex<double> s) {
    const double ar = p.alpha_rho();
    if (p.alpha <= 1.0) {
        if (p.alpha == 1.0 && s == std::complex<double>(0.0, 0.0)) return {0.0, 0.0};
        return std::exp(log_gamma(1.0 - ar + s) - log_gamma(1.0 - p.alpha + s));
    }
    return s * std::exp(log_gamma(1.0 - ar + s) - log_gamma(2.0 - p.alpha + s));
}

/// Wiener-Hopf factorisation of xi, dispatching on the regime:
///   alpha in (0,1]: kappa(l) = Gamma(ar+l)/Gamma(l),
///                   kappa_hat(l) = Gamma(1-ar+l)/Gamma(1-alpha+l);
///   alpha in (1,2): kappa(l) = (alpha-1+l) Gamma(ar+l)/Gamma(1+l),
///                   kappa_hat(l) = l Gamma(1-ar+l)/Gamma(2-alpha+l).
/// alpha = 1 sits in the small regime; its kappa_hat killing rate is the
/// continuous limit 0.
inline WienerHopfPair factors(const StableParams& p) {
    WienerHopfPair wh;
    wh.regime = regime_of(p);
    const double ar = p.alpha_rho();
    const double alpha = p.alpha;

    if (wh.regime == Regime::SmallAlpha) {
        wh.kappa = LaplaceExponent(
            [ar](double l) { return l == 0.0 ? 0.0 : gamma_ratio(ar + l, l); },
            [p](double x) { return ladder_levy_density(p, LadderSide::Ascending, x); });
        wh.kappa_hat = LaplaceExponent(
            [ar, alpha](double l) {
                const double den = 1.0 - alpha + l;
                if (den == 0.0) return 0.0;  // alpha = 1, l = 0
                return gamma_ratio(1.0 - ar + l, den);
            },
            [p](double x) { return ladder_levy_density(p, LadderSide::Descending, x); });
    } else {
        wh.kappa = LaplaceExponent(
            [ar, alpha](double l) { return (alpha - 1.0 + l) * gamma_ratio(ar + l, 1.0 + l); },
            [p](double x) { return ladder_levy_density(p, LadderSide::Ascending, x); });
        wh.kappa_hat = LaplaceExponent(
            [ar, alpha](double l) {
                return l == 0.0 ? 0.0 : l * gamma_ratio(1.0 - ar + l, 2.0 - alpha + l);
            },
            [p](double x) { return ladder_levy_density(p, LadderSide::Descending, x); });
    }
    wh.asc_levy_density = [p](double x) { return ladder_levy_density(p, LadderSide::Ascending, x); };
    wh.desc_levy_density = [p](double x) { return ladder_levy_density(p, LadderSide::Descending, x); };
    wh.asc_renewal_density = [p](double x) { return renewal_density(p, LadderSide::Ascending, x); };
    wh.desc_renewal_density = [p](double x) { return renewal_density(p, LadderSide::Descending, x); };
    return wh;
}

/// Relative residual of the factorisation identity
/// Psi(theta) = kappa(-i theta) kappa_hat(i theta):
/// returns |Psi - kappa kappa_hat| / (1 + |Psi|).
inline double verify_factorisation(const StableParams& p, double theta) {
    const std::complex<double> psi = psi_xi(p, theta);
    const std::complex<double> it(0.0, theta);
    const std::complex<double> prod = kappa_complex(p, -it) * kappa_hat_complex(p, it);
    return std::abs(psi - prod) / (1.0 + std::abs(psi));
}

}  // namespace stablefp
