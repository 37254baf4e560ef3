#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>

#include "stablefp/quadrature.hpp"
#include "stablefp/special_functions.hpp"
#include "stablefp/stable_process.hpp"

namespace stablefp {

/// A hitting law on an interval: a density on (lo, hi), an optional boundary
/// atom, and the total mass (1 when hitting is almost sure, less when the
/// process can avoid the set).
struct HittingLaw {
    std::function<double(double)> density;
    double lo = -1.0;
    double hi = 1.0;
    std::optional<double> atom_location;
    double atom_mass = 0.0;
    double total_mass = 1.0;
};

namespace detail {

/// int_0^r t^{a-1} (1-t)^{-c} dt with 0 <= r < 1 (or r = 1 when c < 1).
/// Every closed-form integral below reduces to this shape.  For r close to 1
/// the steep upper part is integrated in the distance variable v = 1 - t
/// (the subtraction 1 - r is exact there), which keeps full accuracy even
/// when 1 - r is at the 1e-16 scale.
inline double beta_type_integral(double a, double c, double r, double tol = 1e-13) {
    if (r == 0.0) return 0.0;
    if (!(r > 0.0) || r > 1.0)
        throw std::domain_error("beta_type_integral: upper limit must lie in [0,1]");
    if (r == 1.0 && c >= 1.0)
        throw std::domain_error("beta_type_integral: divergent at r = 1 for c >= 1");
    auto f = [a, c](double t) { return std::pow(t, a - 1.0) * std::pow(1.0 - t, -c); };
    if (r <= 0.6) return integrate_beta(f, 0.0, r, a, 1.0, tol).value;

    const double head = integrate_beta(f, 0.0, 0.6, a, 1.0, tol).value;
    auto g = [a, c](double v) { return std::pow(1.0 - v, a - 1.0) * std::pow(v, -c); };
    const double vlo = 1.0 - r;  // exact (Sterbenz)
    const double tail = vlo == 0.0
                            ? integrate_beta(g, 0.0, 0.4, 1.0 - c, 1.0, tol).value
                            : integrate(g, vlo, 0.4, tol, 20000).value;
    return head + tail;
}

/// int_1^x (t-1)^{a-1} (t+1)^{b-1} dt, evaluated after s = (t-1)/(t+1) as
/// 2^{a+b-1} int_0^{(x-1)/(x+1)} s^{a-1} (1-s)^{-(a+b)} ds.
inline double off_interval_integral(double a, double b, double x, double tol = 1e-13) {
    if (!(x >= 1.0)) throw std::domain_error("off_interval_integral: x must be >= 1");
    const double r = (x - 1.0) / (x + 1.0);
    return std::pow(2.0, a + b - 1.0) * beta_type_integral(a, a + b, r, tol);
}

}  // namespace detail

/// Density at y in (-1,1) of the position of first entry into (-1,1) from
/// x > 1.  For alpha <= 1 this is
///   sin(pi arh)/pi (x+1)^{ar} (x-1)^{arh} (1+y)^{-ar} (1-y)^{-arh} (x-y)^{-1};
/// for alpha in (1,2) the same expression minus
///   (alpha-1) sin(pi arh)/pi (1+y)^{-ar} (1-y)^{-arh}
///     int_1^x (t-1)^{arh-1} (t+1)^{ar-1} dt.
inline double interval_hitting_density(const StableParams& p, double x, double y) {
    if (!(x > 1.0)) throw std::domain_error("interval_hitting_density: requires x > 1");
    if (!(y > -1.0 && y < 1.0))
        throw std::domain_error("interval_hitting_density: requires y in (-1,1)");
    const double ar = p.alpha_rho();
    const double arh = p.alpha_rho_hat();
    const double s = std::sin(detail::pi_v * arh) / detail::pi_v;
    const double envelope = std::pow(1.0 + y, -ar) * std::pow(1.0 - y, -arh);
    double v = s * std::pow(x + 1.0, ar) * std::pow(x - 1.0, arh) * envelope / (x - y);
    if (p.alpha > 1.0)
        v -= (p.alpha - 1.0) * s * envelope * detail::off_interval_integral(arh, ar, x);
    return v;
}

/// Probability of never entering (-1,1) from x > 1, for alpha in (0,1):
///   Gamma(1-ar)/(Gamma(arh) Gamma(1-alpha)) *
///   int_0^{(x-1)/(x+1)} t^{arh-1} (1-t)^{-alpha} dt.
inline double interval_avoidance_prob(const StableParams& p, double x) {
    if (!(p.alpha < 1.0))
        throw std::domain_error("interval_avoidance_prob: requires alpha < 1");
    if (!(x > 1.0)) throw std::domain_error("interval_avoidance_prob: requires x > 1");
    const double ar = p.alpha_rho();
    const double arh = p.alpha_rho_hat();
    const double pref = real_gamma(1.0 - ar) * rgamma(arh) * rgamma(1.0 - p.alpha);
    return pref * detail::beta_type_integral(arh, p.alpha, (x - 1.0) / (x + 1.0));
}

/// Full hitting law of the interval starting from x > 1 (no atom); total mass
/// is 1 for alpha in [1,2) and 1 minus the avoidance probability for
/// alpha < 1.
inline HittingLaw interval_hitting_law(const StableParams& p, double x) {
    HittingLaw law;
    law.lo = -1.0;
    law.hi = 1.0;
    law.density = [p, x](double y) { return interval_hitting_density(p, x, y); };
    law.total_mass = p.alpha < 1.0 ? 1.0 - interval_avoidance_prob(p, x) : 1.0;
    return law;
}

/// Hitting law of [-1,1] for the spectrally negative boundary case
/// rho = 1/alpha: an absolutely continuous part on (-1,1) plus an atom at -1
/// of mass sin(pi(alpha-1))/pi int_0^{(x-1)/(x+1)} t^{alpha-2} (1-t)^{1-alpha} dt.
inline HittingLaw spectrally_negative_hitting(const SpectrallyNegativeParams& sp, double x) {
    if (!(x > 1.0)) throw std::domain_error("spectrally_negative_hitting: requires x > 1");
    const double a = sp.alpha;
    const double s = std::sin(detail::pi_v * (a - 1.0)) / detail::pi_v;
    HittingLaw law;
    law.lo = -1.0;
    law.hi = 1.0;
    law.density = [a, s, x](double y) {
        if (!(y > -1.0 && y < 1.0))
            throw std::domain_error("spectrally_negative_hitting: y outside (-1,1)");
        return s * std::pow(x - 1.0, a - 1.0) * std::pow(1.0 - y, 1.0 - a) / (x - y);
    };
    law.atom_location = -1.0;
    law.atom_mass =
        s * detail::beta_type_integral(a - 1.0, a - 1.0, (x - 1.0) / (x + 1.0));
    law.total_mass = 1.0;
    return law;
}

/// Killed potential density u(x, y) = E_x int_0^{tau} 1{X_t in dy} dt / dy
/// for alpha in (0,1], where tau is the first entry time into (-1,1).
/// Defined for x, y > 1 (and for x, y < -1 through duality: reflect the
/// space and swap rho with rho_hat).  The density may diverge at y = x, so
/// that point is refused.
inline double killed_potential_density(const StableParams& p, double x, double y) {
    if (!(p.alpha <= 1.0))
        throw std::domain_error("killed_potential_density: requires alpha <= 1");
    if (x < -1.0 && y < -1.0) {
        const StableParams dual = validate_params(p.alpha, p.rho_hat);
        return killed_potential_density(dual, -x, -y);
    }
    if (!(x > 1.0) || !(y > 1.0))
        throw std::domain_error(
            "killed_potential_density: requires x, y > 1 (or both < -1)");
    if (y == x)
        throw std::domain_error("killed_potential_density: refuses the diagonal y = x");
    const double ar = p.alpha_rho();
    const double arh = p.alpha_rho_hat();
    const double pref = rgamma(ar) * rgamma(arh) * std::pow(std::abs(x - y), p.alpha - 1.0);
    if (y < x) {
        const double r = (y - 1.0) * (x + 1.0) / ((y + 1.0) * (x - 1.0));
        return pref * detail::beta_type_integral(ar, p.alpha, r);
    }
    const double r = (y + 1.0) * (x - 1.0) / ((y - 1.0) * (x + 1.0));
    return pref * detail::beta_type_integral(arh, p.alpha, r);
}

/// P_x(hit 0 before passing above 1), alpha in (1,2):
///   (alpha-1) x^{alpha-1}    int_1^{1/x}   (t-1)^{ar-1}  t^{arh-1} dt   (0 < x < 1),
///   (alpha-1) (-x)^{alpha-1} int_1^{1-1/x} (t-1)^{arh-1} t^{ar-1}  dt   (x < 0).
inline double hit_zero_before_up_prob(const StableParams& p, double x, double tol = 1e-12) {
    if (!(p.alpha > 1.0))
        throw std::domain_error("hit_zero_before_up_prob: requires alpha > 1");
    if (!(x < 1.0) || x == 0.0)
        throw std::domain_error("hit_zero_before_up_prob: requires x < 1, x != 0");
    const double ar = p.alpha_rho();
    const double arh = p.alpha_rho_hat();
    const double a = x > 0.0 ? ar : arh;
    const double b = x > 0.0 ? arh : ar;
    const double upper = x > 0.0 ? 1.0 / x : 1.0 - 1.0 / x;
    auto f = [a, b](double t) {
        return std::pow(t - 1.0, a - 1.0) * std::pow(t, b - 1.0);
    };
    const double integral = integrate_beta(f, 1.0, upper, a, 1.0, tol).value;
    return (p.alpha - 1.0) * std::pow(std::abs(x), p.alpha - 1.0) * integral;
}

/// Rogozin's law of first passage above level 1 from x < 1: density in the
/// landing position y > 1,
///   sin(pi ar)/pi (1-x)^{ar} (y-1)^{-ar} (y-x)^{-1}.
inline double rogozin_overshoot_density(const StableParams& p, double x, double y) {
    if (!(x < 1.0 && y > 1.0))
        throw std::domain_error("rogozin_overshoot_density: requires x < 1 < y");
    const double ar = p.alpha_rho();
    return std::sin(detail::pi_v * ar) / detail::pi_v * std::pow(1.0 - x, ar) *
           std::pow(y - 1.0, -ar) / (y - x);
}

/// Density of the position of first passage above 1 on the event that zero
/// has not yet been hit (alpha in (1,2)): the Rogozin density minus
/// sin(pi ar)/pi (y-1)^{-ar} y^{-1} times the hitting probability of zero.
inline double passage_density_avoiding_zero(const StableParams& p, double x, double y) {
    if (!(p.alpha > 1.0))
        throw std::domain_error("passage_density_avoiding_zero: requires alpha > 1");
    if (!(x < 1.0) || x == 0.0 || !(y > 1.0))
        throw std::domain_error(
            "passage_density_avoiding_zero: requires x < 1, x != 0, y > 1");
    const double ar = p.alpha_rho();
    const double correction = std::sin(detail::pi_v * ar) / detail::pi_v *
                              std::pow(y - 1.0, -ar) / y * hit_zero_before_up_prob(p, x);
    return rogozin_overshoot_density(p, x, y) - correction;
}

/// Density of the position of xi at first passage below a < 0, alpha <= 1:
///   f(a, w) = 1/(Gamma(arh) Gamma(1-arh)) (1-e^a)^{arh} e^{(1-ar)w}
///             (1-e^w)^{-1} (e^a - e^w)^{-arh},  w < a.
inline double xi_overshoot_density_small(const StableParams& p, double a, double w) {
    if (!(p.alpha <= 1.0))
        throw std::domain_error("xi_overshoot_density_small: requires alpha <= 1");
    if (!(a < 0.0) || !(w < a))
        throw std::domain_error("xi_overshoot_density_small: requires w < a < 0");
    const double ar = p.alpha_rho();
    const double arh = p.alpha_rho_hat();
    const double pref = std::sin(detail::pi_v * arh) / detail::pi_v;
    return pref * std::pow(-std::expm1(a), arh) * std::exp((1.0 - ar) * w) /
           (-std::expm1(w)) * std::pow(std::exp(a) - std::exp(w), -arh);
}

/// Density of the overshoot w = a - xi at first passage below a < 0,
/// alpha in (1,2):
///   f(a, w) = sin(pi arh)/pi e^{-(1-ar)w} (1-e^{-w})^{-arh} *
///             [ e^{(1-alpha)a} (1-e^a)^{arh} e^{-w} (e^{-a}-e^{-w})^{-1}
///               - (ar - 1) int_0^{1-e^a} t^{arh-1} (1-t)^{1-alpha} dt ].
inline double xi_overshoot_density_large(const StableParams& p, double a, double w) {
    if (!(p.alpha > 1.0))
        throw std::domain_error("xi_overshoot_density_large: requires alpha > 1");
    if (!(a < 0.0) || !(w > 0.0))
        throw std::domain_error("xi_overshoot_density_large: requires a < 0 and w > 0");
    const double ar = p.alpha_rho();
    const double arh = p.alpha_rho_hat();
    const double pref = std::sin(detail::pi_v * arh) / detail::pi_v;
    const double direct = std::exp((1.0 - p.alpha) * a) * std::pow(-std::expm1(a), arh) *
                          std::exp(-w) / (std::exp(-a) - std::exp(-w));
    const double corr =
        (ar - 1.0) * detail::beta_type_integral(arh, p.alpha - 1.0, -std::expm1(a));
    return pref * std::exp(-(1.0 - ar) * w) * std::pow(-std::expm1(-w), -arh) *
           (direct - corr);
}

/// Potential density u(p, w) of xi killed on passing below 0, alpha <= 1:
///   (e^{p-w}-1)^{alpha-1}/(Gamma(ar)Gamma(arh)) *
///       int_0^{(1-e^{-w})/(1-e^{-p})} t^{ar-1}(1-t)^{-alpha} dt    (0 < w < p),
///   (1-e^{p-w})^{alpha-1}/(Gamma(ar)Gamma(arh)) *
///       int_0^{(1-e^{-p})/(1-e^{-w})} t^{arh-1}(1-t)^{-alpha} dt   (w > p).
inline double xi_killed_potential(const StableParams& p, double pstart, double w) {
    if (!(p.alpha <= 1.0))
        throw std::domain_error("xi_killed_potential: requires alpha <= 1");
    if (!(pstart > 0.0) || !(w > 0.0))
        throw std::domain_error("xi_killed_potential: requires pstart, w > 0");
    if (w == pstart)
        throw std::domain_error("xi_killed_potential: refuses the diagonal w = pstart");
    const double ar = p.alpha_rho();
    const double arh = p.alpha_rho_hat();
    const double gg = rgamma(ar) * rgamma(arh);
    if (w < pstart) {
        const double r = -std::expm1(-w) / (-std::expm1(-pstart));
        return gg * std::pow(std::expm1(pstart - w), p.alpha - 1.0) *
               detail::beta_type_integral(ar, p.alpha, r);
    }
    const double r = -std::expm1(-pstart) / (-std::expm1(-w));
    return gg * std::pow(-std::expm1(pstart - w), p.alpha - 1.0) *
           detail::beta_type_integral(arh, p.alpha, r);
}

/// Bounded continuous potential density of the Lamperti transform of the
/// dual process conditioned to stay positive (alpha in (1,2)):
///   u(y) = 1/(Gamma(ar)Gamma(arh)) (1-e^{-y})^{alpha-1} e^{ar y}
///            int_0^{e^{-y}} t^{ar-1} (1-t)^{-alpha} dt          (y > 0),
///   u(y) = 1/(Gamma(ar)Gamma(arh)) (1-e^{y})^{alpha-1} e^{(1-arh) y}
///            int_0^{e^{y}} t^{arh-1} (1-t)^{-alpha} dt          (y < 0).
inline double conditioned_potential_density(const StableParams& p, double y) {
    if (!(p.alpha > 1.0))
        throw std::domain_error("conditioned_potential_density: requires alpha > 1");
    if (y == 0.0)
        throw std::domain_error("conditioned_potential_density: requires y != 0");
    const double ar = p.alpha_rho();
    const double arh = p.alpha_rho_hat();
    const double gg = rgamma(ar) * rgamma(arh);
    if (y > 0.0)
        return gg * std::pow(-std::expm1(-y), p.alpha - 1.0) * std::exp(ar * y) *
               detail::beta_type_integral(ar, p.alpha, std::exp(-y));
    return gg * std::pow(-std::expm1(y), p.alpha - 1.0) * std::exp((1.0 - arh) * y) *
           detail::beta_type_integral(arh, p.alpha, std::exp(y));
}

}  // namespace stablefp
