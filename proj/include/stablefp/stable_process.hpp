#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "stablefp/rng.hpp"
#include "stablefp/special_functions.hpp"

namespace stablefp {

/// Strictly alpha-stable process normalised by (alpha, rho), where rho is the
/// positivity parameter P(X_t >= 0).  The jump intensities are
///   c_plus  = Gamma(alpha+1) / (Gamma(alpha rho) Gamma(1 - alpha rho)),
///   c_minus = Gamma(alpha+1) / (Gamma(alpha rho_hat) Gamma(1 - alpha rho_hat)),
/// with rho_hat = 1 - rho.  Spectrally one-sided boundary values are excluded,
/// and alpha = 1 is restricted to the symmetric Cauchy case rho = 1/2.
struct StableParams {
    double alpha;
    double rho;
    double rho_hat;
    double c_plus;
    double c_minus;

    double alpha_rho() const { return alpha * rho; }
    double alpha_rho_hat() const { return alpha * rho_hat; }
};

/// Boundary case rho = 1/alpha for alpha in (1,2).  Kept as a distinct type:
/// it is legal only for the one-sided hitting law, never for the formulas
/// that require (alpha, rho) in the interior of the admissible set.
struct SpectrallyNegativeParams {
    double alpha;

    explicit SpectrallyNegativeParams(double a) : alpha(a) {
        if (!(a > 1.0 && a < 2.0))
            throw std::domain_error("SpectrallyNegativeParams: alpha must lie in (1,2)");
    }
    double rho() const { return 1.0 / alpha; }
};

inline StableParams validate_params(double alpha, double rho) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::domain_error("validate_params: alpha must lie in (0,2), got " +
                                std::to_string(alpha));
    if (alpha == 1.0) {
        if (rho != 0.5)
            throw std::domain_error("validate_params: alpha = 1 requires rho = 1/2");
    } else if (alpha < 1.0) {
        if (!(rho > 0.0 && rho < 1.0))
            throw std::domain_error("validate_params: rho must lie in (0,1) for alpha < 1");
    } else {
        if (!(rho > 1.0 - 1.0 / alpha && rho < 1.0 / alpha))
            throw std::domain_error(
                "validate_params: rho must lie in (1 - 1/alpha, 1/alpha) for alpha > 1");
    }
    StableParams p;
    p.alpha = alpha;
    p.rho = rho;
    p.rho_hat = 1.0 - rho;
    // 1/(Gamma(x) Gamma(1-x)) = sin(pi x)/pi
    p.c_plus = real_gamma(alpha + 1.0) * std::sin(detail::pi_v * alpha * rho) / detail::pi_v;
    p.c_minus =
        real_gamma(alpha + 1.0) * std::sin(detail::pi_v * alpha * p.rho_hat) / detail::pi_v;
    return p;
}

/// Characteristic exponent Psi(theta) = -log E exp(i theta X_1).  In the
/// (alpha, rho) normalisation it takes the polar form
///   Psi(theta) = |theta|^alpha exp(-i pi alpha (2 rho - 1)/2 * sgn theta),
/// equal to c |theta|^alpha (1 - i beta tan(pi alpha/2) sgn theta) with
/// beta = (c_plus - c_minus)/(c_plus + c_minus) and
/// c = cos(pi alpha (2 rho - 1)/2); for alpha = 1 it is |theta|.
inline std::complex<double> char_exponent(const StableParams& p, double theta) {
    if (theta == 0.0) return {0.0, 0.0};
    const double at = std::pow(std::abs(theta), p.alpha);
    const double phase =
        -0.5 * detail::pi_v * p.alpha * (p.rho - p.rho_hat) * (theta > 0 ? 1.0 : -1.0);
    return std::polar(at, phase);
}

/// Levy density c_plus x^{-(alpha+1)} on x > 0, c_minus |x|^{-(alpha+1)} on x < 0.
inline double levy_density(const StableParams& p, double x) {
    if (x == 0.0) throw std::domain_error("levy_density: x must be nonzero");
    const double c = x > 0.0 ? p.c_plus : p.c_minus;
    return c * std::pow(std::abs(x), -(p.alpha + 1.0));
}

/// Chambers-Mallows-Stuck sampler for increments of X, re-parameterised so
/// that the draws match exp(-dt * Psi(theta)) in the (alpha, rho)
/// normalisation.  The textbook sampler produces S_alpha(sigma=1, beta, 0)
/// with exponent |theta|^alpha (1 - i beta tan(pi alpha/2) sgn theta); the
/// conversion is
///   zeta  = beta tan(pi alpha/2) = tan(pi alpha (2 rho - 1)/2),
///   scale = (cos(pi alpha (2 rho - 1)/2) * dt)^(1/alpha),
/// and for alpha = 1 the draw is dt times a standard Cauchy variate.
class IncrementSampler {
  public:
    IncrementSampler(const StableParams& p, double dt) : alpha_(p.alpha) {
        if (!(dt > 0.0)) throw std::domain_error("IncrementSampler: dt must be positive");
        if (alpha_ == 1.0) {
            scale_ = dt;
            return;
        }
        const double zeta = std::tan(0.5 * detail::pi_v * alpha_ * (p.rho - p.rho_hat));
        b_ = std::atan(zeta) / alpha_;
        s_ = std::pow(1.0 + zeta * zeta, 0.5 / alpha_);
        const double c0 = std::cos(0.5 * detail::pi_v * alpha_ * (p.rho - p.rho_hat));
        scale_ = std::pow(c0 * dt, 1.0 / alpha_);
        k_ = (1.0 - alpha_) / alpha_;
    }

    double operator()(Rng& rng) const {
        const double u = rng.uniform_angle();
        if (alpha_ == 1.0) return scale_ * std::tan(u);
        const double w = rng.exponential();
        const double t = alpha_ * (u + b_);
        const double z = s_ * std::sin(t) / std::pow(std::cos(u), 1.0 / alpha_) *
                         std::pow(std::cos(u - t) / w, k_);
        return scale_ * z;
    }

  private:
    double alpha_;
    double scale_;
    double b_ = 0.0;
    double s_ = 1.0;
    double k_ = 0.0;
};

/// Single increment X_dt; for bulk use construct an IncrementSampler once.
inline double sample_increment(const StableParams& p, double dt, Rng& rng) {
    return IncrementSampler(p, dt)(rng);
}

}  // namespace stablefp
