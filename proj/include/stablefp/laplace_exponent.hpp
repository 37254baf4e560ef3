#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stablefp/special_functions.hpp"

namespace stablefp {

/// Laplace exponent of a (possibly killed) subordinator, represented as an
/// evaluable rather than a parameter record: the transforms below compose
/// exponents in ways that share no common closed parameterisation.  An
/// analytic Levy density may be attached when one is known.
class LaplaceExponent {
  public:
    using Eval = std::function<double(double)>;
    using Density = std::function<double(double)>;

    LaplaceExponent() = default;
    explicit LaplaceExponent(Eval eval, std::optional<Density> levy = std::nullopt)
        : eval_(std::move(eval)), levy_(std::move(levy)) {}

    double operator()(double lambda) const {
        if (lambda < 0.0)
            throw std::domain_error("LaplaceExponent: lambda must be nonnegative");
        return eval_(lambda);
    }

    double killing_rate() const { return eval_(0.0); }

    /// Numeric estimate of the drift lim phi(lambda)/lambda, evaluated at a
    /// large abscissa; exponents of the form Gamma-ratio have zero drift and
    /// this estimate decays like lambda^{a-1}.
    double drift(double lambda_large = 1e12) const { return eval_(lambda_large) / lambda_large; }

    bool has_levy_density() const { return levy_.has_value(); }
    double levy_density(double x) const {
        if (!levy_) throw std::logic_error("LaplaceExponent: no Levy density attached");
        if (!(x > 0.0)) throw std::domain_error("levy_density: x must be positive");
        return (*levy_)(x);
    }

  private:
    Eval eval_;
    std::optional<Density> levy_;
};

/// Lamperti-stable subordinator parameters: killing q, stability index a in
/// (0,1), shift beta <= 1 + a, jump intensity c and drift d, all generating
/// the Levy density c e^{beta x} (e^x - 1)^{-(a+1)} on x > 0.
struct LampertiStableParams {
    double q;
    double a;
    double beta;
    double c;
    double d;

    LampertiStableParams(double q_, double a_, double beta_, double c_, double d_)
        : q(q_), a(a_), beta(beta_), c(c_), d(d_) {
        if (!(a > 0.0 && a < 1.0))
            throw std::domain_error("LampertiStableParams: index a must lie in (0,1)");
        if (!(beta <= 1.0 + a))
            throw std::domain_error("LampertiStableParams: beta must satisfy beta <= 1 + a");
        if (q < 0.0 || c < 0.0 || d < 0.0)
            throw std::domain_error("LampertiStableParams: q, c, d must be nonnegative");
    }
};

/// Laplace exponent of a Lamperti-stable subordinator:
///   q + d*lambda - c Gamma(-a) [ Gamma(lambda+1-beta+a)/Gamma(lambda+1-beta)
///                                - Gamma(1-beta+a)/Gamma(1-beta) ].
/// The constant term uses 1/Gamma at its poles (zero), so beta = 1 is legal.
inline double lamperti_stable_laplace(const LampertiStableParams& lsp, double lambda) {
    if (lambda < 0.0)
        throw std::domain_error("lamperti_stable_laplace: lambda must be nonnegative");
    const double x = lambda + 1.0 - lsp.beta;
    if (detail::is_nonpositive_integer(x))
        throw std::domain_error("lamperti_stable_laplace: lambda + 1 - beta hits a pole");
    const double ratio_lambda = gamma_ratio(x + lsp.a, x);
    const double ratio_zero = real_gamma(1.0 - lsp.beta + lsp.a) * rgamma(1.0 - lsp.beta);
    return lsp.q + lsp.d * lambda -
           lsp.c * real_gamma(-lsp.a) * (ratio_lambda - ratio_zero);
}

inline LaplaceExponent make_lamperti_stable(const LampertiStableParams& lsp) {
    auto levy = [lsp](double x) {
        return lsp.c * std::exp(lsp.beta * x) * std::pow(std::expm1(x), -(lsp.a + 1.0));
    };
    return LaplaceExponent([lsp](double l) { return lamperti_stable_laplace(lsp, l); },
                           std::optional<LaplaceExponent::Density>(levy));
}

/// Esscher transform: lambda -> phi(lambda + beta) - phi(beta).  No killing,
/// same drift; the Levy density picks up the factor e^{-beta x}.
inline LaplaceExponent esscher(const LaplaceExponent& phi, double beta) {
    if (!(beta > 0.0)) throw std::domain_error("esscher: beta must be positive");
    const double at_beta = phi(beta);
    std::optional<LaplaceExponent::Density> levy;
    if (phi.has_levy_density())
        levy = [phi, beta](double x) { return std::exp(-beta * x) * phi.levy_density(x); };
    return LaplaceExponent(
        [phi, beta, at_beta](double l) { return l == 0.0 ? 0.0 : phi(l + beta) - at_beta; },
        std::move(levy));
}

/// T_beta transform: lambda -> lambda/(lambda+beta) * phi(lambda + beta).
/// No killing, same drift.
inline LaplaceExponent t_beta(const LaplaceExponent& phi, double beta) {
    if (!(beta > 0.0)) throw std::domain_error("t_beta: beta must be positive");
    return LaplaceExponent([phi, beta](double l) {
        if (l == 0.0) return 0.0;
        return l / (l + beta) * phi(l + beta);
    });
}

/// Conjugate exponent lambda -> lambda/phi(lambda).  Meaningful when phi is a
/// special Bernstein function, which callers assert through the sampled grid
/// check below.  The value at lambda = 0 is the right limit.
inline LaplaceExponent conjugate(const LaplaceExponent& phi) {
    return LaplaceExponent([phi](double l) {
        if (l == 0.0) {
            if (phi(0.0) > 0.0) return 0.0;
            const double eps = 1e-9;
            const double denom = phi(eps);
            if (!(denom > 0.0))
                throw std::domain_error("conjugate: phi vanishes near 0+");
            return eps / denom;
        }
        const double denom = phi(l);
        if (!(denom > 0.0))
            throw std::domain_error("conjugate: phi must be positive on (0,inf)");
        return l / denom;
    });
}

/// Sampled necessary condition for phi to be a Bernstein function: on an
/// n-point grid the forward differences must satisfy
/// (-1)^(k-1) Delta^k phi >= 0 up to max_order.  A numerical check, not a
/// proof; the tolerance absorbs rounding in the higher differences.
inline bool bernstein_grid_check(const LaplaceExponent& phi, double lo = 0.0, double hi = 10.0,
                                 int n = 20, int max_order = 6, double tol = 1e-8) {
    std::vector<double> v(static_cast<std::size_t>(n));
    const double h = (hi - lo) / (n - 1);
    double scale = 0.0;
    for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i)] = phi(lo + h * i);
        scale = std::max(scale, std::abs(v[static_cast<std::size_t>(i)]));
    }
    if (v[0] < -tol * scale) return false;
    for (int k = 1; k <= max_order && static_cast<int>(v.size()) > 1; ++k) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
        v.pop_back();
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        for (double d : v)
            if (sign * d < -tol * scale) return false;
    }
    return true;
}

}  // namespace stablefp
