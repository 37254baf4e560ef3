#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "stablefp/lamperti.hpp"
#include "stablefp/quadrature.hpp"

using namespace stablefp;
using std::numbers::pi;

namespace {

// total mass of the jump density via u = e^{-x} (x > 0) and v = e^{x} (x < 0)
double jump_density_total_mass(const StableParams& p, double tol = 1e-11) {
    const double ar = p.alpha_rho();
    auto right = [&](double u) { return jump_density(p, -std::log(u)) / u; };
    auto left = [&](double v) { return jump_density(p, std::log(v)) / v; };
    const double mr = integrate_beta(right, 0.0, 1.0, ar, 1.0, tol).value;
    const double ml = integrate_beta(left, 0.0, 1.0, 1.0 - ar, 1.0, tol).value;
    return mr + ml;
}

// numerical Fourier transform of the jump density with analytic tail closure
std::complex<double> jump_density_fourier(const StableParams& p, double theta) {
    const double ar = p.alpha_rho();
    const double arh = p.alpha_rho_hat();
    const double pref = p.alpha * std::sin(pi * ar) / pi * real_gamma(ar + 1.0) *
                        real_gamma(arh + 1.0) * rgamma(p.alpha + 2.0);
    const double X = 30.0 / std::min({ar + std::min(1.0, arh), 1.0});
    auto re = [&](double x) { return std::cos(theta * x) * jump_density(p, x); };
    auto im = [&](double x) { return std::sin(theta * x) * jump_density(p, x); };
    std::complex<double> mid(integrate(re, -X, X, 1e-9, 20000).value,
                             integrate(im, -X, X, 1e-9, 20000).value);
    // beyond |x| = X the density is exponential to ~1e-12 relative accuracy
    const std::complex<double> it(0.0, theta);
    const double A =
        pref * real_gamma(p.alpha + 2.0) * real_gamma(arh) * rgamma(p.alpha + 1.0) * rgamma(arh + 1.0);
    const double B =
        pref * real_gamma(p.alpha + 2.0) * real_gamma(ar) * rgamma(p.alpha + 1.0) * rgamma(ar + 1.0);
    const std::complex<double> right_tail = A * std::exp((it - ar) * X) / (ar - it);
    const std::complex<double> left_tail =
        B * std::exp(-((1.0 - ar) + it) * X) / ((1.0 - ar) + it);
    return mid + right_tail + left_tail;
}

// convolution of the two factor densities, reduced to a bounded integral
double jump_density_convolution(const StableParams& p, double x) {
    const double ar = p.alpha_rho();
    const double arh = p.alpha_rho_hat();
    const double pref = p.alpha * std::sin(pi * ar) / pi;
    const double g = -std::expm1(-x);  // 1 - e^{-x}
    auto f = [&](double s) {
        return std::pow(s, ar) * std::pow(1.0 - s, arh) / (1.0 - s * g);
    };
    return pref * std::exp(-ar * x) * integrate(f, 0.0, 1.0, 1e-12).value;
}

}  // namespace

TEST_CASE("xi* Levy density") {
    const auto p = validate_params(0.5, 0.5);
    CHECK_THROWS_AS(xi_star_levy_density(p, 0.0), std::domain_error);
    // c+ e/(e-1)^{3/2} at x = 1, mpmath value
    CHECK(xi_star_levy_density(p, 1.0) ==
          Catch::Approx(0.2407315189626220727436422454305746300623).epsilon(1e-13));
    CHECK(xi_star_levy_density(p, -1.0) ==
          Catch::Approx(p.c_minus * std::exp(-1.0) *
                        std::pow(1.0 - std::exp(-1.0), -1.5))
              .epsilon(1e-13));
    // small-x behavior matches the stable Levy density
    for (double x : {1e-4, 1e-5, 1e-6})
        CHECK(xi_star_levy_density(p, x) / levy_density(p, x) ==
              Catch::Approx(1.0).margin(2e-4));
}

TEST_CASE("xi* killing rate") {
    // Gamma(1/2)/(Gamma(1/4)Gamma(3/4)) = 1/sqrt(2 pi)
    CHECK(xi_star_killing_rate(validate_params(0.5, 0.5)) ==
          Catch::Approx(0.3989422804014326779399460599343818684759).epsilon(1e-13));
    CHECK(xi_star_killing_rate(validate_params(1.0, 0.5)) ==
          Catch::Approx(1.0 / pi).epsilon(1e-13));
    for (auto [a, r] : std::vector<std::pair<double, double>>{
             {0.3, 0.7}, {0.9, 0.2}, {1.4, 0.6}, {1.8, 0.5}}) {
        const auto p = validate_params(a, r);
        CHECK(xi_star_killing_rate(p) == Catch::Approx(p.c_minus / a).epsilon(1e-13));
    }
}

TEST_CASE("jump characteristic function") {
    const auto p = validate_params(0.5, 0.5);
    CHECK(std::abs(jump_cf(p, 0.0) - 1.0) < 1e-13);

    // independent oracle: product of four gammas via the Stirling route
    const double theta = 1.0;
    const std::complex<double> it(0.0, theta);
    const std::complex<double> ref =
        std::sin(pi * 0.25) / (pi * real_gamma(0.5)) *
        std::exp(oracles::stirling_log_gamma(0.75 + it) +
                 oracles::stirling_log_gamma(0.25 - it) +
                 oracles::stirling_log_gamma(1.0 + it) +
                 oracles::stirling_log_gamma(0.5 - it));
    CHECK(std::abs(jump_cf(p, theta) - ref) < 1e-12);

    for (double th : {0.4, 2.0, 11.0})
        CHECK(std::abs(jump_cf(p, -th) - std::conj(jump_cf(p, th))) < 1e-13);
}

TEST_CASE("jump density integrates to one") {
    for (auto [a, r] : std::vector<std::pair<double, double>>{
             {0.5, 0.5}, {0.8, 0.3}, {1.0, 0.5}, {1.5, 0.55}, {1.9, 0.5}}) {
        const auto p = validate_params(a, r);
        CHECK(jump_density_total_mass(p) == Catch::Approx(1.0).margin(1e-8));
    }
}

TEST_CASE("jump density is nonnegative") {
    for (auto [a, r] : std::vector<std::pair<double, double>>{
             {0.4, 0.8}, {1.0, 0.5}, {1.7, 0.45}}) {
        const auto p = validate_params(a, r);
        for (double x = -8.0; x <= 8.0; x += 0.25) CHECK(jump_density(p, x) >= 0.0);
    }
}

TEST_CASE("jump density matches the convolution construction") {
    for (auto [a, r] :
         std::vector<std::pair<double, double>>{{0.5, 0.5}, {1.5, 0.55}}) {
        const auto p = validate_params(a, r);
        for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0})
            CHECK(jump_density(p, x) ==
                  Catch::Approx(jump_density_convolution(p, x)).margin(1e-7));
    }
}

TEST_CASE("jump density Fourier transform matches the characteristic function") {
    const auto p = validate_params(0.5, 0.5);
    for (int k = -5; k <= 5; ++k) {
        const double theta = static_cast<double>(k);
        const auto ft = jump_density_fourier(p, theta);
        CHECK(std::abs(ft - jump_cf(p, theta)) < 1e-6);
    }
}

TEST_CASE("jump density right-tail exponent is -alpha rho") {
    const auto p = validate_params(1.0, 0.5);
    const double slope =
        (std::log(jump_density(p, 22.0)) - std::log(jump_density(p, 12.0))) / 10.0;
    CHECK(slope == Catch::Approx(-p.alpha_rho()).margin(1e-3));
}

TEST_CASE("psi_L basics") {
    const auto p = validate_params(0.5, 0.5);
    CHECK(std::abs(psi_L(p, 0.0)) < 1e-13);
    for (double th : {0.3, 1.0, 6.0})
        CHECK(std::abs(psi_L(p, -th) - std::conj(psi_L(p, th))) < 1e-13);

    const std::complex<double> it(0.0, 1.0);
    const std::complex<double> ref =
        std::exp(oracles::stirling_log_gamma(0.5 - it) + oracles::stirling_log_gamma(1.0 + it) -
                 oracles::stirling_log_gamma(0.25 - it) -
                 oracles::stirling_log_gamma(0.75 + it)) -
        xi_star_killing_rate(p);
    CHECK(std::abs(psi_L(p, 1.0) - ref) < 1e-12);
}

TEST_CASE("psi_C basics") {
    const auto p = validate_params(0.8, 0.4);
    CHECK(std::abs(psi_C(p, 0.0)) < 1e-13);
    const double rate = xi_star_killing_rate(p);
    for (double th = -9.0; th <= 9.0; th += 0.75) {
        const auto v = psi_C(p, th);
        CHECK(v.real() >= -1e-13);
        CHECK(v.real() <= 2.0 * rate + 1e-13);
    }
}

TEST_CASE("decomposition psi_xi = psi_L + psi_C") {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> u01(0.05, 0.95), th_d(-30.0, 30.0);
    for (int i = 0; i < 100; ++i) {
        const bool small = i % 2 == 0;
        const double alpha = small ? 0.1 + 0.9 * u01(gen) : 1.0 + 0.95 * u01(gen);
        double rho = u01(gen);
        if (alpha > 1.0) rho = 1.0 - 1.0 / alpha + (2.0 / alpha - 1.0) * rho;
        const auto p = validate_params(alpha, rho);
        const double theta = th_d(gen);
        if (theta == 0.0) continue;
        const auto lhs = psi_xi(p, theta);
        const auto rhs = psi_L(p, theta) + psi_C(p, theta);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs)));
    }
    CHECK(psi_xi(validate_params(0.5, 0.5), 0.0) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("product-and-sum identity for the sine factors") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> re(-2.0, 2.0), im(-3.0, 3.0);
    const double alpha = 0.7, rho = 0.35;
    const double ar = alpha * rho, arh = alpha * (1.0 - rho);
    for (int i = 0; i < 25; ++i) {
        const std::complex<double> u(re(gen), im(gen));
        const auto t1 = std::sin(pi * (arh - u)) * std::sin(pi * (ar - u));
        const auto t2 = std::sin(pi * u) * std::sin(pi * (alpha - u));
        const auto rhs = std::sin(pi * arh) * std::sin(pi * ar);
        // the two products cancel almost completely, so the achievable
        // accuracy scales with their magnitude
        const double scale = std::max({1.0, std::abs(t1), std::abs(t2)});
        CHECK(std::abs(t1 + t2 - rhs) <= 1e-13 * scale);
    }
}

TEST_CASE("psi_xi matches the hypergeometric exponent form") {
    // parameters (beta, gamma, beta_hat, gamma_hat) = (1, ar, 1-alpha, arh)
    const auto p = validate_params(0.6, 0.45);
    const double b = 1.0, g = p.alpha_rho(), bh = 1.0 - p.alpha, gh = p.alpha_rho_hat();
    for (double th : {0.5, -1.7, 4.0}) {
        const std::complex<double> it(0.0, th);
        const auto ref = std::exp(log_gamma(1.0 - b + g - it) - log_gamma(1.0 - b - it) +
                                  log_gamma(bh + gh + it) - log_gamma(bh + it));
        CHECK(std::abs(psi_xi(p, th) - ref) <= 1e-12 * (1.0 + std::abs(ref)));
    }
}

TEST_CASE("jump law bundle") {
    const auto p = validate_params(1.2, 0.5);
    const auto law = make_jump_law(p);
    CHECK(law.density(0.3) == Catch::Approx(jump_density(p, 0.3)));
    CHECK(std::abs(law.cf(2.0) - jump_cf(p, 2.0)) == 0.0);
}
