#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "stablefp/quadrature.hpp"
#include "stablefp/wiener_hopf.hpp"

using namespace stablefp;

namespace {

StableParams random_admissible(std::mt19937_64& gen, bool small_regime) {
    std::uniform_real_distribution<double> u(0.08, 0.92);
    const double alpha = small_regime ? 0.1 + 0.88 * u(gen) : 1.0 + 0.9 * u(gen);
    double rho = u(gen);
    if (alpha > 1.0) rho = 1.0 - 1.0 / alpha + (2.0 / alpha - 1.0) * rho;
    return validate_params(alpha, rho);
}

// Laplace transform of the renewal density through u = e^{-x}
double renewal_laplace(const StableParams& p, LadderSide side, double lambda) {
    auto f = [&](double u) { return std::pow(u, lambda - 1.0) * renewal_density(p, side, -std::log(u)); };
    // singularity exponents of the transformed integrand at u = 1 and u = 0
    const double q_exp = side == LadderSide::Ascending ? p.alpha_rho() : p.alpha_rho_hat();
    const double p_exp =
        (p.alpha <= 1.0 && side == LadderSide::Descending) ? lambda + 1.0 - p.alpha
        : (p.alpha > 1.0 && side == LadderSide::Ascending) ? lambda + p.alpha - 1.0
                                                           : lambda;
    return integrate_beta(f, 0.0, 1.0, p_exp, q_exp, 1e-10).value;
}

}  // namespace

TEST_CASE("factor values at distinguished points") {
    const auto small = factors(validate_params(0.5, 0.5));
    CHECK(small.regime == Regime::SmallAlpha);
    CHECK(small.kappa(0.0) == 0.0);
    // Gamma(1.25)/Gamma(1), mpmath value
    CHECK(small.kappa(1.0) ==
          Catch::Approx(0.9064024770554770779826712889669180007488).epsilon(1e-13));
    CHECK(small.kappa_hat(0.0) ==
          Catch::Approx(gamma_ratio(0.75, 0.5)).epsilon(1e-13));

    const auto big = factors(validate_params(1.5, 0.6));
    CHECK(big.regime == Regime::LargeAlpha);
    CHECK(big.kappa_hat(0.0) == 0.0);
    // (alpha-1) Gamma(alpha rho) = 0.5 Gamma(0.9)
    CHECK(big.kappa(0.0) ==
          Catch::Approx(0.5343143510596596774486526678472403890849).epsilon(1e-13));

    const auto cauchy = factors(validate_params(1.0, 0.5));
    CHECK(cauchy.regime == Regime::SmallAlpha);
    CHECK(cauchy.kappa_hat(0.0) == 0.0);  // killing limit at alpha = 1
}

TEST_CASE("factorisation identity on a random parameter sweep") {
    std::mt19937_64 gen(424242);
    for (int i = 0; i < 50; ++i) {
        const auto p = random_admissible(gen, i % 2 == 0);
        for (double th : {0.1, 1.0, 10.0, 50.0}) {
            CHECK(verify_factorisation(p, th) <= 1e-8);
            CHECK(verify_factorisation(p, -th) <= 1e-8);
        }
    }
    CHECK(verify_factorisation(validate_params(0.5, 0.5), 0.0) == 0.0);
    CHECK(verify_factorisation(validate_params(0.5, 0.5), 2.0) <= 1e-9);
    CHECK(verify_factorisation(validate_params(1.5, 0.6), 2.0) <= 1e-9);
}

TEST_CASE("complex factor evaluation agrees with the real exponent on lambda > 0") {
    for (auto [a, r] : std::vector<std::pair<double, double>>{{0.7, 0.3}, {1.6, 0.55}}) {
        const auto p = validate_params(a, r);
        const auto wh = factors(p);
        for (double l = 0.25; l < 6.0; l += 0.5) {
            CHECK(kappa_complex(p, {l, 0.0}).real() == Catch::Approx(wh.kappa(l)).epsilon(1e-12));
            CHECK(kappa_hat_complex(p, {l, 0.0}).real() ==
                  Catch::Approx(wh.kappa_hat(l)).epsilon(1e-12));
        }
    }
}

TEST_CASE("both factors pass the Bernstein grid check in both regimes") {
    for (auto [a, r] : std::vector<std::pair<double, double>>{
             {0.4, 0.7}, {0.9, 0.25}, {1.0, 0.5}, {1.3, 0.65}, {1.8, 0.52}}) {
        const auto wh = factors(validate_params(a, r));
        CHECK(bernstein_grid_check(wh.kappa, 0.0, 10.0));
        CHECK(bernstein_grid_check(wh.kappa_hat, 0.0, 10.0));
    }
}

TEST_CASE("ladder Levy densities are positive") {
    std::mt19937_64 gen(7);
    for (int i = 0; i < 40; ++i) {
        const auto p = random_admissible(gen, i % 2 == 0);
        for (double x = 0.05; x < 6.0; x += 0.3) {
            CHECK(ladder_levy_density(p, LadderSide::Ascending, x) > 0.0);
            CHECK(ladder_levy_density(p, LadderSide::Descending, x) > 0.0);
        }
    }
    CHECK_THROWS_AS(
        ladder_levy_density(validate_params(0.5, 0.5), LadderSide::Ascending, 0.0),
        std::domain_error);
}

TEST_CASE("ascending ladder Levy density integrates against kappa") {
    // kappa(1) = int (1 - e^{-x}) pi_H(x) dx for the driftless unkilled
    // ascending ladder of the small regime
    const auto p = validate_params(0.7, 0.45);
    const auto wh = factors(p);
    auto head = [&](double x) {
        return -std::expm1(-x) * ladder_levy_density(p, LadderSide::Ascending, x);
    };
    const double ar = p.alpha_rho();
    const double head_part = integrate_beta(head, 0.0, 1.0, 1.0 - ar, 1.0, 1e-11).value;
    auto tail = [&](double u) {  // u = e^{-x}
        const double x = -std::log(u);
        return -std::expm1(-x) * ladder_levy_density(p, LadderSide::Ascending, x) / u;
    };
    const double tail_part =
        integrate_beta(tail, 0.0, std::exp(-1.0), ar, 1.0, 1e-11).value;
    CHECK(head_part + tail_part == Catch::Approx(wh.kappa(1.0)).epsilon(1e-8));
}

TEST_CASE("ladder Levy density small-x exponent") {
    const auto p = validate_params(0.8, 0.6);
    const double e1 = std::log(ladder_levy_density(p, LadderSide::Ascending, 1e-4) /
                               ladder_levy_density(p, LadderSide::Ascending, 1e-3)) /
                      std::log(0.1);
    CHECK(e1 == Catch::Approx(-(p.alpha_rho() + 1.0)).margin(1e-2));
}

TEST_CASE("renewal/Laplace duality in both regimes") {
    for (auto [a, r] : std::vector<std::pair<double, double>>{
             {0.5, 0.3}, {0.9, 0.75}, {1.0, 0.5}, {1.4, 0.6}, {1.8, 0.5}}) {
        const auto p = validate_params(a, r);
        const auto wh = factors(p);
        for (double lambda : {0.5, 1.0, 2.0}) {
            CHECK(renewal_laplace(p, LadderSide::Ascending, lambda) ==
                  Catch::Approx(1.0 / wh.kappa(lambda)).epsilon(1e-6));
            CHECK(renewal_laplace(p, LadderSide::Descending, lambda) ==
                  Catch::Approx(1.0 / wh.kappa_hat(lambda)).epsilon(1e-6));
        }
    }
}

TEST_CASE("renewal density limits") {
    const auto small = validate_params(0.6, 0.4);
    CHECK(renewal_density(small, LadderSide::Ascending, 40.0) ==
          Catch::Approx(rgamma(small.alpha_rho())).epsilon(1e-10));

    const auto big = validate_params(1.5, 0.55);
    CHECK(renewal_density(big, LadderSide::Descending, 40.0) ==
          Catch::Approx(gamma_ratio(2.0 - big.alpha, 1.0 - big.alpha_rho())).epsilon(1e-8));
    CHECK_THROWS_AS(renewal_density(big, LadderSide::Ascending, -1.0), std::domain_error);
}

TEST_CASE("large-regime conjugation consistency") {
    const double alpha = 1.5, rho = 0.6;
    const auto p = validate_params(alpha, rho);
    const auto wh = factors(p);
    const double ar = p.alpha_rho();
    const double arh = p.alpha_rho_hat();

    const LaplaceExponent phi_star(
        [=](double l) { return gamma_ratio(2.0 - alpha + l, 1.0 - ar + l); });
    const LaplaceExponent psi_star(
        [=](double l) { return gamma_ratio(2.0 - alpha + l, 1.0 - arh + l); });

    const auto t_psi = t_beta(psi_star, alpha - 1.0);
    for (double l = 0.2; l < 10.0; l += 0.45) {
        CHECK(wh.kappa_hat(l) * phi_star(l) == Catch::Approx(l).epsilon(1e-10));
        CHECK(wh.kappa(l) * t_psi(l) == Catch::Approx(l).epsilon(1e-10));
    }

    // kappa as an Esscher transform of the conjugate of psi*, plus killing
    const auto psi = conjugate(psi_star);
    const auto ess = esscher(psi, alpha - 1.0);
    const double kill = psi(alpha - 1.0);
    for (double l = 0.2; l < 10.0; l += 0.45)
        CHECK(wh.kappa(l) == Catch::Approx(ess(l) + kill).epsilon(1e-10));
}

TEST_CASE("ladder parameters reproduce the factors through the Lamperti-stable exponent") {
    // small regime ascending: (q, a, beta, c, d) = (0, ar, 1, -1/Gamma(-ar), 0)
    const auto p = validate_params(0.5, 0.5);
    const double ar = p.alpha_rho();
    const double arh = p.alpha_rho_hat();
    const auto wh = factors(p);
    const auto asc = make_lamperti_stable(
        LampertiStableParams(0.0, ar, 1.0, -1.0 / real_gamma(-ar), 0.0));
    // descending: (Gamma(1-ar)/Gamma(1-alpha), arh, alpha, -1/Gamma(-arh), 0)
    const auto desc = make_lamperti_stable(LampertiStableParams(
        gamma_ratio(1.0 - ar, 1.0 - p.alpha), arh, p.alpha, -1.0 / real_gamma(-arh), 0.0));
    for (double l = 0.3; l < 8.0; l += 0.7) {
        CHECK(asc(l) == Catch::Approx(wh.kappa(l)).epsilon(1e-11));
        CHECK(desc(l) == Catch::Approx(wh.kappa_hat(l)).epsilon(1e-11));
    }
    // Levy densities attached to the factors agree with the ladder formulas
    CHECK(wh.kappa.levy_density(0.8) ==
          Catch::Approx(asc.levy_density(0.8)).epsilon(1e-12));
    CHECK(wh.kappa_hat.levy_density(0.8) ==
          Catch::Approx(desc.levy_density(0.8)).epsilon(1e-12));

    // large regime: ascending is conjugate to T_{alpha-1} psi*, with psi* a
    // Lamperti-stable exponent with the stated parameters
    const auto pb = validate_params(1.5, 0.6);
    const double arb = pb.alpha_rho(), arhb = pb.alpha_rho_hat();
    const auto psi_star_ls = make_lamperti_stable(LampertiStableParams(
        gamma_ratio(2.0 - pb.alpha, 1.0 - arhb), 1.0 - arb, arhb,
        -1.0 / real_gamma(arb - 1.0), 0.0));
    for (double l = 0.3; l < 8.0; l += 0.7)
        CHECK(psi_star_ls(l) ==
              Catch::Approx(gamma_ratio(2.0 - pb.alpha + l, 1.0 - arhb + l)).epsilon(1e-11));
}
