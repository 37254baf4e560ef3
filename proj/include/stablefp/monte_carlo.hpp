#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "stablefp/rng.hpp"
#include "stablefp/stable_process.hpp"

namespace stablefp {

class BudgetExceededError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Simulation configuration.
///
/// Increments of a stable process are exactly stable for any step size, so
/// the walk may take position-dependent steps without distorting the law of
/// the skeleton.  Far from the region of interest (|x| > fine_zone) the step
/// grows like step * (|x|/fine_zone)^alpha and the increment scale like
/// |x|/fine_zone, which compresses heavy-tailed excursions that a fixed-step
/// walk would crawl through; inside the fine zone the base step applies, so
/// first-entry resolution is unchanged.  Only inter-step crossings are ever
/// missed, and those are controlled by the base step (step-halving checks).
struct MCConfig {
    std::int64_t n_paths = 10000;
    double step = 1e-3;
    std::uint64_t seed = 1;
    double horizon = 50.0;             // time truncation
    double radius = 50.0;              // spatial truncation for transient cases
    double fine_zone = 8.0;            // |x| below which the base step applies
    bool adaptive_far_steps = true;    // position-dependent steps outside the zone
    std::int64_t max_steps_per_path = 0;  // 0: derived from horizon/step
    int n_workers = 0;                 // 0: hardware concurrency

    /// documented guard: worst-case increment count across all paths
    static constexpr double budget_guard = 5e10;

    std::int64_t step_cap() const {
        const double from_horizon = horizon / step;
        const double cap = max_steps_per_path > 0
                               ? static_cast<double>(max_steps_per_path)
                               : from_horizon;
        return static_cast<std::int64_t>(std::min(cap, 4e18));
    }

    void check() const {
        if (n_paths < 1 || !(step > 0.0) || !(horizon > 0.0) || !(radius > 0.0) ||
            !(fine_zone > 0.0))
            throw std::domain_error("MCConfig: all fields must be positive");
        if (static_cast<double>(n_paths) * static_cast<double>(step_cap()) > budget_guard)
            throw BudgetExceededError("MCConfig: path count times step cap exceeds budget");
    }
};

/// Weighted sample summary of a simulated event: the recorded values, sorted,
/// plus the exact count of paths that never triggered the event within the
/// truncation.  censored_mass() + retained fraction == 1.
struct EmpiricalDistribution {
    std::vector<double> samples;  // sorted
    std::int64_t n_paths = 0;

    double censored_mass() const {
        return static_cast<double>(n_paths - static_cast<std::int64_t>(samples.size())) /
               static_cast<double>(n_paths);
    }
};

namespace detail {

/// Position-adapted walk state shared by the estimators below.
class StableWalk {
  public:
    StableWalk(const StableParams& p, const MCConfig& cfg)
        : base_(p, cfg.step),
          alpha_(p.alpha),
          step_(cfg.step),
          zone_(cfg.fine_zone),
          adaptive_(cfg.adaptive_far_steps) {}

    /// advances the position in place and returns the elapsed model time
    double advance(double& pos, Rng& rng) const {
        double ratio = 1.0;
        if (adaptive_) {
            const double a = std::abs(pos);
            if (a > zone_) ratio = a / zone_;
        }
        const double jump = base_(rng);
        if (ratio == 1.0) {
            pos += jump;
            return step_;
        }
        pos += ratio * jump;  // increment scale is (dt)^(1/alpha)
        return step_ * std::pow(ratio, alpha_);
    }

  private:
    IncrementSampler base_;
    double alpha_;
    double step_;
    double zone_;
    bool adaptive_;
};

/// Runs one worker per chunk of path indices.  Path i always uses the stream
/// derive_seed(seed, i), so results are independent of the partition.
template <class PerPath>
inline void run_paths(std::int64_t n_paths, int n_workers, const PerPath& per_path) {
    int workers = n_workers > 0 ? n_workers
                                : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (workers == 1) {
        for (std::int64_t i = 0; i < n_paths; ++i) per_path(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::int64_t chunk = (n_paths + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t lo = w * chunk;
        const std::int64_t hi = std::min(n_paths, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &per_path] {
            for (std::int64_t i = lo; i < hi; ++i) per_path(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace detail

/// Simulates first entry into (-1,1) from x > 1 and records the entry
/// position per path.  Paths beyond |X| > radius, past the horizon, or past
/// the step cap are censored.
inline EmpiricalDistribution first_entry_interval(const StableParams& p, double x,
                                                  const MCConfig& cfg) {
    if (!(x > 1.0)) throw std::domain_error("first_entry_interval: requires x > 1");
    cfg.check();
    const detail::StableWalk walk(p, cfg);
    const std::int64_t cap = cfg.step_cap();

    std::vector<double> hits(static_cast<std::size_t>(cfg.n_paths),
                             std::numeric_limits<double>::quiet_NaN());
    detail::run_paths(cfg.n_paths, cfg.n_workers, [&](std::int64_t i) {
        Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
        double pos = x;
        double t = 0.0;
        for (std::int64_t k = 0; k < cap && t < cfg.horizon; ++k) {
            t += walk.advance(pos, rng);
            if (pos > -1.0 && pos < 1.0) {
                hits[static_cast<std::size_t>(i)] = pos;
                return;
            }
            if (std::abs(pos) > cfg.radius) return;  // censored
        }
    });

    EmpiricalDistribution emp;
    emp.n_paths = cfg.n_paths;
    emp.samples.reserve(hits.size());
    for (double h : hits)
        if (!std::isnan(h)) emp.samples.push_back(h);
    std::sort(emp.samples.begin(), emp.samples.end());
    return emp;
}

struct BinEstimate {
    double lo = 0.0;
    double hi = 0.0;
    double mean = 0.0;        // mean occupation time per path
    double std_error = 0.0;   // standard error of the mean across paths
};

/// Expected time spent in each bin of a grid over (1, inf) before first entry
/// into (-1,1), for alpha <= 1 (the transient case).  Bin edges must be
/// increasing and > 1.  The fine zone is widened to cover the bins so all
/// occupation is accrued at the base step.
inline std::vector<BinEstimate> occupation_before_entry(const StableParams& p, double x,
                                                        const std::vector<double>& bin_edges,
                                                        const MCConfig& cfg) {
    if (!(p.alpha <= 1.0))
        throw std::domain_error("occupation_before_entry: requires alpha <= 1");
    if (!(x > 1.0)) throw std::domain_error("occupation_before_entry: requires x > 1");
    if (bin_edges.size() < 2 || bin_edges.front() <= 1.0 ||
        !std::is_sorted(bin_edges.begin(), bin_edges.end()))
        throw std::domain_error("occupation_before_entry: bad bin grid");
    cfg.check();
    MCConfig local = cfg;
    local.fine_zone = std::max({cfg.fine_zone, bin_edges.back() + 1.0, std::abs(x) + 1.0});
    const detail::StableWalk walk(p, local);
    const std::int64_t cap = cfg.step_cap();
    const std::size_t nbins = bin_edges.size() - 1;

    // per-path occupation rows, reduced in path order afterwards so the
    // result is independent of the worker partition
    std::vector<double> rows(static_cast<std::size_t>(cfg.n_paths) * nbins, 0.0);
    detail::run_paths(cfg.n_paths, cfg.n_workers, [&](std::int64_t i) {
        Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
        double* occ = rows.data() + static_cast<std::size_t>(i) * nbins;
        double pos = x;
        double t = 0.0;
        for (std::int64_t k = 0; k < cap && t < cfg.horizon; ++k) {
            if (pos > bin_edges.front() && pos < bin_edges.back()) {
                const auto it = std::upper_bound(bin_edges.begin(), bin_edges.end(), pos);
                occ[static_cast<std::size_t>(it - bin_edges.begin()) - 1] += cfg.step;
            }
            t += walk.advance(pos, rng);
            if (pos > -1.0 && pos < 1.0) break;
            if (std::abs(pos) > cfg.radius) break;
        }
    });

    std::vector<BinEstimate> out(nbins);
    const double n = static_cast<double>(cfg.n_paths);
    for (std::size_t b = 0; b < nbins; ++b) {
        double sum = 0.0, sumsq = 0.0;
        for (std::int64_t i = 0; i < cfg.n_paths; ++i) {
            const double v = rows[static_cast<std::size_t>(i) * nbins + b];
            sum += v;
            sumsq += v * v;
        }
        const double mean = sum / n;
        const double var = std::max(0.0, sumsq / n - mean * mean);
        out[b] = {bin_edges[b], bin_edges[b + 1], mean, std::sqrt(var / n)};
    }
    return out;
}

/// Estimates P_x(enter (-eps, eps) before passing above 1) for alpha in
/// (1,2).  As eps decreases this approaches the probability of hitting the
/// point zero first; callers run a decreasing eps ladder and compare the
/// finest level (no automated extrapolation).
inline double hit_zero_before_up(const StableParams& p, double x, double eps,
                                 const MCConfig& cfg) {
    if (!(p.alpha > 1.0)) throw std::domain_error("hit_zero_before_up: requires alpha > 1");
    if (!(x < 1.0) || x == 0.0)
        throw std::domain_error("hit_zero_before_up: requires x < 1, x != 0");
    if (!(eps > 0.0) || eps >= std::abs(x) || eps >= 1.0)
        throw std::domain_error("hit_zero_before_up: requires 0 < eps < min(|x|, 1)");
    cfg.check();
    const detail::StableWalk walk(p, cfg);
    const std::int64_t cap = cfg.step_cap();

    std::vector<std::uint8_t> hit(static_cast<std::size_t>(cfg.n_paths), 0);
    detail::run_paths(cfg.n_paths, cfg.n_workers, [&](std::int64_t i) {
        Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
        double pos = x;
        double t = 0.0;
        for (std::int64_t k = 0; k < cap && t < cfg.horizon; ++k) {
            t += walk.advance(pos, rng);
            if (pos > -eps && pos < eps) {
                hit[static_cast<std::size_t>(i)] = 1;
                return;
            }
            if (pos > 1.0) return;
        }
    });
    std::int64_t count = 0;
    for (const auto h : hit) count += h;
    return static_cast<double>(count) / static_cast<double>(cfg.n_paths);
}

/// Kolmogorov-Smirnov distance between the empirical law (renormalized over
/// the non-censored mass) and a closed-form CDF; the caller supplies the CDF
/// already restricted and renormalized over the same event.
inline double ks_distance(const EmpiricalDistribution& emp,
                          const std::function<double(double)>& cdf) {
    if (emp.samples.empty()) throw std::domain_error("ks_distance: empty sample");
    const double n = static_cast<double>(emp.samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < emp.samples.size(); ++i) {
        const double f = cdf(emp.samples[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

}  // namespace stablefp
