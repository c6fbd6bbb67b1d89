#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace chronocost {

/// Which per-segment statistic becomes the segment's state. PELT detects
/// changes in mean, so segment_mean is the default; first_value reports the
/// first observation of each segment instead.
enum class StateStatistic { segment_mean, first_value };

struct PeltConfig {
    double penalty_rho = 2.0;
    std::size_t min_segment_length = 1;
    StateStatistic state_statistic = StateStatistic::segment_mean;
};

/// Result of segmenting a length-n series. `changepoints` holds the last
/// index of every segment except the final one, 1-based (equivalently the
/// 0-based exclusive end of the segment). `segment_bounds` are half-open
/// 0-based [begin, end) ranges that partition the series.
struct Segmentation {
    std::vector<std::size_t> changepoints;
    std::vector<std::pair<std::size_t, std::size_t>> segment_bounds;
    std::vector<double> states;
    double objective = 0.0;
};

/// Quadratic segment loss: sum of squared deviations from the segment mean.
inline double segment_cost(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("segment_cost: empty segment");
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    double cost = 0.0;
    for (double v : values) cost += (v - mean) * (v - mean);
    return cost;
}

namespace detail {

/// O(1) segment costs from prefix sums of x and x^2. Both the dynamic
/// program and the enumeration oracle draw their costs from here, so equal
/// segments always yield bit-equal costs.
class PrefixCosts {
public:
    explicit PrefixCosts(const std::vector<double>& values)
        : sum_(values.size() + 1, 0.0), sum_sq_(values.size() + 1, 0.0) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            sum_[i + 1] = sum_[i] + values[i];
            sum_sq_[i + 1] = sum_sq_[i] + values[i] * values[i];
        }
    }

    /// Cost of the half-open range [begin, end).
    double cost(std::size_t begin, std::size_t end) const {
        const double s = sum_[end] - sum_[begin];
        const double ss = sum_sq_[end] - sum_sq_[begin];
        const double n = static_cast<double>(end - begin);
        const double c = ss - (s * s) / n;
        return c > 0.0 ? c : 0.0;
    }

    double mean(std::size_t begin, std::size_t end) const {
        return (sum_[end] - sum_[begin]) / static_cast<double>(end - begin);
    }

private:
    std::vector<double> sum_;
    std::vector<double> sum_sq_;
};

/// Objective of a full segmentation, summed left to right, plus rho per
/// changepoint. Every candidate comparison in both algorithms evaluates this
/// same expression, so ties and near-ties resolve identically.
inline double objective_of(const PrefixCosts& costs, const std::vector<std::size_t>& cps,
                           std::size_t n, double rho) {
    double total = 0.0;
    std::size_t begin = 0;
    for (std::size_t cp : cps) {
        total += costs.cost(begin, cp);
        begin = cp;
    }
    total += costs.cost(begin, n);
    return total + rho * static_cast<double>(cps.size());
}

/// Candidate ordering: smaller objective, then fewer changepoints, then
/// lexicographically smaller changepoint list.
inline bool better_candidate(double obj_a, const std::vector<std::size_t>& cps_a,
                             double obj_b, const std::vector<std::size_t>& cps_b) {
    if (obj_a != obj_b) return obj_a < obj_b;
    if (cps_a.size() != cps_b.size()) return cps_a.size() < cps_b.size();
    return cps_a < cps_b;
}

inline Segmentation finalize(const PrefixCosts& costs, std::vector<std::size_t> cps,
                             std::size_t n, const std::vector<double>& values,
                             const PeltConfig& config) {
    Segmentation seg;
    seg.changepoints = std::move(cps);
    std::size_t begin = 0;
    for (std::size_t cp : seg.changepoints) {
        seg.segment_bounds.emplace_back(begin, cp);
        begin = cp;
    }
    seg.segment_bounds.emplace_back(begin, n);
    seg.states.reserve(seg.segment_bounds.size());
    for (const auto& [lo, hi] : seg.segment_bounds) {
        seg.states.push_back(config.state_statistic == StateStatistic::segment_mean
                                 ? costs.mean(lo, hi)
                                 : values[lo]);
    }
    seg.objective = objective_of(costs, seg.changepoints, n, config.penalty_rho);
    return seg;
}

} // namespace detail

/// Optimal changepoint detection by PELT: dynamic program over prefix optima
/// with the standard pruning rule (a candidate split point is dropped once
/// it is strictly dominated; quadratic loss is superadditive, so pruning is
/// exact). Minimizes sum of segment costs + rho * (number of changepoints)
/// over all segmentations whose segments are at least min_segment_length
/// long. Ties break toward fewer changepoints, then the lexicographically
/// smallest changepoint list.
inline Segmentation pelt(const std::vector<double>& values, const PeltConfig& config = {}) {
    const std::size_t n = values.size();
    if (n == 0) throw std::invalid_argument("pelt: empty series");
    if (config.penalty_rho < 0.0) throw std::invalid_argument("pelt: penalty_rho must be >= 0");
    if (config.min_segment_length < 1) {
        throw std::invalid_argument("pelt: min_segment_length must be >= 1");
    }
    const std::size_t len = config.min_segment_length;
    const detail::PrefixCosts costs(values);

    constexpr double inf = std::numeric_limits<double>::infinity();
    // best[t] = optimal changepoint list for the prefix of length t.
    std::vector<std::vector<std::size_t>> best(n + 1);
    std::vector<double> f(n + 1, inf);
    std::vector<char> reachable(n + 1, 0);
    f[0] = 0.0;
    reachable[0] = 1;

    std::vector<std::size_t> candidates{0};
    std::vector<std::size_t> scratch;
    std::vector<std::size_t> winner;
    for (std::size_t t = 1; t <= n; ++t) {
        if (t >= 2 * len) candidates.push_back(t - len);

        double best_obj = inf;
        bool found = false;
        for (std::size_t s : candidates) {
            if (!reachable[s]) continue;
            // Segment s+1..t must respect the minimum length; the whole
            // series as a single segment is always admissible.
            if (t - s < len && !(s == 0 && t == n)) continue;
            scratch = best[s];
            if (s > 0) scratch.push_back(s);
            const double obj = detail::objective_of(costs, scratch, t, config.penalty_rho);
            if (!found || detail::better_candidate(obj, scratch, best_obj, winner)) {
                best_obj = obj;
                winner = scratch;
                found = true;
            }
        }
        if (!found) continue; // prefix not segmentable yet
        best[t] = winner;
        f[t] = best_obj;
        reachable[t] = 1;

        // Pruning: drop s once f(s) + C(s+1..t) exceeds f(t). A small slack
        // keeps candidates whose dominance is within floating-point noise.
        const double slack = 1e-9 * (1.0 + std::abs(f[t]));
        std::vector<std::size_t> kept;
        kept.reserve(candidates.size());
        for (std::size_t s : candidates) {
            if (!reachable[s]) {
                kept.push_back(s);
                continue;
            }
            if (t - s < len || f[s] + costs.cost(s, t) <= f[t] + slack) kept.push_back(s);
        }
        candidates.swap(kept);
    }

    return detail::finalize(costs, best[n], n, values, config);
}

/// Verification oracle: enumerates every admissible segmentation (2^(n-1)
/// of them) and returns a true minimizer of the same objective with the
/// same tie-breaking as pelt(). Refuses series longer than 20 values.
inline Segmentation exhaustive_segment(const std::vector<double>& values,
                                       const PeltConfig& config = {}) {
    const std::size_t n = values.size();
    if (n == 0) throw std::invalid_argument("exhaustive_segment: empty series");
    if (n > 20) {
        throw std::invalid_argument("exhaustive_segment: series longer than 20 values");
    }
    const std::size_t len = config.min_segment_length;
    const detail::PrefixCosts costs(values);

    std::vector<std::size_t> best_cps;
    double best_obj = std::numeric_limits<double>::infinity();
    bool have_best = false;
    std::vector<std::size_t> cps;
    const std::uint64_t masks = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        cps.clear();
        bool ok = true;
        std::size_t prev = 0;
        for (std::size_t i = 0; i + 1 < n && ok; ++i) {
            if (mask >> i & 1) {
                const std::size_t cp = i + 1;
                if (cp - prev < len) ok = false;
                cps.push_back(cp);
                prev = cp;
            }
        }
        if (!ok || (!cps.empty() && n - prev < len)) continue;
        const double obj = detail::objective_of(costs, cps, n, config.penalty_rho);
        if (!have_best || detail::better_candidate(obj, cps, best_obj, best_cps)) {
            best_obj = obj;
            best_cps = cps;
            have_best = true;
        }
    }
    return detail::finalize(costs, best_cps, n, values, config);
}

} // namespace chronocost
