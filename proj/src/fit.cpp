#include "drgg/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace drgg {

namespace {

// Hurwitz zeta via Euler-Maclaurin; accurate to ~1e-10 for s > 1, a >= 1.
double hurwitz_zeta(double s, double a) {
    constexpr int M = 24;
    double sum = 0.0;
    for (int j = 0; j < M; ++j) sum += std::pow(a + j, -s);
    const double x = a + M;
    sum += std::pow(x, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(x, -s);
    sum += s / 12.0 * std::pow(x, -s - 1.0);
    sum -= s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(x, -s - 3.0);
    return sum;
}

struct TailData {
    double count = 0.0;      // number of observations with k >= k_min
    double log_sum = 0.0;    // sum of ln k over those observations
    std::vector<std::pair<std::int64_t, double>> ccdf;  // k -> empirical P[K >= k]
};

TailData tail_data(const DegreeHistogram& hist, std::int64_t k_min) {
    TailData t;
    std::vector<std::pair<std::int64_t, std::int64_t>> obs;
    for (auto [k, c] : hist.counts) {
        if (k < k_min) continue;
        obs.emplace_back(k, c);
        t.count += static_cast<double>(c);
        t.log_sum += static_cast<double>(c) * std::log(static_cast<double>(k));
    }
    double above = t.count;
    for (auto [k, c] : obs) {
        t.ccdf.emplace_back(k, above / t.count);
        above -= static_cast<double>(c);
    }
    return t;
}

double neg_log_likelihood(double gamma, const TailData& t, std::int64_t k_min) {
    return gamma * t.log_sum +
           t.count * std::log(hurwitz_zeta(gamma, static_cast<double>(k_min)));
}

// Golden-section minimization; the discrete power-law likelihood is unimodal.
double mle_gamma(const TailData& t, std::int64_t k_min) {
    double lo = 1.000001, hi = 25.0;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
    double fc = neg_log_likelihood(c, t, k_min), fd = neg_log_likelihood(d, t, k_min);
    for (int it = 0; it < 200 && hi - lo > 1e-9; ++it) {
        if (fc < fd) {
            hi = d; d = c; fd = fc;
            c = hi - gr * (hi - lo);
            fc = neg_log_likelihood(c, t, k_min);
        } else {
            lo = c; c = d; fc = fd;
            d = lo + gr * (hi - lo);
            fd = neg_log_likelihood(d, t, k_min);
        }
    }
    return (lo + hi) / 2.0;
}

double ks_distance(double gamma, const TailData& t, std::int64_t k_min) {
    const double z0 = hurwitz_zeta(gamma, static_cast<double>(k_min));
    double d = 0.0;
    for (auto [k, emp_ccdf] : t.ccdf) {
        const double model_ccdf = hurwitz_zeta(gamma, static_cast<double>(k)) / z0;
        d = std::max(d, std::fabs(emp_ccdf - model_ccdf));
    }
    return d;
}

// Log-log least squares on the empirical pmf for k >= k_min.
double ls_gamma(const DegreeHistogram& hist, std::int64_t k_min) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
    for (auto [k, c] : hist.counts) {
        if (k < k_min || c <= 0) continue;
        const double x = std::log(static_cast<double>(k));
        const double y = std::log(static_cast<double>(c));
        sx += x; sy += y; sxx += x * x; sxy += x * y; n += 1;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return -slope;
}

}  // namespace

FitResult fit_powerlaw_tail(const DegreeHistogram& hist, FitMethod method) {
    std::int64_t tail_mass = 0;
    for (auto [k, c] : hist.counts)
        if (k >= 2) tail_mass += c;
    if (tail_mass < 50)
        throw insufficient_data("fit_powerlaw_tail: need >= 50 vertices with degree >= 2");

    // k_min candidates: observed degrees between 2 and the 90th percentile.
    std::vector<std::int64_t> degrees_sorted;
    for (auto [k, c] : hist.counts)
        for (std::int64_t i = 0; i < c; ++i) degrees_sorted.push_back(k);
    const std::int64_t p90 = degrees_sorted[degrees_sorted.size() * 9 / 10];
    std::vector<std::int64_t> candidates;
    for (auto [k, c] : hist.counts)
        if (k >= 2 && k <= std::max<std::int64_t>(2, p90)) candidates.push_back(k);
    if (candidates.empty()) candidates.push_back(2);

    FitResult best;
    best.goodness = std::numeric_limits<double>::infinity();
    for (std::int64_t k_min : candidates) {
        const TailData t = tail_data(hist, k_min);
        if (t.count < 50 || t.ccdf.size() < 4) continue;
        const double gamma = method == FitMethod::mle_tail ? mle_gamma(t, k_min)
                                                           : ls_gamma(hist, k_min);
        if (!(gamma > 1.0)) continue;
        const double ks = ks_distance(gamma, t, k_min);
        if (ks < best.goodness) {
            best.goodness = ks;
            best.beta_hat = gamma - 1.0;
            best.k_min = k_min;
        }
    }
    if (!std::isfinite(best.goodness))
        throw insufficient_data("fit_powerlaw_tail: no usable tail window");
    best.method = method;
    return best;
}

BinomialFit fit_binomial(const DegreeHistogram& hist, std::int64_t n) {
    if (n < 2) throw invalid_input("fit_binomial: n must be >= 2");
    BinomialFit r;
    r.z_hat = hist.mean() / static_cast<double>(n - 1);
    const double m = static_cast<double>(n - 1);
    const double total = static_cast<double>(hist.total);

    auto log_pmf = [&](double k) {
        return std::lgamma(m + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0) +
               k * std::log(r.z_hat) + (m - k) * std::log1p(-r.z_hat);
    };
    double abs_diff = 0.0, model_mass_observed = 0.0;
    for (auto [k, c] : hist.counts) {
        double pmf;
        if (r.z_hat <= 0.0) pmf = (k == 0) ? 1.0 : 0.0;
        else if (r.z_hat >= 1.0) pmf = (k == n - 1) ? 1.0 : 0.0;
        else pmf = std::exp(log_pmf(static_cast<double>(k)));
        abs_diff += std::fabs(static_cast<double>(c) / total - pmf);
        model_mass_observed += pmf;
    }
    r.tv_distance = 0.5 * (abs_diff + std::max(0.0, 1.0 - model_mass_observed));
    return r;
}

FitResult fit_model(const DegreeHistogram& in_hist, const DegreeHistogram& out_hist,
                    std::int64_t n, int d, FitMethod method) {
    FitResult r = fit_powerlaw_tail(in_hist, method);
    r.alpha_hat = r.beta_hat * d + 1.0;
    r.z_hat = fit_binomial(out_hist, n).z_hat;
    return r;
}

}  // namespace drgg
