#include "drgg/theory.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace drgg {

namespace {

double log_choose(double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double double_factorial(int n) {
    double r = 1.0;
    for (int i = n; i >= 2; i -= 2) r *= i;
    return r;
}

double binom_int(int n, int k) {
    return std::round(std::exp(log_choose(n, k)));
}

}  // namespace

double edge_prob_exact(std::int64_t n, double alpha, int d) {
    if (!(alpha > d + 1)) throw invalid_input("edge_prob_exact: alpha must exceed d+1");
    const double r0 = min_radius(n, d);  // throws model_infeasible when needed
    const double eta = pareto_normalizer(alpha, r0);
    const double p = d - alpha + 1.0;
    return eta * ball_volume(d) / p * (std::pow(2.0, -p) - std::pow(r0, p));
}

double edge_prob_asymptotic(std::int64_t n, double alpha, int d) {
    if (!(alpha > d + 1)) throw invalid_input("edge_prob_asymptotic: alpha must exceed d+1");
    const double nn = static_cast<double>(n);
    return (alpha - 1.0) / (alpha - 1.0 - d) * std::log(nn) / nn;
}

double expected_edges(std::int64_t n, double alpha, int d) {
    return static_cast<double>(n) * static_cast<double>(n - 1) * edge_prob_exact(n, alpha, d);
}

namespace {

// log of I_k = int_a^b u^(k-1-beta) (1-u)^(n-1-k) du, stabilized around the
// integrand's maximum.
double log_indegree_integral(std::int64_t n, double beta, std::int64_t k, double a, double b) {
    const double p = static_cast<double>(k) - 1.0 - beta;
    const double q = static_cast<double>(n - 1 - k);
    auto g = [&](double u) { return p * std::log(u) + q * std::log1p(-u); };

    double gmax = std::max(g(a), g(b));
    if (p > 0.0 && p + q > 0.0) {
        const double ustar = p / (p + q);
        if (ustar > a && ustar < b) gmax = std::max(gmax, g(ustar));
    }
    auto f = [&](double u) { return std::exp(g(u) - gmax); };
    const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, a, b, 12, 1e-12);
    return gmax + std::log(integral);
}

}  // namespace

double indegree_pdf_exact(std::int64_t n, double alpha, int d, std::int64_t k) {
    if (k < 0 || k > n - 1)
        throw invalid_input("indegree_pdf_exact: k must lie in [0, n-1]");
    const double r0 = min_radius(n, d);
    const double eta = pareto_normalizer(alpha, r0);
    const double beta = (alpha - 1.0) / d;
    const double vd = ball_volume(d);
    const double a = vd * std::pow(r0, d);
    const double b = vd * std::pow(2.0, -d);
    const double lp = std::log(eta / d) + log_choose(static_cast<double>(n - 1),
                                                     static_cast<double>(k)) +
                      beta * std::log(vd) + log_indegree_integral(n, beta, k, a, b);
    return std::exp(lp);
}

std::vector<double> indegree_pdf_exact_all(std::int64_t n, double alpha, int d) {
    std::vector<double> out(n);
    for (std::int64_t k = 0; k < n; ++k) out[k] = indegree_pdf_exact(n, alpha, d, k);
    return out;
}

namespace {

// Unnormalized log of the steepest-descent form; valid for k > beta+1.
double log_indegree_approx_raw(std::int64_t n, double beta, std::int64_t k) {
    const double nn = static_cast<double>(n);
    const double kk = static_cast<double>(k);
    return log_choose(nn, kk) + 0.5 * std::log(2.0 * M_PI) +
           (kk - beta - 0.5) * std::log(kk - beta - 1.0) +
           (nn - kk + 0.5) * std::log(nn - kk) -
           (nn - beta + 0.5) * std::log(nn - beta - 1.0);
}

}  // namespace

std::vector<double> indegree_pdf_approx_all(std::int64_t n, double alpha, int d) {
    const double beta = (alpha - 1.0) / d;
    const std::int64_t kmin = static_cast<std::int64_t>(std::floor(beta + 1.0)) + 1;
    std::vector<double> logs;
    std::vector<std::int64_t> ks;
    for (std::int64_t k = kmin; k <= n - 1; ++k) {
        if (!(static_cast<double>(k) > beta + 1.0) || k >= n) continue;
        ks.push_back(k);
        logs.push_back(log_indegree_approx_raw(n, beta, k));
    }
    if (logs.empty()) throw invalid_input("indegree_pdf_approx: empty valid k-range");
    const double m = *std::max_element(logs.begin(), logs.end());
    double total = 0.0;
    for (double l : logs) total += std::exp(l - m);
    const double log_norm = m + std::log(total);
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < ks.size(); ++i)
        out[ks[i]] = std::exp(logs[i] - log_norm);
    return out;
}

double indegree_pdf_approx(std::int64_t n, double alpha, int d, std::int64_t k) {
    const double beta = (alpha - 1.0) / d;
    if (!(static_cast<double>(k) > beta + 1.0))
        throw std::domain_error("indegree_pdf_approx: requires k > beta+1");
    if (k > n - 1) throw invalid_input("indegree_pdf_approx: k must be <= n-1");
    return indegree_pdf_approx_all(n, alpha, d)[k];
}

double indegree_exponent(double alpha, int d) {
    if (!(alpha > d + 1)) throw invalid_input("indegree_exponent: alpha must exceed d+1");
    return (alpha - 1.0) / d + 1.0;
}

std::optional<double> clustering_constant(double alpha, int d) {
    if (d % 2 == 0) return std::nullopt;
    if (!(alpha > 2 * d + 1))
        throw std::domain_error("clustering_constant: requires alpha > 2d+1");
    const double a2 = (alpha - 1.0) * (alpha - 1.0);
    const double pref = d * double_factorial(d) / double_factorial(d - 1);
    double sum = 0.0;
    for (int k = 0; k <= (d - 1) / 2; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const double m = 2.0 * k + d + 1.0;
        const double term =
            (1.0 / d) * a2 / (a2 - static_cast<double>(d) * d) -
            1.0 / (std::pow(2.0, 2 * k + 1) * m) * a2 / (a2 - m * m);
        sum += sign / (2.0 * k + 1.0) * binom_int((d - 1) / 2, k) * term;
    }
    return pref * sum;
}

std::optional<double> clustering_limit(int d) {
    if (d % 2 == 0) return std::nullopt;
    const double pref = d * double_factorial(d) / double_factorial(d - 1);
    double sum = 0.0;
    for (int k = 0; k <= (d - 1) / 2; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const double m = 2.0 * k + d + 1.0;
        sum += sign / (2.0 * k + 1.0) * binom_int((d - 1) / 2, k) *
               (1.0 / d - 1.0 / (std::pow(2.0, 2 * k + 1) * m));
    }
    return pref * sum;
}

double clustering_constant_mc(double alpha, int d, std::int64_t samples, std::uint64_t seed) {
    if (!(alpha > 2 * d + 1))
        throw std::domain_error("clustering_constant_mc: requires alpha > 2d+1");
    std::mt19937_64 rng(seed);
    auto u01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    // In the n->inf limit r/r0 follows a Pareto law with index alpha-1.
    auto pareto = [&] { return std::pow(1.0 - u01(), -1.0 / (alpha - 1.0)); };
    auto gauss = [&] {
        const double u1 = std::max(u01(), 1e-300), u2 = u01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    };
    std::vector<double> x(d), y(d);
    auto ball_point = [&](std::vector<double>& p, double radius) {
        double norm2 = 0.0;
        for (auto& c : p) { c = gauss(); norm2 += c * c; }
        const double scale = radius * std::pow(u01(), 1.0 / d) / std::sqrt(std::max(norm2, 1e-300));
        for (auto& c : p) c *= scale;
    };
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < samples; ++i) {
        const double ru = pareto(), rw = pareto();
        ball_point(x, ru);
        ball_point(y, ru);
        double dist2 = 0.0;
        for (int j = 0; j < d; ++j) dist2 += (x[j] - y[j]) * (x[j] - y[j]);
        if (dist2 < rw * rw) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

double reciprocity_limit(double alpha, int d) {
    if (!(alpha > d + 1)) throw invalid_input("reciprocity_limit: alpha must exceed d+1");
    const double beta = (alpha - 1.0) / d;
    return (2.0 * beta - 2.0) / (2.0 * beta - 1.0);
}

double expected_paths(std::int64_t n, std::int64_t k, double z) {
    if (k < 1 || k > n - 1) throw invalid_input("expected_paths: k must lie in [1, n-1]");
    if (!(z > 0.0 && z < 1.0)) throw invalid_input("expected_paths: z must lie in (0,1)");
    const double lp = log_choose(static_cast<double>(n - 2), static_cast<double>(k - 1)) +
                      static_cast<double>(k) * std::log(z) +
                      std::lgamma(static_cast<double>(k));
    return std::exp(lp);
}

std::int64_t path_threshold_k(std::int64_t n, double z) {
    for (std::int64_t k = 1; k <= n - 1; ++k)
        if (expected_paths(n, k, z) >= 1.0) return k;
    throw undefined_statistic("path_threshold_k: E[a_k] < 1 for every k");
}

double pair_distance_pdf(double r, double R, int d) {
    if (d % 2 == 0) throw std::domain_error("pair_distance_pdf: d must be odd");
    if (!(R > 0.0) || r < 0.0 || r > 2.0 * R)
        throw invalid_input("pair_distance_pdf: r must lie in [0, 2R]");
    const double t = r / (2.0 * R);
    double sum = 0.0;
    for (int k = 0; k <= (d - 1) / 2; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += sign / (2.0 * k + 1.0) * binom_int((d - 1) / 2, k) *
               (1.0 - std::pow(t, 2 * k + 1));
    }
    return d * std::pow(r, d - 1) / std::pow(R, d) * double_factorial(d) /
           double_factorial(d - 1) * sum;
}

double pair_distance_cdf(double r, double R, int d) {
    if (d % 2 == 0) throw std::domain_error("pair_distance_cdf: d must be odd");
    if (!(R > 0.0) || r < 0.0 || r > 2.0 * R)
        throw invalid_input("pair_distance_cdf: r must lie in [0, 2R]");
    const double t = r / R;
    double sum = 0.0;
    for (int k = 0; k <= (d - 1) / 2; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const double m = 2.0 * k + d + 1.0;
        sum += sign / (2.0 * k + 1.0) * binom_int((d - 1) / 2, k) *
               (std::pow(t, d) / d - std::pow(t, m) / (std::pow(2.0, 2 * k + 1) * m));
    }
    return d * double_factorial(d) / double_factorial(d - 1) * sum;
}

namespace {

// E[r^s] for the truncated Pareto law with parameters (alpha, r0).
double truncated_pareto_moment(double alpha, double s, double r0) {
    const double eta = pareto_normalizer(alpha, r0);
    const double p = s - alpha + 1.0;
    return eta / p * (std::pow(0.5, p) - std::pow(r0, p));
}

}  // namespace

double moment_integral(double alpha, int m, double r0) {
    if (!(std::fabs(static_cast<double>(m)) < alpha - 1.0))
        throw std::domain_error("moment_integral: requires |m| < alpha-1");
    return truncated_pareto_moment(alpha, static_cast<double>(m), r0) *
           truncated_pareto_moment(alpha, -static_cast<double>(m), r0);
}

double moment_integral_limit(double alpha, int m) {
    if (!(std::fabs(static_cast<double>(m)) < alpha - 1.0))
        throw std::domain_error("moment_integral_limit: requires |m| < alpha-1");
    const double a2 = (alpha - 1.0) * (alpha - 1.0);
    return a2 / (a2 - static_cast<double>(m) * m);
}

TheoryReport make_theory_report(std::int64_t n, double alpha, int d, std::int64_t max_path_k) {
    TheoryReport r;
    r.n = n;
    r.alpha = alpha;
    r.dim = d;
    r.beta = (alpha - 1.0) / d;
    r.r0 = min_radius(n, d);
    r.eta = pareto_normalizer(alpha, r.r0);
    r.z_exact = edge_prob_exact(n, alpha, d);
    r.z_asymptotic = edge_prob_asymptotic(n, alpha, d);
    r.z_correction_order =
        std::pow(std::log(static_cast<double>(n)) / static_cast<double>(n), r.beta - 1.0);
    r.expected_edges = expected_edges(n, alpha, d);
    r.indegree_exponent = indegree_exponent(alpha, d);
    if (alpha > 2 * d + 1) {
        r.clustering_constant = clustering_constant(alpha, d);
        if (!r.clustering_constant)
            r.clustering_constant_mc = clustering_constant_mc(alpha, d);
    }
    r.clustering_limit_alpha_inf = clustering_limit(d);
    r.reciprocity_limit = reciprocity_limit(alpha, d);
    for (std::int64_t k = 1; k <= std::min<std::int64_t>(max_path_k, n - 1); ++k)
        r.expected_paths[k] = expected_paths(n, k, r.z_exact);
    r.path_threshold_k = path_threshold_k(n, r.z_exact);
    return r;
}

}  // namespace drgg
