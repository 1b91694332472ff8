#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "drgg/geometry.hpp"

namespace drgg {

// Closed-form predictions for G(n, alpha, d).
struct TheoryReport {
    std::int64_t n = 0;
    double alpha = 0.0;
    int dim = 0;
    double beta = 0.0;  // (alpha-1)/d
    double r0 = 0.0;
    double eta = 0.0;
    double z_exact = 0.0;
    double z_asymptotic = 0.0;
    double z_correction_order = 0.0;  // magnitude of the dropped (log n/n)^(beta-1) term
    double expected_edges = 0.0;
    double indegree_exponent = 0.0;  // beta + 1
    std::optional<double> clustering_constant;       // closed form, odd d only
    std::optional<double> clustering_constant_mc;    // Monte Carlo fallback (even d)
    std::optional<double> clustering_limit_alpha_inf;
    double reciprocity_limit = 0.0;
    std::map<std::int64_t, double> expected_paths;  // k -> E[a_k]
    std::int64_t path_threshold_k = 0;
};

// Exact per-pair edge probability z = eta V_d/(d-alpha+1) (2^-(d-alpha+1) - r0^(d-alpha+1)).
double edge_prob_exact(std::int64_t n, double alpha, int d);

// Leading term ((alpha-1)/(alpha-1-d)) ln n / n.
double edge_prob_asymptotic(std::int64_t n, double alpha, int d);

// n (n-1) z_exact.
double expected_edges(std::int64_t n, double alpha, int d);

// Quadrature of the integral form of P[indegree = k] over n-1 other vertices.
double indegree_pdf_exact(std::int64_t n, double alpha, int d, std::int64_t k);
std::vector<double> indegree_pdf_exact_all(std::int64_t n, double alpha, int d);

// Steepest-descent closed form, renormalized over k in (beta+1, n-1].
// Throws std::domain_error for k <= beta+1.
double indegree_pdf_approx(std::int64_t n, double alpha, int d, std::int64_t k);
// Renormalized values for all k in [0, n-1]; entries at k <= beta+1 are 0.
std::vector<double> indegree_pdf_approx_all(std::int64_t n, double alpha, int d);

// (alpha-1)/d + 1.
double indegree_exponent(double alpha, int d);

// Closed-form n->inf clustering constant (odd d, alpha > 2d+1); nullopt for even d.
std::optional<double> clustering_constant(double alpha, int d);

// Monte Carlo estimate of the n->inf clustering constant, any d: radii are
// sampled from the limiting Pareto ratio law and the two-ball event is sampled
// directly. Unlike the closed form, this makes no polynomial-tail approximation.
double clustering_constant_mc(double alpha, int d, std::int64_t samples = 2'000'000,
                              std::uint64_t seed = 1);

// alpha->inf limit of the clustering constant (odd d); nullopt for even d.
std::optional<double> clustering_limit(int d);

// (2 beta - 2)/(2 beta - 1) with beta = (alpha-1)/d.
double reciprocity_limit(double alpha, int d);

// E[a_k] = C(n-2, k-1) z^k (k-1)!, evaluated in log-space.
double expected_paths(std::int64_t n, std::int64_t k, double z);

// Smallest k with E[a_k] >= 1.
std::int64_t path_threshold_k(std::int64_t n, double z);

// Density / CDF of the distance between two uniform points in a d-ball of
// radius R (odd d only).
double pair_distance_pdf(double r, double R, int d);
double pair_distance_cdf(double r, double R, int d);

// E[(r_w/r_u)^m] for independent truncated-Pareto radii, closed form at
// finite r0; throws std::domain_error when |m| >= alpha-1.
double moment_integral(double alpha, int m, double r0);
// r0 -> 0 limit (alpha-1)^2 / ((alpha-1)^2 - m^2).
double moment_integral_limit(double alpha, int m);

TheoryReport make_theory_report(std::int64_t n, double alpha, int d,
                                std::int64_t max_path_k = 12);

}  // namespace drgg
