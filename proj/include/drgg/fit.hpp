#pragma once

#include <cstdint>

#include "drgg/graphstats.hpp"

namespace drgg {

enum class FitMethod { mle_tail, loglog_ls };

struct FitResult {
    double beta_hat = 0.0;
    double alpha_hat = 0.0;  // beta_hat * d + 1 for the supplied d
    double z_hat = 0.0;
    std::int64_t k_min = 1;
    double goodness = 0.0;  // KS distance on the fitted tail
    FitMethod method = FitMethod::mle_tail;
};

// Power-law tail fit of a degree histogram: gamma_hat on k >= k_min with
// k_min chosen to minimize the KS distance; beta_hat = gamma_hat - 1.
// Throws insufficient_data when fewer than 50 vertices have degree >= 2.
FitResult fit_powerlaw_tail(const DegreeHistogram& hist,
                            FitMethod method = FitMethod::mle_tail);

struct BinomialFit {
    double z_hat = 0.0;
    double tv_distance = 0.0;  // total variation vs Binomial(n-1, z_hat)
};

// Method-of-moments (= MLE) binomial fit of an outdegree histogram.
BinomialFit fit_binomial(const DegreeHistogram& hist, std::int64_t n);

// Joint fit: beta from the indegree tail, z from the outdegree.
FitResult fit_model(const DegreeHistogram& in_hist, const DegreeHistogram& out_hist,
                    std::int64_t n, int d, FitMethod method = FitMethod::mle_tail);

}  // namespace drgg
