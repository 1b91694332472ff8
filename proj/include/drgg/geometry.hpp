#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "drgg/errors.hpp"

namespace drgg {

// Minimum-image Euclidean distance on the unit d-torus.
// Both points must have the same dimension; coordinates live in [0,1).
double torus_distance(std::span<const double> p, std::span<const double> q);

// Volume of the unit d-ball, V_d = pi^(d/2) / Gamma(d/2 + 1).
double ball_volume(int d);

// Surface of the unit (d-1)-sphere, S_{d-1} = 2 pi^(d/2) / Gamma(d/2).
// Satisfies S_{d-1} / V_d = d.
double sphere_surface(int d);

// Connectivity radius r0 = (ln n / (V_d n))^(1/d).
// Throws model_infeasible (naming the minimum feasible n) when r0 >= 1/2.
double min_radius(std::int64_t n, int d);

// Smallest n for which min_radius(n, d) < 1/2.
std::int64_t min_feasible_n(int d);

// Normalizer eta = (alpha-1) r0^(alpha-1) / (1 - (2 r0)^(alpha-1)) making
// eta / r^alpha a density on [r0, 1/2].
double pareto_normalizer(double alpha, double r0);

// Truncated Pareto radius law f(r) = eta / r^alpha on [r0, 1/2].
struct RadiusLaw {
    double alpha;
    double r0;
    double eta;
    int dim;

    static RadiusLaw make(double alpha, double r0, int dim);

    double pdf(double r) const;
    // F(r) = eta/(alpha-1) * (r0^(1-alpha) - r^(1-alpha)), F(r0)=0, F(1/2)=1.
    double cdf(double r) const;
};

// Inverse-CDF draw: the unique r in [r0, 1/2] with F(r) = u.
double sample_radius(const RadiusLaw& law, double u);

}  // namespace drgg
