#include "drgg/geometry.hpp"

#include <cmath>
#include <string>

namespace drgg {

double torus_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size() || p.empty())
        throw invalid_input("torus_distance: dimension mismatch (" +
                            std::to_string(p.size()) + " vs " + std::to_string(q.size()) + ")");
    double sq = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double delta = std::fabs(p[i] - q[i]);
        if (delta > 0.5) delta = 1.0 - delta;
        sq += delta * delta;
    }
    return std::sqrt(sq);
}

double ball_volume(int d) {
    if (d <= 0) throw invalid_input("ball_volume: d must be >= 1");
    return std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

double sphere_surface(int d) {
    if (d <= 0) throw invalid_input("sphere_surface: d must be >= 1");
    return 2.0 * std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0);
}

static double min_radius_raw(std::int64_t n, int d) {
    return std::pow(std::log(static_cast<double>(n)) / (ball_volume(d) * static_cast<double>(n)),
                    1.0 / d);
}

std::int64_t min_feasible_n(int d) {
    // Need ln n / n < V_d / 2^d; the left side decreases for n >= 3.
    const double c = ball_volume(d) / std::pow(2.0, d);
    std::int64_t n = 2;
    if (min_radius_raw(n, d) < 0.5) return n;
    // Fixed-point iteration on n = ln(n)/c, then settle by scanning.
    double x = 8.0;
    for (int i = 0; i < 64; ++i) x = std::max(8.0, std::log(x) / c);
    n = static_cast<std::int64_t>(x);
    while (n > 2 && min_radius_raw(n - 1, d) < 0.5) --n;
    while (min_radius_raw(n, d) >= 0.5) ++n;
    return n;
}

double min_radius(std::int64_t n, int d) {
    if (n < 2) throw invalid_input("min_radius: n must be >= 2");
    const double r0 = min_radius_raw(n, d);
    if (!(r0 < 0.5))
        throw model_infeasible("min_radius: r0 = " + std::to_string(r0) +
                               " >= 1/2 at n = " + std::to_string(n) + ", d = " +
                               std::to_string(d) + "; minimum feasible n is " +
                               std::to_string(min_feasible_n(d)));
    return r0;
}

double pareto_normalizer(double alpha, double r0) {
    if (!(r0 > 0.0 && r0 < 0.5))
        throw invalid_input("pareto_normalizer: r0 must lie in (0, 1/2)");
    if (!(alpha > 1.0)) throw invalid_input("pareto_normalizer: alpha must be > 1");
    return (alpha - 1.0) * std::pow(r0, alpha - 1.0) /
           (1.0 - std::pow(2.0 * r0, alpha - 1.0));
}

RadiusLaw RadiusLaw::make(double alpha, double r0, int dim) {
    if (dim < 1) throw invalid_input("RadiusLaw: dim must be >= 1");
    return RadiusLaw{alpha, r0, pareto_normalizer(alpha, r0), dim};
}

double RadiusLaw::pdf(double r) const {
    if (r < r0 || r > 0.5) return 0.0;
    return eta / std::pow(r, alpha);
}

double RadiusLaw::cdf(double r) const {
    if (r <= r0) return 0.0;
    if (r >= 0.5) return 1.0;
    return eta / (alpha - 1.0) * (std::pow(r0, 1.0 - alpha) - std::pow(r, 1.0 - alpha));
}

double sample_radius(const RadiusLaw& law, double u) {
    if (!(u >= 0.0 && u <= 1.0)) throw invalid_input("sample_radius: u must lie in [0,1]");
    const double base =
        std::pow(law.r0, 1.0 - law.alpha) - u * (law.alpha - 1.0) / law.eta;
    double r = std::pow(base, 1.0 / (1.0 - law.alpha));
    if (r < law.r0) r = law.r0;
    if (r > 0.5) r = 0.5;
    return r;
}

}  // namespace drgg
