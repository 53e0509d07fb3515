#pragma once

#include "fsc/driver.hpp"

namespace fsc {

/// Cosine integral Ci(x) = -int_x^inf cos(y)/y dy, x > 0.
double cosine_integral(double x);

/// Closed-form statistics of the undamped SDOF free-vibration problem with
/// uniformly distributed stiffness in [k_a, k_b].
struct ExactSDOFReference {
    double m;
    double k_a;
    double k_b;
    double u0;
    double v0;

    ExactSDOFReference(double m_, double ka_, double kb_, double u0_, double v0_);
};

struct ExactMoments {
    Moments u;
    Moments v;
    Moments a;
};

/// Exact mean/variance of u, u-dot, u-double-dot at time t. For t below 1e-3 s
/// the t^-2 prefactor cancels catastrophically, so the deterministic-IC limits
/// are returned instead.
ExactMoments exact_moments(const ExactSDOFReference& ref, double t);

/// Long-time variance limits of u, u-dot, u-double-dot.
struct VarianceLimits {
    double u;
    double v;
    double a;
};
VarianceLimits variance_limits(const ExactSDOFReference& ref);

/// Standard Monte Carlo: sample n parameter tuples, integrate each
/// deterministic trajectory with RK4 on the time grid, aggregate mean and
/// (N-1)-denominator variance. Deterministic for a fixed seed.
MomentSeries monte_carlo(const ModelPtr& model, const RandomDomain& domain, std::size_t n,
                         std::uint64_t seed, const TimeGrid& tg);

/// Local and global error per the time-averaged absolute-deviation metric.
struct ErrorReport {
    std::vector<double> local;
    double global = 0.0;
};
ErrorReport errors(const std::vector<double>& f, const std::vector<double>& f_exact,
                   const TimeGrid& tg);

/// Mean and variance of u and u-dot at time t.
struct ForcedMoments {
    Moments u;
    Moments v;
};

/// Reference moments for the forced SDOF (m u'' + k u = q sin t) from the
/// closed-form trajectory. The trajectory is affine in q, so the product
/// measure factorizes: a high-resolution Gaussian rule handles the stiffness
/// axis and the closed-form moments of q handle the amplitude axis.
class ForcedSdofReference {
  public:
    ForcedSdofReference(double m, const Distribution& k_dist, const Distribution& q_dist,
                        double u0, double v0, std::size_t k_points = 400);
    ForcedMoments moments(double t) const;

  private:
    double m_, u0_, v0_, q_mean_, q_sq_mean_;
    GaussRule k_rule_;
};

}  // namespace fsc
