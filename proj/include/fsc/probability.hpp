#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsc {

/// Families of univariate input distributions supported by the library.
enum class DistKind { Uniform, Beta, Gamma };

/// A univariate distribution on an interval [a, b], with b = +inf for Gamma.
/// Beta uses the density (x-a)^{alpha-1} (b-x)^{beta-1} / ((b-a)^{alpha+beta-1} B(alpha,beta));
/// Gamma uses beta^alpha/Gamma(alpha) (x-a)^{alpha-1} exp(-beta (x-a)).
struct Distribution {
    DistKind kind = DistKind::Uniform;
    double a = 0.0;
    double b = 1.0;  // +inf for Gamma
    double alpha = 0.0;
    double beta = 0.0;

    static Distribution make_uniform(double a, double b);
    static Distribution make_beta(double alpha, double beta, double a, double b);
    static Distribution make_gamma(double alpha, double beta, double a);

    // Jacobi exponents matched to the Beta density on [a,b]:
    // alpha_J = beta - 1, beta_J = alpha - 1. Stored here so the quadrature
    // module cannot mis-map the parameters.
    double jacobi_alpha() const { return beta - 1.0; }
    double jacobi_beta() const { return alpha - 1.0; }
    // Laguerre exponent for Gamma: alpha_L = alpha - 1.
    double laguerre_alpha() const { return alpha - 1.0; }

    bool unbounded() const { return kind == DistKind::Gamma; }
};

/// Probability density at x. Throws std::domain_error outside the support.
double density(const Distribution& dist, double x);

/// Closed-form mean and variance.
struct Moments {
    double mean;
    double variance;
};
Moments moments(const Distribution& dist);

/// Product of independent axis distributions; the joint measure on Xi.
struct RandomDomain {
    std::vector<Distribution> axes;

    explicit RandomDomain(std::vector<Distribution> ax);
    std::size_t dim() const { return axes.size(); }
};

/// n i.i.d. draws from the product measure. Deterministic for a fixed seed.
std::vector<std::vector<double>> sample(const RandomDomain& domain, std::size_t n,
                                        std::uint64_t seed);

}  // namespace fsc
