#pragma once

#include <cmath>

#include "fsc/quadrature.hpp"
#include "fsc/rfs.hpp"

namespace fsc::test {

inline GridPtr grid1(const Distribution& d, std::size_t n) {
    return tensor_grid(RandomDomain({d}), {n});
}

// E[x^p] in closed form, for checking quadrature exactness independently.
// Uniform: direct integral; Beta via the raw moments of the standard Beta
// (prod (alpha+r)/(alpha+beta+r)) and the binomial shift; Gamma likewise from
// E[(x-a)^r] = Gamma(alpha+r)/(Gamma(alpha) beta^r).
inline double raw_moment(const Distribution& d, unsigned p) {
    auto binom = [](unsigned n, unsigned k) {
        double r = 1.0;
        for (unsigned i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
        return r;
    };
    switch (d.kind) {
        case DistKind::Uniform:
            return (std::pow(d.b, p + 1) - std::pow(d.a, p + 1)) /
                   ((static_cast<double>(p) + 1.0) * (d.b - d.a));
        case DistKind::Beta: {
            double sum = 0.0;
            for (unsigned r = 0; r <= p; ++r) {
                double m = 1.0;  // E[Y^r], Y ~ Beta(alpha, beta) on [0,1]
                for (unsigned i = 0; i < r; ++i)
                    m *= (d.alpha + i) / (d.alpha + d.beta + i);
                sum += binom(p, r) * std::pow(d.a, p - r) * std::pow(d.b - d.a, r) * m;
            }
            return sum;
        }
        case DistKind::Gamma: {
            double sum = 0.0;
            for (unsigned r = 0; r <= p; ++r) {
                double m = 1.0;  // E[Z^r], Z ~ Gamma(alpha, rate beta)
                for (unsigned i = 0; i < r; ++i) m *= (d.alpha + i) / d.beta;
                sum += binom(p, r) * std::pow(d.a, p - r) * m;
            }
            return sum;
        }
    }
    return 0.0;
}

}  // namespace fsc::test
