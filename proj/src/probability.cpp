#include "fsc/probability.hpp"

#include <cmath>
#include <random>

namespace fsc {

Distribution Distribution::make_uniform(double a, double b) {
    if (!(b > a) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("Uniform requires finite b > a");
    Distribution d;
    d.kind = DistKind::Uniform;
    d.a = a;
    d.b = b;
    return d;
}

Distribution Distribution::make_beta(double alpha, double beta, double a, double b) {
    if (!(b > a) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("Beta requires finite b > a");
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("Beta requires alpha > 0 and beta > 0");
    Distribution d;
    d.kind = DistKind::Beta;
    d.a = a;
    d.b = b;
    d.alpha = alpha;
    d.beta = beta;
    return d;
}

Distribution Distribution::make_gamma(double alpha, double beta, double a) {
    if (!std::isfinite(a)) throw std::invalid_argument("Gamma requires finite a");
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("Gamma requires alpha > 0 and beta > 0");
    Distribution d;
    d.kind = DistKind::Gamma;
    d.a = a;
    d.b = std::numeric_limits<double>::infinity();
    d.alpha = alpha;
    d.beta = beta;
    return d;
}

double density(const Distribution& dist, double x) {
    switch (dist.kind) {
        case DistKind::Uniform:
            if (x < dist.a || x > dist.b) throw std::domain_error("x outside support");
            return 1.0 / (dist.b - dist.a);
        case DistKind::Beta: {
            if (x < dist.a || x > dist.b) throw std::domain_error("x outside support");
            const double w = dist.b - dist.a;
            const double lb = std::lgamma(dist.alpha) + std::lgamma(dist.beta) -
                              std::lgamma(dist.alpha + dist.beta);
            // Handle the boundary power 0^0 = 1 at integer exponents.
            auto pw = [](double base, double e) {
                if (base == 0.0) return e == 0.0 ? 1.0 : 0.0;
                return std::pow(base, e);
            };
            return pw(x - dist.a, dist.alpha - 1.0) * pw(dist.b - x, dist.beta - 1.0) /
                   (std::pow(w, dist.alpha + dist.beta - 1.0) * std::exp(lb));
        }
        case DistKind::Gamma: {
            if (x < dist.a) throw std::domain_error("x outside support");
            const double y = x - dist.a;
            auto pw = [](double base, double e) {
                if (base == 0.0) return e == 0.0 ? 1.0 : 0.0;
                return std::pow(base, e);
            };
            return std::exp(dist.alpha * std::log(dist.beta) - std::lgamma(dist.alpha)) *
                   pw(y, dist.alpha - 1.0) * std::exp(-dist.beta * y);
        }
    }
    throw std::logic_error("unreachable");
}

Moments moments(const Distribution& dist) {
    switch (dist.kind) {
        case DistKind::Uniform: {
            const double w = dist.b - dist.a;
            return {0.5 * (dist.a + dist.b), w * w / 12.0};
        }
        case DistKind::Beta: {
            const double w = dist.b - dist.a;
            const double s = dist.alpha + dist.beta;
            return {dist.a + w * dist.alpha / s,
                    w * w * dist.alpha * dist.beta / (s * s * (s + 1.0))};
        }
        case DistKind::Gamma:
            return {dist.a + dist.alpha / dist.beta, dist.alpha / (dist.beta * dist.beta)};
    }
    throw std::logic_error("unreachable");
}

RandomDomain::RandomDomain(std::vector<Distribution> ax) : axes(std::move(ax)) {
    if (axes.empty()) throw std::invalid_argument("RandomDomain needs at least one axis");
}

namespace {

double draw_axis(const Distribution& d, std::mt19937_64& rng) {
    switch (d.kind) {
        case DistKind::Uniform: {
            std::uniform_real_distribution<double> u(d.a, d.b);
            return u(rng);
        }
        case DistKind::Beta: {
            // Beta(alpha, beta) via the two-Gamma construction, then affine map.
            std::gamma_distribution<double> g1(d.alpha, 1.0), g2(d.beta, 1.0);
            const double x = g1(rng);
            const double y = g2(rng);
            return d.a + (d.b - d.a) * (x / (x + y));
        }
        case DistKind::Gamma: {
            // Shape-scale draw shifted by a.
            std::gamma_distribution<double> g(d.alpha, 1.0 / d.beta);
            return d.a + g(rng);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::vector<std::vector<double>> sample(const RandomDomain& domain, std::size_t n,
                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> out(n, std::vector<double>(domain.dim()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < domain.dim(); ++j) out[i][j] = draw_axis(domain.axes[j], rng);
    return out;
}

}  // namespace fsc
