#include "fsc/quadrature.hpp"

#include <Eigen/Dense>
#include <atomic>
#include <cmath>

namespace fsc {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal Jacobi
// matrix built from the monic three-term recurrence; weights come from the
// squared first components of the eigenvectors.
GaussRule golub_welsch(const std::vector<double>& diag, const std::vector<double>& offsq) {
    const auto n = static_cast<Eigen::Index>(diag.size());
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        J(i, i) = diag[static_cast<std::size_t>(i)];
        if (i + 1 < n) {
            const double e = std::sqrt(offsq[static_cast<std::size_t>(i + 1)]);
            J(i, i + 1) = e;
            J(i + 1, i) = e;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    double wsum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[static_cast<std::size_t>(i)] = v0 * v0;
        wsum += v0 * v0;
    }
    for (auto& w : rule.weights) w /= wsum;
    return rule;
}

// Monic recurrence coefficients for Jacobi weight (1-x)^a (1+x)^b on [-1,1].
void jacobi_recurrence(double a, double b, std::size_t n, std::vector<double>& diag,
                       std::vector<double>& offsq) {
    diag.resize(n);
    offsq.assign(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double s = 2.0 * kk + a + b;
        if (k == 0)
            diag[k] = (b - a) / (a + b + 2.0);
        else
            diag[k] = (b * b - a * a) / (s * (s + 2.0));
        if (k >= 1) {
            if (k == 1 && a + b == 0.0)
                offsq[k] = 4.0 * (1.0 + a) * (1.0 + b) / (4.0 * 3.0);  // limit of the formula
            else
                offsq[k] = 4.0 * kk * (kk + a) * (kk + b) * (kk + a + b) /
                           (s * s * (s + 1.0) * (s - 1.0));
        }
    }
}

}  // namespace

GaussRule gauss_rule(const Distribution& dist, std::size_t n) {
    if (n == 0) throw std::invalid_argument("gauss_rule: n must be >= 1");
    std::vector<double> diag, offsq;
    GaussRule rule;
    switch (dist.kind) {
        case DistKind::Uniform:
            jacobi_recurrence(0.0, 0.0, n, diag, offsq);
            rule = golub_welsch(diag, offsq);
            for (auto& x : rule.nodes) x = dist.a + 0.5 * (dist.b - dist.a) * (x + 1.0);
            break;
        case DistKind::Beta:
            jacobi_recurrence(dist.jacobi_alpha(), dist.jacobi_beta(), n, diag, offsq);
            rule = golub_welsch(diag, offsq);
            for (auto& x : rule.nodes) x = dist.a + 0.5 * (dist.b - dist.a) * (x + 1.0);
            break;
        case DistKind::Gamma: {
            const double al = dist.laguerre_alpha();
            diag.resize(n);
            offsq.assign(n, 0.0);
            for (std::size_t k = 0; k < n; ++k) {
                const double kk = static_cast<double>(k);
                diag[k] = 2.0 * kk + al + 1.0;
                if (k >= 1) offsq[k] = kk * (kk + al);
            }
            rule = golub_welsch(diag, offsq);
            for (auto& x : rule.nodes) x = dist.a + x / dist.beta;
            break;
        }
    }
    return rule;
}

namespace {
std::atomic<std::uint64_t> next_grid_id{1};
}

QuadratureGrid::QuadratureGrid(const RandomDomain& domain,
                               const std::vector<std::size_t>& per_axis)
    : per_axis_(per_axis), id_(next_grid_id.fetch_add(1)) {
    if (per_axis.size() != domain.dim())
        throw std::invalid_argument("tensor_grid: per_axis length must equal domain dimension");
    const std::size_t d = domain.dim();
    std::vector<GaussRule> rules(d);
    std::size_t total = 1;
    for (std::size_t ax = 0; ax < d; ++ax) {
        rules[ax] = gauss_rule(domain.axes[ax], per_axis[ax]);
        total *= per_axis[ax];
    }
    weights_.resize(total);
    coords_.assign(d, std::vector<double>(total));
    for (std::size_t i = 0; i < total; ++i) {
        // lexicographic, axis 1 slowest
        std::size_t rem = i;
        double w = 1.0;
        for (std::size_t ax = d; ax-- > 0;) {
            const std::size_t j = rem % per_axis[ax];
            rem /= per_axis[ax];
            coords_[ax][i] = rules[ax].nodes[j];
            w *= rules[ax].weights[j];
        }
        weights_[i] = w;
    }
}

GridPtr tensor_grid(const RandomDomain& domain, const std::vector<std::size_t>& per_axis) {
    return std::make_shared<const QuadratureGrid>(domain, per_axis);
}

}  // namespace fsc
