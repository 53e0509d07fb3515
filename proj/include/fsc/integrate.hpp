#pragma once

#include "fsc/galerkin.hpp"

namespace fsc {

/// Uniform time grid with N * dt = T.
struct TimeGrid {
    double dt = 0.0;
    double T = 0.0;
    std::size_t N = 0;

    TimeGrid(double dt_, double T_);
    double t(std::size_t i) const { return static_cast<double>(i) * dt; }
};

struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One classical RK4 step on the doubled system (U' = V, V' = modal_rhs).
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> rk4_step(const ProjectedSystem& sys, double t,
                                                     const Eigen::MatrixXd& U,
                                                     const Eigen::MatrixXd& V, double h);

/// RK4 step for a deterministic trajectory (Monte Carlo realizations).
/// accel(t, u, v, a) fills n accelerations.
template <typename Accel>
void rk4_step_scalar(Accel&& accel, double t, double h, std::size_t n, double* u, double* v) {
    // One flat scratch buffer reused across calls; this sits inside the
    // per-sample Monte Carlo loop.
    thread_local std::vector<double> scratch;
    scratch.resize(10 * n);
    struct Span {
        double* p;
        std::size_t n;
        double* data() { return p; }
        double& operator[](std::size_t i) { return p[i]; }
    };
    Span k1u{scratch.data(), n}, k1v{scratch.data() + n, n}, k2u{scratch.data() + 2 * n, n},
        k2v{scratch.data() + 3 * n, n}, k3u{scratch.data() + 4 * n, n},
        k3v{scratch.data() + 5 * n, n}, k4u{scratch.data() + 6 * n, n},
        k4v{scratch.data() + 7 * n, n}, tu{scratch.data() + 8 * n, n},
        tv{scratch.data() + 9 * n, n};
    accel(t, u, v, k1v.data());
    for (std::size_t i = 0; i < n; ++i) k1u[i] = v[i];
    for (std::size_t i = 0; i < n; ++i) {
        tu[i] = u[i] + 0.5 * h * k1u[i];
        tv[i] = v[i] + 0.5 * h * k1v[i];
    }
    accel(t + 0.5 * h, tu.data(), tv.data(), k2v.data());
    for (std::size_t i = 0; i < n; ++i) k2u[i] = tv[i];
    for (std::size_t i = 0; i < n; ++i) {
        tu[i] = u[i] + 0.5 * h * k2u[i];
        tv[i] = v[i] + 0.5 * h * k2v[i];
    }
    accel(t + 0.5 * h, tu.data(), tv.data(), k3v.data());
    for (std::size_t i = 0; i < n; ++i) k3u[i] = tv[i];
    for (std::size_t i = 0; i < n; ++i) {
        tu[i] = u[i] + h * k3u[i];
        tv[i] = v[i] + h * k3v[i];
    }
    accel(t + h, tu.data(), tv.data(), k4v.data());
    for (std::size_t i = 0; i < n; ++i) k4u[i] = tv[i];
    for (std::size_t i = 0; i < n; ++i) {
        u[i] += h / 6.0 * (k1u[i] + 2.0 * k2u[i] + 2.0 * k3u[i] + k4u[i]);
        v[i] += h / 6.0 * (k1v[i] + 2.0 * k2v[i] + 2.0 * k3v[i] + k4v[i]);
    }
}

}  // namespace fsc
