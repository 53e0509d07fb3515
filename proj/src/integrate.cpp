#include "fsc/integrate.hpp"

#include <cmath>

namespace fsc {

TimeGrid::TimeGrid(double dt_, double T_) : dt(dt_), T(T_) {
    if (!(dt > 0.0) || !(T > 0.0)) throw std::invalid_argument("TimeGrid: dt, T must be > 0");
    N = static_cast<std::size_t>(std::llround(T / dt));
    if (N < 1 || std::abs(static_cast<double>(N) * dt - T) > 1e-12 * T)
        throw std::invalid_argument("TimeGrid: N * dt must equal T");
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> rk4_step(const ProjectedSystem& sys, double t,
                                                     const Eigen::MatrixXd& U,
                                                     const Eigen::MatrixXd& V, double h) {
    if (!(h != 0.0)) throw std::invalid_argument("rk4_step: h must be nonzero");
    const Eigen::MatrixXd k1u = V;
    const Eigen::MatrixXd k1v = sys.modal_rhs(t, U, V);
    const Eigen::MatrixXd k2u = V + 0.5 * h * k1v;
    const Eigen::MatrixXd k2v = sys.modal_rhs(t + 0.5 * h, U + 0.5 * h * k1u, k2u);
    const Eigen::MatrixXd k3u = V + 0.5 * h * k2v;
    const Eigen::MatrixXd k3v = sys.modal_rhs(t + 0.5 * h, U + 0.5 * h * k2u, k3u);
    const Eigen::MatrixXd k4u = V + h * k3v;
    const Eigen::MatrixXd k4v = sys.modal_rhs(t + h, U + h * k3u, k4u);
    Eigen::MatrixXd Un = U + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    Eigen::MatrixXd Vn = V + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    if (!Un.allFinite() || !Vn.allFinite())
        throw DivergenceError("rk4_step: non-finite state after step at t = " +
                              std::to_string(t));
    return {std::move(Un), std::move(Vn)};
}

}  // namespace fsc
