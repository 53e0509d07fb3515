#include "fsc/galerkin.hpp"

namespace fsc {

ProjectedSystem::ProjectedSystem(ModelPtr model, std::shared_ptr<const Basis> basis)
    : model_(std::move(model)), basis_(std::move(basis)) {
    if (model_->grid()->id() != basis_->grid()->id())
        throw std::invalid_argument("ProjectedSystem: model grid != basis grid");
    const auto Q = static_cast<Eigen::Index>(basis_->grid()->size());
    const auto n = static_cast<Eigen::Index>(basis_->size());
    values_.resize(Q, n);
    projector_.resize(n, Q);
    const auto& w = basis_->grid()->weights();
    for (Eigen::Index j = 0; j < n; ++j) {
        const auto& psi = basis_->psi(static_cast<std::size_t>(j));
        const double norm = basis_->squared_norm(static_cast<std::size_t>(j));
        for (Eigen::Index i = 0; i < Q; ++i) {
            values_(i, j) = psi[static_cast<std::size_t>(i)];
            projector_(j, i) = psi[static_cast<std::size_t>(i)] *
                               w[static_cast<std::size_t>(i)] / norm;
        }
    }
}

std::vector<GridFunction> ProjectedSystem::reconstruct(const Eigen::MatrixXd& coeffs) const {
    if (coeffs.rows() != static_cast<Eigen::Index>(n_dof()) ||
        coeffs.cols() != static_cast<Eigen::Index>(n_modes()))
        throw std::invalid_argument("reconstruct: modal array shape mismatch");
    std::vector<GridFunction> out;
    out.reserve(n_dof());
    for (Eigen::Index d = 0; d < coeffs.rows(); ++d) {
        Eigen::VectorXd nodes = values_ * coeffs.row(d).transpose();
        std::vector<double> v(nodes.data(), nodes.data() + nodes.size());
        out.emplace_back(basis_->grid(), std::move(v));
    }
    return out;
}

Eigen::MatrixXd ProjectedSystem::project_dofs(const std::vector<GridFunction>& f) const {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(f.size()),
                        static_cast<Eigen::Index>(n_modes()));
    for (std::size_t d = 0; d < f.size(); ++d) {
        if (f[d].grid()->id() != basis_->grid()->id())
            throw std::invalid_argument("project_dofs: grid mismatch");
        Eigen::Map<const Eigen::VectorXd> nodes(f[d].values().data(),
                                                static_cast<Eigen::Index>(f[d].size()));
        out.row(static_cast<Eigen::Index>(d)) = (projector_ * nodes).transpose();
    }
    return out;
}

Eigen::MatrixXd ProjectedSystem::modal_rhs(double t, const Eigen::MatrixXd& U,
                                           const Eigen::MatrixXd& V) const {
    return project_dofs(model_->rhs(t, reconstruct(U), reconstruct(V)));
}

Eigen::MatrixXd ProjectedSystem::coefficient_matrix(const GridFunction& c) const {
    const auto n = static_cast<Eigen::Index>(n_modes());
    Eigen::MatrixXd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            double s = 0.0;
            const auto& w = basis_->grid()->weights();
            const auto& pi = basis_->psi(static_cast<std::size_t>(i));
            const auto& pj = basis_->psi(static_cast<std::size_t>(j));
            for (std::size_t q = 0; q < w.size(); ++q) s += pi[q] * c[q] * pj[q] * w[q];
            out(i, j) = s / basis_->squared_norm(static_cast<std::size_t>(i));
        }
    return out;
}

std::vector<double> ProjectedSystem::cubic_tensor(const GridFunction& w) const {
    const std::size_t n = n_modes();
    std::vector<double> T(n * n * n * n, 0.0);
    const auto& wt = basis_->grid()->weights();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& pi = basis_->psi(i);
        const double norm = basis_->squared_norm(i);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = j; k < n; ++k)
                for (std::size_t l = k; l < n; ++l) {
                    double s = 0.0;
                    const auto& pj = basis_->psi(j);
                    const auto& pk = basis_->psi(k);
                    const auto& pl = basis_->psi(l);
                    for (std::size_t q = 0; q < wt.size(); ++q)
                        s += pi[q] * w[q] * pj[q] * pk[q] * pl[q] * wt[q];
                    s /= norm;
                    // fill all permutations of (j,k,l)
                    const std::size_t idx[3] = {j, k, l};
                    std::size_t perms[6][3] = {{idx[0], idx[1], idx[2]}, {idx[0], idx[2], idx[1]},
                                               {idx[1], idx[0], idx[2]}, {idx[1], idx[2], idx[0]},
                                               {idx[2], idx[0], idx[1]}, {idx[2], idx[1], idx[0]}};
                    for (auto& p : perms)
                        T[((i * n + p[0]) * n + p[1]) * n + p[2]] = s;
                }
    }
    return T;
}

std::vector<GridFunction> reconstruct(const Basis& basis, const Eigen::MatrixXd& coeffs) {
    if (coeffs.cols() != static_cast<Eigen::Index>(basis.size()))
        throw std::invalid_argument("reconstruct: modal array shape mismatch");
    std::vector<GridFunction> out;
    out.reserve(static_cast<std::size_t>(coeffs.rows()));
    for (Eigen::Index d = 0; d < coeffs.rows(); ++d) {
        std::vector<double> v(basis.grid()->size(), 0.0);
        for (Eigen::Index j = 0; j < coeffs.cols(); ++j) {
            const auto& psi = basis.psi(static_cast<std::size_t>(j));
            const double c = coeffs(d, j);
            for (std::size_t q = 0; q < v.size(); ++q) v[q] += c * psi[q];
        }
        out.emplace_back(basis.grid(), std::move(v));
    }
    return out;
}

}  // namespace fsc
