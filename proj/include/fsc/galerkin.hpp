#pragma once

#include <Eigen/Dense>

#include "fsc/models.hpp"

namespace fsc {

/// The stochastic ODE projected onto a Basis: a deterministic coupled system
/// in the modal coefficients. Modal arrays are shaped (n_dof, P+1).
///
/// The force terms are evaluated node-wise each step (reconstruct, apply the
/// model, project); for constant mass this equals the explicit tensor
/// contraction by linearity of the quadrature. The dense coefficient tensors
/// are exposed for verification.
class ProjectedSystem {
  public:
    ProjectedSystem(ModelPtr model, std::shared_ptr<const Basis> basis);

    const Basis& basis() const { return *basis_; }
    const std::shared_ptr<const Basis>& basis_ptr() const { return basis_; }
    const ModelPtr& model() const { return model_; }
    std::size_t n_dof() const { return model_->n_dof(); }
    std::size_t n_modes() const { return basis_->size(); }

    /// Modal accelerations for modal state (U, V).
    Eigen::MatrixXd modal_rhs(double t, const Eigen::MatrixXd& U,
                              const Eigen::MatrixXd& V) const;

    /// Node values per dof from modal coefficients.
    std::vector<GridFunction> reconstruct(const Eigen::MatrixXd& coeffs) const;

    /// Per-dof projection of node values onto the basis.
    Eigen::MatrixXd project_dofs(const std::vector<GridFunction>& f) const;

    /// c^i_j = <Psi_i, c Psi_j> / <Psi_i, Psi_i> for a random coefficient c.
    Eigen::MatrixXd coefficient_matrix(const GridFunction& c) const;

    /// Dense T^i_{jkl} = <Psi_i, w Psi_j Psi_k Psi_l> / <Psi_i, Psi_i>,
    /// flattened with i slowest. Built from sorted (j,k,l) triples so the
    /// symmetry in the trailing indices holds exactly.
    std::vector<double> cubic_tensor(const GridFunction& w) const;

  private:
    ModelPtr model_;
    std::shared_ptr<const Basis> basis_;
    Eigen::MatrixXd values_;      // Q x (P+1), Psi_j at nodes
    Eigen::MatrixXd projector_;   // (P+1) x Q, Psi_j w / norm_j
};

/// Node values per dof from modal coefficients, without a ProjectedSystem.
std::vector<GridFunction> reconstruct(const Basis& basis, const Eigen::MatrixXd& coeffs);

}  // namespace fsc
