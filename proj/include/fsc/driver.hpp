#pragma once

#include "fsc/integrate.hpp"

namespace fsc {

/// Time instant plus modal coefficient arrays, tied to the basis they live in.
struct ModalState {
    double t = 0.0;
    std::shared_ptr<const Basis> basis;
    Eigen::MatrixXd U;  // (n_dof, P+1)
    Eigen::MatrixXd V;
};

struct FscConfig {
    std::size_t flow_order = 3;       // M
    std::size_t basis_size = 5;       // P (non-constant members)
    double warmup_duration = 0.0;     // seconds of gPC before the FSC loop
    std::size_t warmup_index_bound = 6;
    double drop_tol = 1e-10;
    TimeGrid time;
    std::size_t update_every = 1;     // basis update cadence in RK4 steps

    FscConfig(TimeGrid tg) : time(tg) {}
};

/// Moment histories per output quantity (u, u-dot per dof).
struct MomentSeries {
    std::vector<double> t;
    std::vector<std::vector<double>> mean_u, var_u;  // [dof][instant]
    std::vector<std::vector<double>> mean_v, var_v;
};

/// Build the FSC basis at the state's time: Phi_0 = 1 followed by the first P
/// enriched flow-map components, orthogonalized. Throws DegenerateBasisError
/// when the candidates are linearly dependent (deterministic ICs).
Basis build_fsc_basis(const Model& model, const ModalState& state, const FscConfig& cfg);

/// Mean-square modal transfer of (U, V) onto a new basis; time unchanged.
ModalState transfer_modes(const ModalState& old_state,
                          std::shared_ptr<const Basis> new_basis);

struct FscResult {
    MomentSeries series;
    ModalState final_state;
};

/// gPC warm-up followed by the FSC loop: rebuild basis, transfer modes,
/// integrate, record moments after each RK4 step.
FscResult run_fsc(const ModelPtr& model, const FscConfig& cfg);

}  // namespace fsc
