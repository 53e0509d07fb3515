#include "fsc/driver.hpp"

#include <cmath>

namespace fsc {

namespace {

void record_moments(MomentSeries& series, const ModalState& state) {
    const auto n_dof = static_cast<std::size_t>(state.U.rows());
    series.t.push_back(state.t);
    for (std::size_t d = 0; d < n_dof; ++d) {
        std::vector<double> cu(static_cast<std::size_t>(state.U.cols()));
        std::vector<double> cv(cu.size());
        for (Eigen::Index j = 0; j < state.U.cols(); ++j) {
            cu[static_cast<std::size_t>(j)] = state.U(static_cast<Eigen::Index>(d), j);
            cv[static_cast<std::size_t>(j)] = state.V(static_cast<Eigen::Index>(d), j);
        }
        const Moments mu = mean_var(*state.basis, cu);
        const Moments mv = mean_var(*state.basis, cv);
        series.mean_u[d].push_back(mu.mean);
        series.var_u[d].push_back(mu.variance);
        series.mean_v[d].push_back(mv.mean);
        series.var_v[d].push_back(mv.variance);
    }
}

}  // namespace

Basis build_fsc_basis(const Model& model, const ModalState& state, const FscConfig& cfg) {
    const auto u = reconstruct(*state.basis, state.U);
    const auto v = reconstruct(*state.basis, state.V);
    const EnrichedState enriched = model.enriched_flow(state.t, u, v);
    const auto flow = enriched.flow_candidates();
    if (cfg.basis_size > flow.size())
        throw std::invalid_argument("basis_size P exceeds available flow-map components");
    std::vector<GridFunction> candidates;
    candidates.reserve(cfg.basis_size + 1);
    candidates.emplace_back(model.grid(), 1.0);
    for (std::size_t j = 0; j < cfg.basis_size; ++j) candidates.push_back(flow[j]);
    Basis basis = gram_schmidt(candidates, cfg.drop_tol);
    if (basis.size() != cfg.basis_size + 1)
        throw DegenerateBasisError(
            "flow-map candidates are linearly dependent at t = " + std::to_string(state.t) +
            "; extend the warm-up");
    return basis;
}

ModalState transfer_modes(const ModalState& old_state,
                          std::shared_ptr<const Basis> new_basis) {
    const Basis& nb = *new_basis;
    const Basis& ob = *old_state.basis;
    if (nb.grid()->id() != ob.grid()->id())
        throw std::invalid_argument("transfer_modes: grid mismatch");
    const auto pn = static_cast<Eigen::Index>(nb.size());
    const auto po = static_cast<Eigen::Index>(ob.size());
    Eigen::MatrixXd G(pn, po);
    for (Eigen::Index j = 0; j < pn; ++j)
        for (Eigen::Index k = 0; k < po; ++k)
            G(j, k) = inner(nb.psi(static_cast<std::size_t>(j)),
                            ob.psi(static_cast<std::size_t>(k))) /
                      nb.squared_norm(static_cast<std::size_t>(j));
    ModalState out;
    out.t = old_state.t;
    out.basis = std::move(new_basis);
    out.U = old_state.U * G.transpose();
    out.V = old_state.V * G.transpose();
    return out;
}

FscResult run_fsc(const ModelPtr& model, const FscConfig& cfg) {
    if (cfg.basis_size < 2) throw std::invalid_argument("basis_size P must be >= 2");
    const TimeGrid& tg = cfg.time;
    const auto n_dof = static_cast<Eigen::Index>(model->n_dof());

    MomentSeries series;
    series.mean_u.assign(model->n_dof(), {});
    series.var_u.assign(model->n_dof(), {});
    series.mean_v.assign(model->n_dof(), {});
    series.var_v.assign(model->n_dof(), {});

    // Warm-up: fixed gPC basis, initial conditions projected directly.
    auto warm_basis = std::make_shared<const Basis>(
        gpc_basis(model->grid(), cfg.warmup_index_bound, cfg.drop_tol));
    ModalState state;
    state.t = 0.0;
    state.basis = warm_basis;
    state.U = Eigen::MatrixXd::Zero(n_dof, static_cast<Eigen::Index>(warm_basis->size()));
    state.V = Eigen::MatrixXd::Zero(n_dof, static_cast<Eigen::Index>(warm_basis->size()));
    {
        // With constant (deterministic) initial conditions the general
        // projection reduces to placing them in the Psi_0 slot.
        for (Eigen::Index d = 0; d < n_dof; ++d) {
            GridFunction gu(model->grid(), model->initial_u()[static_cast<std::size_t>(d)]);
            GridFunction gv(model->grid(), model->initial_v()[static_cast<std::size_t>(d)]);
            const auto cu = project(*warm_basis, gu);
            const auto cv = project(*warm_basis, gv);
            for (std::size_t j = 0; j < cu.size(); ++j) {
                state.U(d, static_cast<Eigen::Index>(j)) = cu[j];
                state.V(d, static_cast<Eigen::Index>(j)) = cv[j];
            }
        }
    }
    record_moments(series, state);

    const auto warm_steps = static_cast<std::size_t>(
        std::llround(cfg.warmup_duration / tg.dt));
    if (warm_steps > tg.N)
        throw std::invalid_argument("warm-up duration exceeds simulation duration");

    {
        ProjectedSystem sys(model, state.basis);
        for (std::size_t i = 0; i < warm_steps; ++i) {
            auto [Un, Vn] = rk4_step(sys, tg.t(i), state.U, state.V, tg.dt);
            state.U = std::move(Un);
            state.V = std::move(Vn);
            state.t = tg.t(i + 1);
            record_moments(series, state);
        }
    }

    // FSC loop.
    std::size_t i = warm_steps;
    while (i < tg.N) {
        auto basis = std::make_shared<const Basis>(build_fsc_basis(*model, state, cfg));
        state = transfer_modes(state, basis);
        ProjectedSystem sys(model, basis);
        const std::size_t sub = std::min(cfg.update_every, tg.N - i);
        for (std::size_t s = 0; s < sub; ++s) {
            auto [Un, Vn] = rk4_step(sys, tg.t(i), state.U, state.V, tg.dt);
            state.U = std::move(Un);
            state.V = std::move(Vn);
            ++i;
            state.t = tg.t(i);
            record_moments(series, state);
        }
    }

    return {std::move(series), std::move(state)};
}

}  // namespace fsc
