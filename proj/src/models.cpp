#include "fsc/models.hpp"

#include <cmath>

namespace fsc {

GridFunction Param::on_grid(const GridPtr& grid) const {
    if (!axis_) return GridFunction(grid, const_);
    return GridFunction::from_axis(grid, *axis_, [](double x) { return x; });
}

double GroundMotionRecord::at(double t) const {
    if (t < 0.0) throw std::out_of_range("ground motion lookup before t = 0");
    const double pos = t / dt;
    const auto i = static_cast<std::size_t>(pos);
    if (i + 1 >= samples.size()) {
        // allow exact landing on the last sample within round-off
        if (t <= duration() * (1.0 + 1e-12)) return samples.back();
        throw std::out_of_range("ground motion lookup past end of record at t = " +
                                std::to_string(t));
    }
    const double frac = pos - static_cast<double>(i);
    return samples[i] + frac * (samples[i + 1] - samples[i]);
}

std::vector<GridFunction> EnrichedState::flow_candidates() const {
    std::vector<GridFunction> out;
    for (const auto& level : levels)
        for (const auto& g : level) out.push_back(g);
    return out;
}

Model::Model(GridPtr grid, std::size_t n_dof, std::size_t order, std::vector<double> u0,
             std::vector<double> v0)
    : grid_(std::move(grid)), n_dof_(n_dof), order_(order), u0_(std::move(u0)),
      v0_(std::move(v0)) {}

namespace {

void check_state(const Model& m, const std::vector<GridFunction>& u,
                 const std::vector<GridFunction>& v) {
    if (u.size() != m.n_dof() || v.size() != m.n_dof())
        throw std::invalid_argument("state dof count mismatch");
    for (const auto& g : u)
        if (g.grid()->id() != m.grid()->id())
            throw std::invalid_argument("state grid mismatch");
    for (const auto& g : v)
        if (g.grid()->id() != m.grid()->id())
            throw std::invalid_argument("state grid mismatch");
}

class FreeSdof final : public Model {
  public:
    FreeSdof(GridPtr grid, double m, Param k, std::size_t order, double u0, double v0)
        : Model(grid, 1, order, {u0}, {v0}), m_(m), kp_(k), k_(k.on_grid(grid_)) {
        if (!(m > 0.0)) throw std::invalid_argument("mass must be positive");
        if (order < 1) throw std::invalid_argument("SDOF models need order >= 1");
    }

    std::vector<GridFunction> rhs(double, const std::vector<GridFunction>& u,
                                  const std::vector<GridFunction>& v) const override {
        check_state(*this, u, v);
        GridFunction a(grid_, 0.0);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = -k_[i] / m_ * u[0][i];
        return {a};
    }

    EnrichedState enriched_flow(double t, const std::vector<GridFunction>& u,
                                const std::vector<GridFunction>& v) const override {
        check_state(*this, u, v);
        EnrichedState s;
        s.t = t;
        s.levels = {{u[0]}, {v[0]}};
        // d_t^{j+2} u = -(k/m) d_t^j u
        for (std::size_t lvl = 2; lvl <= order_ + 1; ++lvl) {
            const GridFunction& prev = s.levels[lvl - 2][0];
            GridFunction next(grid_, 0.0);
            for (std::size_t i = 0; i < next.size(); ++i) next[i] = -k_[i] / m_ * prev[i];
            s.levels.push_back({std::move(next)});
        }
        return s;
    }

    void sample_rhs(const std::vector<double>& xi, double, const double* u, const double*,
                    double* a) const override {
        a[0] = -kp_.value(xi) / m_ * u[0];
    }

  private:
    double m_;
    Param kp_;
    GridFunction k_;
};

class ForcedSdof final : public Model {
  public:
    ForcedSdof(GridPtr grid, double m, Param k, Param q, std::size_t order, double u0,
               double v0)
        : Model(grid, 1, order, {u0}, {v0}), m_(m), kp_(k), qp_(q), k_(k.on_grid(grid_)),
          q_(q.on_grid(grid_)) {
        if (!(m > 0.0)) throw std::invalid_argument("mass must be positive");
        if (order < 1) throw std::invalid_argument("SDOF models need order >= 1");
    }

    std::vector<GridFunction> rhs(double t, const std::vector<GridFunction>& u,
                                  const std::vector<GridFunction>& v) const override {
        check_state(*this, u, v);
        const double st = std::sin(t);
        GridFunction a(grid_, 0.0);
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] = (q_[i] * st - k_[i] * u[0][i]) / m_;
        return {a};
    }

    EnrichedState enriched_flow(double t, const std::vector<GridFunction>& u,
                                const std::vector<GridFunction>& v) const override {
        check_state(*this, u, v);
        EnrichedState s;
        s.t = t;
        s.levels = {{u[0]}, {v[0]}};
        // d_t^{j+2} u = (q d^j/dt^j sin t - k d_t^j u)/m; sin derivatives cycle.
        for (std::size_t lvl = 2; lvl <= order_ + 1; ++lvl) {
            const GridFunction& prev = s.levels[lvl - 2][0];
            const double trig = sin_derivative(lvl - 2, t);
            GridFunction next(grid_, 0.0);
            for (std::size_t i = 0; i < next.size(); ++i)
                next[i] = (q_[i] * trig - k_[i] * prev[i]) / m_;
            s.levels.push_back({std::move(next)});
        }
        return s;
    }

    void sample_rhs(const std::vector<double>& xi, double t, const double* u, const double*,
                    double* a) const override {
        a[0] = (qp_.value(xi) * std::sin(t) - kp_.value(xi) * u[0]) / m_;
    }

  private:
    static double sin_derivative(std::size_t order, double t) {
        switch (order % 4) {
            case 0: return std::sin(t);
            case 1: return std::cos(t);
            case 2: return -std::sin(t);
            default: return -std::cos(t);
        }
    }
    double m_;
    Param kp_, qp_;
    GridFunction k_, q_;
};

class NonlinearSdof final : public Model {
  public:
    NonlinearSdof(GridPtr grid, double m, Param k, Param rho, std::size_t order, double u0,
                  double v0)
        : Model(grid, 1, order, {u0}, {v0}), m_(m), kp_(k), rp_(rho), k_(k.on_grid(grid_)),
          rho_(rho.on_grid(grid_)) {
        if (!(m > 0.0)) throw std::invalid_argument("mass must be positive");
        if (order < 1) throw std::invalid_argument("SDOF models need order >= 1");
        if (order > 3)
            throw CapabilityError(
                "nonlinear derivative chain implemented through d_t^4 u (order 3)");
    }

    std::vector<GridFunction> rhs(double, const std::vector<GridFunction>& u,
                                  const std::vector<GridFunction>& v) const override {
        check_state(*this, u, v);
        GridFunction a(grid_, 0.0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double ui = u[0][i];
            a[i] = -k_[i] / m_ * (1.0 + rho_[i] * ui * ui) * ui;
        }
        return {a};
    }

    EnrichedState enriched_flow(double t, const std::vector<GridFunction>& u,
                                const std::vector<GridFunction>& v) const override {
        check_state(*this, u, v);
        EnrichedState s;
        s.t = t;
        s.levels = {{u[0]}, {v[0]}};
        s.levels.push_back({rhs(t, u, v)[0]});
        if (order_ >= 2) {
            // d_t^3 u = -(k/m)(1 + 3 rho u^2) u-dot
            GridFunction d3(grid_, 0.0);
            for (std::size_t i = 0; i < d3.size(); ++i) {
                const double ui = u[0][i];
                d3[i] = -k_[i] / m_ * (1.0 + 3.0 * rho_[i] * ui * ui) * v[0][i];
            }
            s.levels.push_back({std::move(d3)});
        }
        if (order_ >= 3) {
            // d_t^4 u = -(k/m)(1 + 3 rho u^2) d_t^2 u - (6 rho k/m) u-dot^2 u
            const GridFunction& d2 = s.levels[2][0];
            GridFunction d4(grid_, 0.0);
            for (std::size_t i = 0; i < d4.size(); ++i) {
                const double ui = u[0][i];
                const double vi = v[0][i];
                d4[i] = -k_[i] / m_ * (1.0 + 3.0 * rho_[i] * ui * ui) * d2[i] -
                        6.0 * rho_[i] * k_[i] / m_ * vi * vi * ui;
            }
            s.levels.push_back({std::move(d4)});
        }
        return s;
    }

    void sample_rhs(const std::vector<double>& xi, double, const double* u, const double*,
                    double* a) const override {
        const double k = kp_.value(xi);
        const double rho = rp_.value(xi);
        a[0] = -k / m_ * (1.0 + rho * u[0] * u[0]) * u[0];
    }

  private:
    double m_;
    Param kp_, rp_;
    GridFunction k_, rho_;
};

class Building3 final : public Model {
  public:
    Building3(GridPtr grid, double m, Param k1, Param k2, Param k3, Param alpha, Param beta,
              std::array<double, 3> iota, std::shared_ptr<const GroundMotionRecord> record)
        : Model(grid, 3, 0, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}), m_(m), iota_(iota),
          record_(std::move(record)), kp_{k1, k2, k3}, ap_(alpha), bp_(beta),
          k1_(k1.on_grid(grid_)), k2_(k2.on_grid(grid_)), k3_(k3.on_grid(grid_)),
          alpha_(alpha.on_grid(grid_)), beta_(beta.on_grid(grid_)) {
        if (!(m > 0.0)) throw std::invalid_argument("mass must be positive");
        if (!record_ || record_->samples.size() < 2)
            throw std::invalid_argument("ground motion record required");
    }

    std::vector<GridFunction> rhs(double t, const std::vector<GridFunction>& u,
                                  const std::vector<GridFunction>& v) const override {
        check_state(*this, u, v);
        const double ag = record_->at(t);
        std::vector<GridFunction> a(3, GridFunction(grid_, 0.0));
        for (std::size_t i = 0; i < grid_->size(); ++i) {
            const double kk[3] = {k1_[i], k2_[i], k3_[i]};
            double Ku[3], Kv[3];
            apply_K(kk, u[0][i], u[1][i], u[2][i], Ku);
            apply_K(kk, v[0][i], v[1][i], v[2][i], Kv);
            for (std::size_t d = 0; d < 3; ++d) {
                const double Cv = alpha_[i] * m_ * v[d][i] + beta_[i] * Kv[d];
                a[d][i] = -iota_[d] * ag - (Cv + Ku[d]) / m_;
            }
        }
        return a;
    }

    EnrichedState enriched_flow(double t, const std::vector<GridFunction>& u,
                                const std::vector<GridFunction>& v) const override {
        EnrichedState s;
        s.t = t;
        s.levels = {u, v, rhs(t, u, v)};
        return s;
    }

    void sample_rhs(const std::vector<double>& xi, double t, const double* u, const double* v,
                    double* a) const override {
        const double kk[3] = {kp_[0].value(xi), kp_[1].value(xi), kp_[2].value(xi)};
        const double al = ap_.value(xi);
        const double be = bp_.value(xi);
        const double ag = record_->at(t);
        double Ku[3], Kv[3];
        apply_K(kk, u[0], u[1], u[2], Ku);
        apply_K(kk, v[0], v[1], v[2], Kv);
        for (std::size_t d = 0; d < 3; ++d)
            a[d] = -iota_[d] * ag - (al * m_ * v[d] + be * Kv[d] + Ku[d]) / m_;
    }

  private:
    static void apply_K(const double k[3], double x1, double x2, double x3, double out[3]) {
        out[0] = (k[0] + k[1]) * x1 - k[1] * x2;
        out[1] = -k[1] * x1 + (k[1] + k[2]) * x2 - k[2] * x3;
        out[2] = -k[2] * x2 + k[2] * x3;
    }
    double m_;
    std::array<double, 3> iota_;
    std::shared_ptr<const GroundMotionRecord> record_;
    std::array<Param, 3> kp_;
    Param ap_, bp_;
    GridFunction k1_, k2_, k3_, alpha_, beta_;
};

}  // namespace

ModelPtr make_free_sdof(GridPtr grid, double m, Param k, std::size_t order, double u0,
                        double v0) {
    return std::make_shared<FreeSdof>(std::move(grid), m, k, order, u0, v0);
}

ModelPtr make_forced_sdof(GridPtr grid, double m, Param k, Param q, std::size_t order,
                          double u0, double v0) {
    return std::make_shared<ForcedSdof>(std::move(grid), m, k, q, order, u0, v0);
}

ModelPtr make_nonlinear_sdof(GridPtr grid, double m, Param k, Param rho, std::size_t order,
                             double u0, double v0) {
    return std::make_shared<NonlinearSdof>(std::move(grid), m, k, rho, order, u0, v0);
}

ModelPtr make_building3(GridPtr grid, double m, Param k1, Param k2, Param k3, Param alpha,
                        Param beta, std::array<double, 3> iota,
                        std::shared_ptr<const GroundMotionRecord> record) {
    return std::make_shared<Building3>(std::move(grid), m, k1, k2, k3, alpha, beta, iota,
                                       std::move(record));
}

}  // namespace fsc
