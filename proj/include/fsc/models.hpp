#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>

#include "fsc/rfs.hpp"

namespace fsc {

/// Thrown when a derivative chain deeper than the implemented one is requested.
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A model parameter: either a constant or one axis of the random domain.
class Param {
  public:
    static Param constant(double v) { return Param(v, {}); }
    static Param axis(std::size_t i) { return Param(0.0, i); }

    double value(const std::vector<double>& xi) const {
        return axis_ ? xi[*axis_] : const_;
    }
    GridFunction on_grid(const GridPtr& grid) const;

  private:
    Param(double c, std::optional<std::size_t> ax) : const_(c), axis_(ax) {}
    double const_;
    std::optional<std::size_t> axis_;
};

/// Sampled ground acceleration, in m/s^2 after unit scaling.
struct GroundMotionRecord {
    double dt = 0.0;
    std::vector<double> samples;

    /// Linear interpolation between samples; RK4 interior stages land here.
    /// Throws std::out_of_range past the end of the record.
    double at(double t) const;
    double duration() const { return dt * static_cast<double>(samples.size() - 1); }
};

/// Enriched configuration state: per-dof node values of u, u-dot and the
/// derivative levels d_t^2 u .. d_t^{M+1} u.
struct EnrichedState {
    double t = 0.0;
    /// levels[k][dof]; level 0 = u, 1 = u-dot, k >= 2 = d_t^k u.
    std::vector<std::vector<GridFunction>> levels;

    /// Flattened candidate list in flow-map order (levels ascending, dof-major
    /// within a level).
    std::vector<GridFunction> flow_candidates() const;
};

/// A stochastic second-order ODE model exposing f = u-double-dot and its total
/// time derivatives (the enriched flow-map components).
class Model {
  public:
    virtual ~Model() = default;

    const GridPtr& grid() const { return grid_; }
    std::size_t n_dof() const { return n_dof_; }
    /// Extra derivative levels available beyond the acceleration.
    std::size_t flow_order() const { return order_; }
    const std::vector<double>& initial_u() const { return u0_; }
    const std::vector<double>& initial_v() const { return v0_; }

    /// Acceleration per dof at the quadrature nodes.
    virtual std::vector<GridFunction> rhs(double t, const std::vector<GridFunction>& u,
                                          const std::vector<GridFunction>& v) const = 0;

    /// All derivative levels through d_t^{M+1} u.
    virtual EnrichedState enriched_flow(double t, const std::vector<GridFunction>& u,
                                        const std::vector<GridFunction>& v) const = 0;

    /// Deterministic acceleration for one sampled parameter tuple (Monte Carlo).
    virtual void sample_rhs(const std::vector<double>& xi, double t, const double* u,
                            const double* v, double* a) const = 0;

  protected:
    Model(GridPtr grid, std::size_t n_dof, std::size_t order, std::vector<double> u0,
          std::vector<double> v0);
    GridPtr grid_;
    std::size_t n_dof_;
    std::size_t order_;
    std::vector<double> u0_, v0_;
};

using ModelPtr = std::shared_ptr<const Model>;

/// m u'' + k u = 0, k possibly random.
ModelPtr make_free_sdof(GridPtr grid, double m, Param k, std::size_t order, double u0,
                        double v0);

/// m u'' + k u = q sin t.
ModelPtr make_forced_sdof(GridPtr grid, double m, Param k, Param q, std::size_t order,
                          double u0, double v0);

/// m u'' + (1 + rho u^2) k u = 0. Derivative chain implemented through order 2.
ModelPtr make_nonlinear_sdof(GridPtr grid, double m, Param k, Param rho, std::size_t order,
                             double u0, double v0);

/// 3-story shear building under ground motion with Rayleigh damping
/// C = alpha M + beta K; state + acceleration enrichment only.
/// Units: mass in Mg, stiffness in kN/m, accelerations in m/s^2.
ModelPtr make_building3(GridPtr grid, double m, Param k1, Param k2, Param k3, Param alpha,
                        Param beta, std::array<double, 3> iota,
                        std::shared_ptr<const GroundMotionRecord> record);

}  // namespace fsc
