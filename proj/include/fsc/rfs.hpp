#pragma once

#include <functional>
#include <vector>

#include "fsc/quadrature.hpp"

namespace fsc {

/// Thrown when Gram-Schmidt drops every non-constant candidate; callers fall
/// back to a gPC warm-up in that case.
struct DegenerateBasisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A random-space function represented by its values at all quadrature nodes.
class GridFunction {
  public:
    GridFunction(GridPtr grid, std::vector<double> values);
    /// Constant function on the grid.
    GridFunction(GridPtr grid, double constant);
    /// Pointwise map of an axis coordinate, f(xi) = fn(xi^axis).
    static GridFunction from_axis(const GridPtr& grid, std::size_t axis,
                                  const std::function<double(double)>& fn);

    const GridPtr& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

  private:
    GridPtr grid_;
    std::vector<double> values_;
};

/// Discrete inner product <f,g> = sum_i f(xi_i) g(xi_i) w_i against mu.
/// Throws std::invalid_argument on grid mismatch.
double inner(const GridFunction& f, const GridFunction& g);

/// Ordered orthogonal set {Psi_j}, j = 0..P, with Psi_0 = 1.
class Basis {
  public:
    Basis(std::vector<GridFunction> functions, std::vector<double> squared_norms);

    const GridPtr& grid() const { return functions_.front().grid(); }
    /// Number of non-constant members.
    std::size_t P() const { return functions_.size() - 1; }
    std::size_t size() const { return functions_.size(); }
    const GridFunction& psi(std::size_t j) const { return functions_[j]; }
    double squared_norm(std::size_t j) const { return squared_norms_[j]; }

  private:
    std::vector<GridFunction> functions_;
    std::vector<double> squared_norms_;
};

/// Orthogonalize the ordered candidate set (candidates[0] must be constant 1).
/// Candidates whose post-orthogonalization norm drops below drop_tol times
/// their pre-orthogonalization norm are dropped as linearly dependent.
Basis gram_schmidt(const std::vector<GridFunction>& candidates, double drop_tol = 1e-10);

/// gPC bootstrap basis: monomial candidates in graded-lexicographic order
/// (total degree ascending, axis 1 slowest within a degree), the first
/// index_bound+1 of them, orthogonalized against the grid measure.
Basis gpc_basis(const GridPtr& grid, std::size_t index_bound, double drop_tol = 1e-10);

/// Galerkin projection coefficients of f onto the basis.
std::vector<double> project(const Basis& basis, const GridFunction& f);

/// Mean and variance from modal coefficients: mean = c_0,
/// var = sum_{j>=1} <Psi_j,Psi_j> c_j^2.
Moments mean_var(const Basis& basis, const std::vector<double>& coefficients);

}  // namespace fsc
