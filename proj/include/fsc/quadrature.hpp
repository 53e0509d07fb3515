#pragma once

#include <memory>
#include <vector>

#include "fsc/probability.hpp"

namespace fsc {

/// 1-D Gaussian rule matched to the axis measure. Weights are normalized to
/// the probability measure (sum to 1), so inner products integrate against mu
/// directly with no extra constants.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_rule(const Distribution& dist, std::size_t n);

/// Full tensor-product grid over the random domain. Node tuples are ordered
/// lexicographically with axis 1 slowest; the weight of a tuple is the product
/// of its axis weights.
class QuadratureGrid {
  public:
    QuadratureGrid(const RandomDomain& domain, const std::vector<std::size_t>& per_axis);

    std::size_t size() const { return weights_.size(); }
    std::size_t dim() const { return per_axis_.size(); }
    const std::vector<std::size_t>& per_axis() const { return per_axis_; }
    const std::vector<double>& weights() const { return weights_; }
    /// Coordinate of node i along the given axis.
    double node(std::size_t i, std::size_t axis) const { return coords_[axis][i]; }
    /// All coordinates along one axis, one value per node.
    const std::vector<double>& axis_values(std::size_t axis) const { return coords_[axis]; }

    std::uint64_t id() const { return id_; }

  private:
    std::vector<std::size_t> per_axis_;
    std::vector<double> weights_;
    std::vector<std::vector<double>> coords_;  // [axis][node]
    std::uint64_t id_;
};

using GridPtr = std::shared_ptr<const QuadratureGrid>;

GridPtr tensor_grid(const RandomDomain& domain, const std::vector<std::size_t>& per_axis);

}  // namespace fsc
