#include "fsc/rfs.hpp"

#include <cmath>

namespace fsc {

GridFunction::GridFunction(GridPtr grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_->size())
        throw std::invalid_argument("GridFunction: value count must equal grid size");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("GridFunction: non-finite value");
}

GridFunction::GridFunction(GridPtr grid, double constant)
    : grid_(std::move(grid)), values_(grid_->size(), constant) {
    if (!std::isfinite(constant)) throw std::invalid_argument("GridFunction: non-finite value");
}

GridFunction GridFunction::from_axis(const GridPtr& grid, std::size_t axis,
                                     const std::function<double(double)>& fn) {
    std::vector<double> v(grid->size());
    const auto& x = grid->axis_values(axis);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(x[i]);
    return GridFunction(grid, std::move(v));
}

double inner(const GridFunction& f, const GridFunction& g) {
    if (f.grid()->id() != g.grid()->id())
        throw std::invalid_argument("inner: grid mismatch");
    const auto& w = f.grid()->weights();
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) s += f[i] * g[i] * w[i];
    return s;
}

Basis::Basis(std::vector<GridFunction> functions, std::vector<double> squared_norms)
    : functions_(std::move(functions)), squared_norms_(std::move(squared_norms)) {
    if (functions_.empty() || functions_.size() != squared_norms_.size())
        throw std::invalid_argument("Basis: inconsistent sizes");
}

Basis gram_schmidt(const std::vector<GridFunction>& candidates, double drop_tol) {
    if (candidates.empty()) throw DegenerateBasisError("gram_schmidt: empty candidate list");
    const GridPtr& grid = candidates[0].grid();

    std::vector<GridFunction> kept;
    std::vector<double> norms;
    kept.reserve(candidates.size());

    for (std::size_t c = 0; c < candidates.size(); ++c) {
        GridFunction v = candidates[c];
        if (v.grid()->id() != grid->id())
            throw std::invalid_argument("gram_schmidt: candidates on mismatched grids");
        // Pre-scale to unit norm; flow-map candidates span many orders of
        // magnitude and the scaling does not change the span.
        const double n0 = std::sqrt(inner(v, v));
        if (n0 == 0.0) continue;  // identically-zero candidate
        for (std::size_t i = 0; i < v.size(); ++i) v[i] /= n0;

        // Modified Gram-Schmidt with one full re-orthogonalization pass.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < kept.size(); ++j) {
                const double c_j = inner(kept[j], v) / norms[j];
                for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c_j * kept[j][i];
            }
        }
        const double n1sq = inner(v, v);
        if (std::sqrt(n1sq) < drop_tol) continue;  // linearly dependent; drop
        kept.push_back(std::move(v));
        norms.push_back(n1sq);
    }

    if (kept.size() < 2)
        throw DegenerateBasisError("gram_schmidt: all non-constant candidates dropped");
    return Basis(std::move(kept), std::move(norms));
}

Basis gpc_basis(const GridPtr& grid, std::size_t index_bound, double drop_tol) {
    const std::size_t d = grid->dim();

    // Multi-indices in graded-lexicographic order, axis 1 slowest.
    std::vector<std::vector<std::size_t>> indices;
    std::size_t degree = 0;
    while (indices.size() < index_bound + 1) {
        // enumerate all alpha with |alpha| = degree, lexicographically descending in axis 1
        std::vector<std::size_t> alpha(d, 0);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t ax,
                                                                std::size_t rem) {
            if (indices.size() >= index_bound + 1) return;
            if (ax + 1 == d) {
                alpha[ax] = rem;
                indices.push_back(alpha);
                return;
            }
            for (std::size_t k = rem + 1; k-- > 0;) {
                alpha[ax] = k;
                rec(ax + 1, rem - k);
                if (indices.size() >= index_bound + 1) return;
            }
        };
        rec(0, degree);
        ++degree;
    }

    std::vector<GridFunction> candidates;
    candidates.reserve(indices.size());
    for (const auto& alpha : indices) {
        std::vector<double> v(grid->size(), 1.0);
        for (std::size_t ax = 0; ax < d; ++ax) {
            const auto& x = grid->axis_values(ax);
            for (std::size_t p = 0; p < alpha[ax]; ++p)
                for (std::size_t i = 0; i < v.size(); ++i) v[i] *= x[i];
        }
        candidates.emplace_back(grid, std::move(v));
    }
    if (index_bound == 0) {
        // span is just the constants; gram_schmidt requires >= 2 candidates
        GridFunction one(grid, 1.0);
        return Basis({one}, {inner(one, one)});
    }
    return gram_schmidt(candidates, drop_tol);
}

std::vector<double> project(const Basis& basis, const GridFunction& f) {
    if (f.grid()->id() != basis.grid()->id())
        throw std::invalid_argument("project: grid mismatch");
    std::vector<double> c(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        c[j] = inner(basis.psi(j), f) / basis.squared_norm(j);
    return c;
}

Moments mean_var(const Basis& basis, const std::vector<double>& coefficients) {
    if (coefficients.size() != basis.size())
        throw std::invalid_argument("mean_var: coefficient count must equal basis size");
    double var = 0.0;
    for (std::size_t j = 1; j < coefficients.size(); ++j)
        var += basis.squared_norm(j) * coefficients[j] * coefficients[j];
    return {coefficients[0], var};
}

}  // namespace fsc
