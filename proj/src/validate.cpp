#include "fsc/validate.hpp"

#include <cmath>
#include <complex>

namespace fsc {

double cosine_integral(double x) {
    if (!(x > 0.0)) throw std::domain_error("cosine_integral: x must be > 0");
    constexpr double euler_gamma = 0.5772156649015328606;
    if (x < 2.0) {
        // Ci(x) = gamma + ln x + sum_{k>=1} (-x^2)^k / (2k (2k)!)
        double sum = 0.0;
        double term = 1.0;
        for (int k = 1; k <= 60; ++k) {
            term *= -x * x / ((2.0 * k - 1.0) * (2.0 * k));
            const double add = term / (2.0 * k);
            sum += add;
            if (std::abs(add) < 1e-18 * (std::abs(sum) + 1.0)) break;
        }
        return euler_gamma + std::log(x) + sum;
    }
    // Lentz continued fraction for E1(ix); Ci(x) = -Re(e^{-ix} h).
    using cplx = std::complex<double>;
    constexpr double tiny = 1e-290;
    cplx b(1.0, x);
    cplx c(1.0 / tiny, 0.0);
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 1; i <= 200; ++i) {
        const double a = -static_cast<double>(i) * static_cast<double>(i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const cplx del = c * d;
        h *= del;
        if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < 1e-16) break;
    }
    h *= cplx(std::cos(x), -std::sin(x));
    return -h.real();
}

ExactSDOFReference::ExactSDOFReference(double m_, double ka_, double kb_, double u0_,
                                       double v0_)
    : m(m_), k_a(ka_), k_b(kb_), u0(u0_), v0(v0_) {
    if (!(k_b > k_a) || !(k_a > 0.0))
        throw std::invalid_argument("ExactSDOFReference requires k_b > k_a > 0");
    if (!(m > 0.0)) throw std::invalid_argument("ExactSDOFReference requires m > 0");
}

namespace {

struct TauRho {
    double tau_u, tau_v, tau_a;
    double rho_u, rho_v, rho_a;
};

TauRho eval_tables(const ExactSDOFReference& r, double t, double k) {
    const double w = std::sqrt(k / r.m);
    const double wt = w * t;
    const double s = std::sin(wt), c = std::cos(wt);
    const double s2 = std::sin(2.0 * wt), c2 = std::cos(2.0 * wt);
    const double u0 = r.u0, v0 = r.v0;
    TauRho out{};
    out.tau_u = (wt * s + c) * u0 - c * v0 * t;
    out.tau_v = -(2.0 * wt * s + (2.0 - wt * wt) * c) * u0 / t + (wt * s + c) * v0;
    out.tau_a = -((wt * wt * wt - 6.0 * wt) * s + 3.0 * (wt * wt - 2.0) * c) * u0 / (t * t) -
                (2.0 * wt * s + (2.0 - wt * wt) * c) * v0 / t;
    out.rho_u = -0.25 * (s * s - wt * s2 - wt * wt) * u0 * u0 - 0.5 * c2 * u0 * v0 * t +
                0.25 * (std::log(k) - 2.0 * cosine_integral(2.0 * wt)) * v0 * v0 * t * t;
    out.rho_v = (2.0 * (3.0 * wt - 2.0 * wt * wt * wt) * s2 +
                 3.0 * (1.0 - 2.0 * wt * wt) * c2 + 2.0 * std::pow(wt, 4)) *
                    u0 * u0 / (16.0 * t * t) -
                0.25 * (2.0 * wt * s2 + (1.0 - 2.0 * wt * wt) * c2) * u0 * v0 / t -
                0.25 * (s * s - wt * s2 - wt * wt) * v0 * v0;
    out.rho_a = (6.0 * (2.0 * std::pow(wt, 5) - 10.0 * std::pow(wt, 3) + 15.0 * wt) * s2 +
                 15.0 * (2.0 * std::pow(wt, 4) - 6.0 * wt * wt + 3.0) * c2 +
                 4.0 * std::pow(wt, 6)) *
                    u0 * u0 / (48.0 * std::pow(t, 4)) +
                (4.0 * (2.0 * std::pow(wt, 3) - 3.0 * wt) * s2 -
                 2.0 * (2.0 * std::pow(wt, 4) - 6.0 * wt * wt + 3.0) * c2) *
                    u0 * v0 / (8.0 * std::pow(t, 3)) -
                (2.0 * (2.0 * std::pow(wt, 3) - 3.0 * wt) * s2 +
                 3.0 * (2.0 * wt * wt - 1.0) * c2 - 2.0 * std::pow(wt, 4)) *
                    v0 * v0 / (16.0 * t * t);
    return out;
}

}  // namespace

ExactMoments exact_moments(const ExactSDOFReference& ref, double t) {
    if (t < 1e-3) {
        // Deterministic-IC limits; the kappa(t) ~ t^-2 prefactor cancels
        // catastrophically below this scale.
        const double a0 = -0.5 * (ref.k_a + ref.k_b) / ref.m * ref.u0;
        const double var_a0 =
            std::pow((ref.k_b - ref.k_a) * ref.u0 / ref.m, 2) / 12.0;
        return {{ref.u0, 0.0}, {ref.v0, 0.0}, {a0, var_a0}};
    }
    const double kappa = 2.0 * ref.m / ((ref.k_b - ref.k_a) * t * t);
    const TauRho hi = eval_tables(ref, t, ref.k_b);
    const TauRho lo = eval_tables(ref, t, ref.k_a);
    ExactMoments out{};
    out.u.mean = kappa * (hi.tau_u - lo.tau_u);
    out.v.mean = kappa * (hi.tau_v - lo.tau_v);
    out.a.mean = kappa * (hi.tau_a - lo.tau_a);
    out.u.variance = kappa * (hi.rho_u - lo.rho_u) - out.u.mean * out.u.mean;
    out.v.variance = kappa * (hi.rho_v - lo.rho_v) - out.v.mean * out.v.mean;
    out.a.variance = kappa * (hi.rho_a - lo.rho_a) - out.a.mean * out.a.mean;
    return out;
}

VarianceLimits variance_limits(const ExactSDOFReference& r) {
    VarianceLimits out{};
    out.u = 0.5 * r.u0 * r.u0 +
            0.5 * std::log(r.k_b / r.k_a) * (r.m / (r.k_b - r.k_a)) * r.v0 * r.v0;
    out.v = 0.25 * (r.k_a + r.k_b) / r.m * r.u0 * r.u0 + 0.5 * r.v0 * r.v0;
    out.a = (r.k_a * r.k_a + r.k_a * r.k_b + r.k_b * r.k_b) / (r.m * r.m) * r.u0 * r.u0 /
                6.0 +
            0.25 * (r.k_a + r.k_b) / r.m * r.v0 * r.v0;
    return out;
}

MomentSeries monte_carlo(const ModelPtr& model, const RandomDomain& domain, std::size_t n,
                         std::uint64_t seed, const TimeGrid& tg) {
    if (n < 2) throw std::invalid_argument("monte_carlo: n must be >= 2");
    const std::size_t n_dof = model->n_dof();
    const std::size_t n_inst = tg.N + 1;

    MomentSeries series;
    series.t.resize(n_inst);
    for (std::size_t i = 0; i < n_inst; ++i) series.t[i] = tg.t(i);
    series.mean_u.assign(n_dof, std::vector<double>(n_inst, 0.0));
    series.var_u.assign(n_dof, std::vector<double>(n_inst, 0.0));
    series.mean_v.assign(n_dof, std::vector<double>(n_inst, 0.0));
    series.var_v.assign(n_dof, std::vector<double>(n_inst, 0.0));

    // Welford accumulators, updated sample by sample in a fixed order.
    std::vector<std::vector<double>> m_u(n_dof, std::vector<double>(n_inst, 0.0)),
        s_u = m_u, m_v = m_u, s_v = m_u;

    const auto samples = sample(domain, n, seed);
    std::vector<double> traj_u(n_inst * n_dof), traj_v(n_inst * n_dof);
    std::vector<double> u(n_dof), v(n_dof);
    std::size_t excluded = 0;
    std::size_t accepted = 0;

    for (std::size_t s = 0; s < n; ++s) {
        const auto& xi = samples[s];
        for (std::size_t d = 0; d < n_dof; ++d) {
            u[d] = model->initial_u()[d];
            v[d] = model->initial_v()[d];
        }
        bool ok = true;
        auto accel = [&](double t, const double* uu, const double* vv, double* aa) {
            model->sample_rhs(xi, t, uu, vv, aa);
        };
        for (std::size_t d = 0; d < n_dof; ++d) {
            traj_u[d] = u[d];
            traj_v[d] = v[d];
        }
        for (std::size_t i = 0; i < tg.N && ok; ++i) {
            rk4_step_scalar(accel, tg.t(i), tg.dt, n_dof, u.data(), v.data());
            for (std::size_t d = 0; d < n_dof; ++d) {
                if (!std::isfinite(u[d]) || !std::isfinite(v[d])) ok = false;
                traj_u[(i + 1) * n_dof + d] = u[d];
                traj_v[(i + 1) * n_dof + d] = v[d];
            }
        }
        if (!ok) {
            ++excluded;
            continue;
        }
        ++accepted;
        const double na = static_cast<double>(accepted);
        for (std::size_t i = 0; i < n_inst; ++i)
            for (std::size_t d = 0; d < n_dof; ++d) {
                const double xu = traj_u[i * n_dof + d];
                const double du = xu - m_u[d][i];
                m_u[d][i] += du / na;
                s_u[d][i] += du * (xu - m_u[d][i]);
                const double xv = traj_v[i * n_dof + d];
                const double dv = xv - m_v[d][i];
                m_v[d][i] += dv / na;
                s_v[d][i] += dv * (xv - m_v[d][i]);
            }
    }
    if (accepted < 2) throw DivergenceError("monte_carlo: fewer than 2 usable realizations");
    if (excluded > 0)
        std::fprintf(stderr, "monte_carlo: warning, %zu divergent realization(s) excluded\n",
                     excluded);
    const double denom = static_cast<double>(accepted - 1);
    for (std::size_t d = 0; d < n_dof; ++d)
        for (std::size_t i = 0; i < n_inst; ++i) {
            series.mean_u[d][i] = m_u[d][i];
            series.var_u[d][i] = s_u[d][i] / denom;
            series.mean_v[d][i] = m_v[d][i];
            series.var_v[d][i] = s_v[d][i] / denom;
        }
    return series;
}

ErrorReport errors(const std::vector<double>& f, const std::vector<double>& f_exact,
                   const TimeGrid& tg) {
    if (f.size() != f_exact.size() || f.size() != tg.N + 1)
        throw std::invalid_argument("errors: series length mismatch");
    ErrorReport out;
    out.local.resize(f.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        out.local[i] = std::abs(f[i] - f_exact[i]);
        sum += out.local[i];
    }
    out.global = tg.dt / tg.T * sum;
    return out;
}

ForcedSdofReference::ForcedSdofReference(double m, const Distribution& k_dist,
                                         const Distribution& q_dist, double u0, double v0,
                                         std::size_t k_points)
    : m_(m), u0_(u0), v0_(v0) {
    const Moments qm = fsc::moments(q_dist);
    q_mean_ = qm.mean;
    q_sq_mean_ = qm.variance + qm.mean * qm.mean;
    k_rule_ = gauss_rule(k_dist, k_points);
}

ForcedMoments ForcedSdofReference::moments(double t) const {
    // u(t,k,q) = A(k,t) + q B(k,t), with unit forcing frequency:
    //   A = u0 cos wt + (v0/w) sin wt,  B = (sin t - sin(wt)/w) / (k - m)
    double EA = 0, EB = 0, EA2 = 0, EB2 = 0, EAB = 0;
    double EAd = 0, EBd = 0, EAd2 = 0, EBd2 = 0, EABd = 0;
    const double st = std::sin(t), ct = std::cos(t);
    for (std::size_t i = 0; i < k_rule_.nodes.size(); ++i) {
        const double k = k_rule_.nodes[i];
        const double wq = k_rule_.weights[i];
        const double w = std::sqrt(k / m_);
        const double s = std::sin(w * t), c = std::cos(w * t);
        const double A = u0_ * c + v0_ / w * s;
        const double B = (st - s / w) / (k - m_);
        const double Ad = -u0_ * w * s + v0_ * c;
        const double Bd = (ct - c) / (k - m_);
        EA += wq * A;
        EB += wq * B;
        EA2 += wq * A * A;
        EB2 += wq * B * B;
        EAB += wq * A * B;
        EAd += wq * Ad;
        EBd += wq * Bd;
        EAd2 += wq * Ad * Ad;
        EBd2 += wq * Bd * Bd;
        EABd += wq * Ad * Bd;
    }
    ForcedMoments out{};
    out.u.mean = EA + q_mean_ * EB;
    out.v.mean = EAd + q_mean_ * EBd;
    const double Eu2 = EA2 + 2.0 * q_mean_ * EAB + q_sq_mean_ * EB2;
    const double Ev2 = EAd2 + 2.0 * q_mean_ * EABd + q_sq_mean_ * EBd2;
    out.u.variance = Eu2 - out.u.mean * out.u.mean;
    out.v.variance = Ev2 - out.v.mean * out.v.mean;
    return out;
}

}  // namespace fsc
