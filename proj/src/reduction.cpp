#include "vleq/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "vleq/linalg.hpp"

namespace vleq {

Spectrum spectral_decompose(std::span<const double> kappa, std::size_t n, double trunc_tol,
                            bool force_full_rank) {
    SquareMatrix beta(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) beta(i, j) = 1.0 - kappa[i * n + j];

    EigenResult eig = jacobi_eigen_symmetric(beta);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(eig.values[a]) > std::abs(eig.values[b]);
    });

    Spectrum sp;
    sp.n = n;
    sp.trunc_tol = trunc_tol;
    sp.lambda.resize(n);
    sp.s.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        sp.lambda[k] = eig.values[order[k]];
        for (std::size_t i = 0; i < n; ++i) sp.s[k * n + i] = eig.vectors(order[k], i);
    }

    if (force_full_rank) {
        sp.m = n;
        return sp;
    }
    // smallest m whose rank-m reconstruction of beta is within trunc_tol (max-abs entry)
    std::vector<double> recon(n * n, 0.0);
    sp.m = n;
    for (std::size_t k = 0; k <= n; ++k) {
        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                err = std::max(err, std::abs(beta(i, j) - recon[i * n + j]));
        if (err <= trunc_tol) {
            sp.m = std::max<std::size_t>(k, 1);
            break;
        }
        if (k == n) break;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                recon[i * n + j] += sp.lambda[k] * sp.s[k * n + i] * sp.s[k * n + j];
    }
    return sp;
}

ReductionBasis build_reduction_basis(const Mixture& mix, const Spectrum& spectrum, double t) {
    const std::size_t n = mix.size();
    const std::size_t m = spectrum.m;
    ReductionBasis basis;
    basis.n = n;
    basis.m = m;
    basis.temperature = t;
    basis.eos = mix.eos;
    basis.lambda.assign(spectrum.lambda.begin(), spectrum.lambda.begin() + m);
    basis.s.assign(spectrum.s.begin(), spectrum.s.begin() + m * n);

    const PureParams pp = pure_params(mix.components, mix.eos, t);
    basis.b_hat = pp.b_hat;
    basis.s_hat.resize(m * n);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < n; ++i)
            basis.s_hat[k * n + i] = basis.s[k * n + i] * std::sqrt(pp.a_hat[i]);
    return basis;
}

ReductionBasis build_reduction_basis(const Mixture& mix, double t, double trunc_tol,
                                     bool force_full_rank) {
    const Spectrum sp = spectral_decompose(mix.kappa, mix.size(), trunc_tol, force_full_rank);
    return build_reduction_basis(mix, sp, t);
}

std::vector<double> reduced_parameters(std::span<const double> z, const ReductionBasis& basis) {
    std::vector<double> q(basis.m, 0.0);
    for (std::size_t k = 0; k < basis.m; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < basis.n; ++i) s += z[i] * basis.s_hat_at(k, i);
        q[k] = s;
    }
    return q;
}

double energy_param_from_q(std::span<const double> q, std::span<const double> lambda) {
    if (q.size() != lambda.size())
        throw std::invalid_argument("energy_param_from_q: length mismatch");
    double a = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k) a += lambda[k] * q[k] * q[k];
    return a;
}

namespace {

struct HGeometry {
    double lratio;   // ln[(v+d1 b)/(v+d2 b)]
    double d;        // (v+d1 b)(v+d2 b)
    double vmb;      // v - b
    double brace;    // v b/D - lratio/(d1-d2)
};

HGeometry h_geometry(double b, double v, const EosSpec& eos) {
    const double d1 = eos.delta1, d2 = eos.delta2;
    HGeometry g;
    g.vmb = v - b;
    g.d = (v + d1 * b) * (v + d2 * b);
    g.lratio = std::log((v + d1 * b) / (v + d2 * b));
    g.brace = v * b / g.d - g.lratio / (d1 - d2);
    return g;
}

}  // namespace

std::vector<double> h_coefficients(std::span<const double> q, double b, double v, double t,
                                   const ReductionBasis& basis) {
    if (!(v > b)) throw std::domain_error("h_coefficients: v must exceed the co-volume");
    if (!(v + basis.eos.delta2 * b > 0.0))
        throw std::domain_error("h_coefficients: v + delta2 b must be positive");
    const std::size_t m = basis.m;
    const double rt = GAS_CONSTANT * t;
    const HGeometry g = h_geometry(b, v, basis.eos);
    const double d1 = basis.eos.delta1, d2 = basis.eos.delta2;

    std::vector<double> h(m + 2);
    const double a = energy_param_from_q(q, basis.lambda);
    for (std::size_t k = 0; k < m; ++k)
        h[k] = 2.0 * basis.lambda[k] * q[k] * g.lratio / ((d1 - d2) * b * rt);
    h[m] = a * g.brace / (rt * b * b) - 1.0 / g.vmb;
    h[m + 1] = std::log(g.vmb);
    return h;
}

std::vector<double> ln_psi(std::span<const double> h, const ReductionBasis& basis) {
    const std::size_t n = basis.n, m = basis.m;
    if (h.size() != m + 2) throw std::invalid_argument("ln_psi: h length must be m+2");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = h[m] * basis.b_hat[i] + h[m + 1];
        for (std::size_t k = 0; k < m; ++k) s += h[k] * basis.s_hat_at(k, i);
        out[i] = s;
    }
    return out;
}

std::vector<double> ln_k_from_hdelta(const ReducedVars& hd, const ReductionBasis& basis) {
    return ln_psi(hd.h_delta, basis);
}

HPartials h_partials(std::span<const double> q, double b, double v, double t,
                     const ReductionBasis& basis) {
    if (!(v > b)) throw std::domain_error("h_partials: v must exceed the co-volume");
    const std::size_t m = basis.m;
    const double rt = GAS_CONSTANT * t;
    const double d1 = basis.eos.delta1, d2 = basis.eos.delta2;
    const HGeometry g = h_geometry(b, v, basis.eos);
    const double a = energy_param_from_q(q, basis.lambda);

    HPartials hp;
    hp.m = m;
    hp.dh_dq.assign((m + 2) * m, 0.0);
    hp.dh_db.assign(m + 2, 0.0);
    hp.dh_dv.assign(m + 2, 0.0);

    for (std::size_t k = 0; k < m; ++k) {
        const double lam_q = 2.0 * basis.lambda[k] * q[k];
        // h_k is linear in q_k
        hp.dh_dq[k * m + k] = 2.0 * basis.lambda[k] * g.lratio / ((d1 - d2) * b * rt);
        hp.dh_dq[m * m + k] = lam_q * g.brace / (rt * b * b);
        hp.dh_db[k] = lam_q * g.brace / (rt * b * b);
        hp.dh_dv[k] = -lam_q / (rt * g.d);
    }
    const double d2sq = g.d * g.d;
    hp.dh_db[m] = a * v *
                      (2.0 * g.lratio / (b * v * (d1 - d2)) -
                       (4.0 * d1 * d2 * b * b + 3.0 * v * b * (d1 + d2) + 2.0 * v * v) / d2sq) /
                      (rt * b * b) -
                  1.0 / (g.vmb * g.vmb);
    hp.dh_db[m + 1] = -1.0 / g.vmb;
    hp.dh_dv[m] = a * (2.0 * b * d1 * d2 + v * (d1 + d2)) / (rt * d2sq) + 1.0 / (g.vmb * g.vmb);
    hp.dh_dv[m + 1] = 1.0 / g.vmb;
    return hp;
}

CompositionDerivs k_theta_composition_derivs(std::span<const double> k, double theta,
                                             std::span<const double> z_hat,
                                             const ReductionBasis& basis) {
    const std::size_t n = basis.n, m = basis.m, mp2 = m + 2;
    if (!(theta > 0.0 && theta < 1.0))
        throw std::domain_error("k_theta_composition_derivs: theta must be in (0,1)");

    CompositionDerivs cd;
    cd.n = n;
    cd.mp2 = mp2;
    cd.dk.assign(n * mp2, 0.0);
    cd.dtheta.assign(mp2, 0.0);
    cd.dx.assign(n * mp2, 0.0);
    cd.dy.assign(n * mp2, 0.0);
    cd.dq_liq.assign(m * mp2, 0.0);
    cd.dq_vap.assign(m * mp2, 0.0);
    cd.db_liq.assign(mp2, 0.0);
    cd.db_vap.assign(mp2, 0.0);

    std::vector<double> d(n);
    double denom = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = 1.0 + theta * (k[i] - 1.0);
        d[i] = -z_hat[i] / (w * w);
        denom += d[i] * (k[i] - 1.0) * (k[i] - 1.0);
    }
    if (denom == 0.0)
        throw std::domain_error("k_theta_composition_derivs: degenerate state (all K = 1)");

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t beta = 0; beta < mp2; ++beta) {
            double fac;
            if (beta < m)
                fac = basis.s_hat_at(beta, i);
            else if (beta == m)
                fac = basis.b_hat[i];
            else
                fac = 1.0;
            cd.dk[i * mp2 + beta] = k[i] * fac;
        }
    }
    for (std::size_t beta = 0; beta < mp2; ++beta) {
        double num = 0.0;
        for (std::size_t i = 0; i < n; ++i) num += d[i] * cd.dk[i * mp2 + beta];
        cd.dtheta[beta] = num / denom;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t beta = 0; beta < mp2; ++beta) {
            const double dki = cd.dk[i * mp2 + beta];
            const double dth = cd.dtheta[beta];
            cd.dx[i * mp2 + beta] = d[i] * (theta * dki + (k[i] - 1.0) * dth);
            cd.dy[i * mp2 + beta] =
                d[i] * (-(1.0 - theta) * dki + k[i] * (k[i] - 1.0) * dth);
        }
    }
    for (std::size_t beta = 0; beta < mp2; ++beta) {
        for (std::size_t kk = 0; kk < m; ++kk) {
            double sl = 0.0, sv = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                sl += cd.dx[i * mp2 + beta] * basis.s_hat_at(kk, i);
                sv += cd.dy[i * mp2 + beta] * basis.s_hat_at(kk, i);
            }
            cd.dq_liq[kk * mp2 + beta] = sl;
            cd.dq_vap[kk * mp2 + beta] = sv;
        }
        double bl = 0.0, bv = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            bl += cd.dx[i * mp2 + beta] * basis.b_hat[i];
            bv += cd.dy[i * mp2 + beta] * basis.b_hat[i];
        }
        cd.db_liq[beta] = bl;
        cd.db_vap[beta] = bv;
    }
    return cd;
}

}  // namespace vleq
