#include "vleq/flash.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace vleq {

namespace {

std::vector<double> log_vec(std::span<const double> v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::log(v[i]);
    return out;
}

double norm2_diff(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double max_abs_k_minus_one(std::span<const double> k) {
    double m = 0.0;
    for (double v : k) m = std::max(m, std::abs(v - 1.0));
    return m;
}

}  // namespace

std::vector<double> wilson_k(const Mixture& mix, double t, double p) {
    if (!(t > 0.0 && p > 0.0)) throw std::domain_error("wilson_k: T and p must be positive");
    std::vector<double> k(mix.size());
    for (std::size_t i = 0; i < mix.size(); ++i) {
        const Component& c = mix.components[i];
        k[i] = c.pc / p * std::exp(5.373 * (1.0 + c.omega) * (1.0 - c.tc / t));
    }
    return k;
}

double estimate_pressure_vt(const Mixture& mix, double t, double /*v_hat*/) {
    if (!(t > 0.0)) throw std::domain_error("estimate_pressure_vt: T must be positive");
    double dew = 0.0, bubble = 0.0;
    for (std::size_t i = 0; i < mix.size(); ++i) {
        const Component& c = mix.components[i];
        const double psat = c.pc * std::exp(5.373 * (1.0 + c.omega) * (1.0 - c.tc / t));
        bubble += mix.z_hat[i] * psat;
        dew += mix.z_hat[i] / psat;
    }
    return std::sqrt(bubble / dew);
}

double QuinticCoeffs::eval(double v) const {
    double s = 0.0;
    for (int j = 5; j >= 0; --j) s = s * v + varsigma[j];
    return s;
}

double QuinticCoeffs::eval_scale(double v) const {
    double scale = 0.0, pw = 1.0;
    for (int j = 0; j <= 5; ++j) {
        scale = std::max(scale, std::abs(varsigma[j] * pw));
        pw *= v;
    }
    return scale;
}

QuinticCoeffs vt_quintic(double theta, double v_hat, const MixParams& liq, const MixParams& vap,
                         double t, const EosSpec& eos) {
    const double d1 = eos.delta1, d2 = eos.delta2;
    const double rt = GAS_CONSTANT * t;

    QuinticCoeffs qc;
    const MixParams* ph[2] = {&liq, &vap};
    for (int j = 0; j < 2; ++j) {
        const double a = ph[j]->a, b = ph[j]->b;
        double* al = j == 0 ? qc.alpha_liq : qc.alpha_vap;
        al[0] = b * (d1 + d2) - a / rt;
        al[1] = b * (b * d1 * d2 + a / rt);
        al[2] = b * (d1 * d2 - 1.0);
        al[3] = b * b * (d1 + d2 - d1 * d2);
        al[4] = -b * b * b * d1 * d2;
    }

    // varsigma by polynomial composition: with w(v_L) = v_hat - (1-theta) v_L
    // (= theta v_V), N(v) = v^2 + alpha1 v + alpha2 and M(v) = (v-b) D(v),
    //   varsigma = N_L(v_L) [theta^3 M_V(v_V)] - [theta^2 N_V(v_V)] [theta M_L(v_L)]
    // which equals theta^3 M_L M_V (p_L - p_V)/RT, leading coefficient -(theta-1)^2.
    const double w0 = v_hat, w1 = -(1.0 - theta);
    double w2[3], w3[4];
    w2[0] = w0 * w0;
    w2[1] = 2.0 * w0 * w1;
    w2[2] = w1 * w1;
    w3[0] = w2[0] * w0;
    w3[1] = w2[1] * w0 + w2[0] * w1;
    w3[2] = w2[2] * w0 + w2[1] * w1;
    w3[3] = w2[2] * w1;

    const double bl = liq.b, bv = vap.b;
    const double m2 = (d1 + d2 - 1.0);        // * b   (v^2 coefficient of M)
    const double m1 = (d1 * d2 - d1 - d2);    // * b^2
    const double m0 = -d1 * d2;               // * b^3

    // theta^3 M_V(v_V) as a cubic in v_L
    double mv3[4] = {w3[0], w3[1], w3[2], w3[3]};
    for (int i = 0; i < 3; ++i) mv3[i] += m2 * bv * theta * w2[i];
    for (int i = 0; i < 2; ++i) mv3[i] += m1 * bv * bv * theta * theta * ((i == 0) ? w0 : w1);
    mv3[0] += m0 * bv * bv * bv * theta * theta * theta;

    // theta^2 N_V(v_V) as a quadratic in v_L
    double nv2[3] = {w2[0], w2[1], w2[2]};
    nv2[0] += qc.alpha_vap[0] * theta * w0 + qc.alpha_vap[1] * theta * theta;
    nv2[1] += qc.alpha_vap[0] * theta * w1;

    const double nl[3] = {qc.alpha_liq[1], qc.alpha_liq[0], 1.0};
    const double ml[4] = {m0 * bl * bl * bl * theta, m1 * bl * bl * theta, m2 * bl * theta,
                          theta};

    std::memset(qc.varsigma, 0, sizeof(qc.varsigma));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) qc.varsigma[i + j] += nl[i] * mv3[j];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) qc.varsigma[i + j] -= nv2[i] * ml[j];
    return qc;
}

VtVolumes solve_vt_volumes(double theta, double v_hat, const MixParams& liq, const MixParams& vap,
                           double t, const EosSpec& eos) {
    if (!(theta > 0.0 && theta < 1.0))
        throw std::domain_error("solve_vt_volumes: theta pole at 0 or 1");

    VtVolumes out;
    out.quintic = vt_quintic(theta, v_hat, liq, vap, t, eos);

    double lo = liq.b * (1.0 + 1e-12);
    double hi = (v_hat - theta * vap.b) / (1.0 - theta) * (1.0 - 1e-12);
    if (!(lo < hi)) return out;  // v_hat below the mixed co-volume: infeasible

    const auto v_vap_of = [&](double vl) { return (v_hat - (1.0 - theta) * vl) / theta; };
    const auto f_of = [&](double vl, double& pl, double& pv) {
        pl = pressure(t, vl, liq, eos);
        pv = pressure(t, v_vap_of(vl), vap, eos);
        return pl - pv;
    };

    double pl = 0.0, pv = 0.0;
    if (!(f_of(lo, pl, pv) > 0.0) || !(f_of(hi, pl, pv) < 0.0)) return out;

    double v = liq.b * (1.0 + 1e-5);
    v = std::clamp(v, lo, hi);
    for (int it = 0; it < 200; ++it) {
        const double f = f_of(v, pl, pv);
        const double p_scale = std::max({std::abs(pl), std::abs(pv), 1.0});
        if (std::abs(f) <= 1e-12 * p_scale) break;
        if (f > 0.0)
            lo = v;
        else
            hi = v;
        const double dfl = pressure_derivs(t, v, liq, eos).dp_dv;
        const double dfv = pressure_derivs(t, v_vap_of(v), vap, eos).dp_dv;
        const double df = dfl + dfv * (1.0 - theta) / theta;
        double v_new = df != 0.0 ? v - f / df : lo;
        if (!(v_new > lo && v_new < hi)) v_new = 0.5 * (lo + hi);
        if (v_new == v) break;
        v = v_new;
        if (hi - lo <= 1e-16 * v_hat) break;
    }
    out.feasible = true;
    out.v_liq = v;
    out.v_vap = v_vap_of(v);
    return out;
}

SubStateResult evaluate_two_phase(const Mixture& mix, const ReductionBasis& basis,
                                  std::span<const double> k, const FlashSpec& spec,
                                  const FlashConfig& cfg) {
    SubStateResult out;
    const RRResult rr = solve_rachford_rice(mix.z_hat, k, cfg.rr_tol);
    if (rr.status == RRStatus::SinglePhase || rr.status == RRStatus::Degenerate) {
        out.status = SubStateStatus::SinglePhaseSignal;
        return out;
    }
    if (rr.status != RRStatus::Ok || !(rr.theta > 0.0 && rr.theta < 1.0)) {
        out.status = SubStateStatus::SinglePhaseSignal;
        return out;
    }

    TwoPhaseState& st = out.state;
    st.theta = rr.theta;
    st.k.assign(k.begin(), k.end());
    phase_compositions(mix.z_hat, k, rr.theta, st.x, st.y);

    const std::size_t n = mix.size();
    for (PhaseState* ph : {&st.liquid, &st.vapor}) ph->t = spec.t;
    st.liquid.z = st.x;
    st.vapor.z = st.y;
    for (int j = 0; j < 2; ++j) {
        PhaseState& ph = j == 0 ? st.liquid : st.vapor;
        ph.q = reduced_parameters(ph.z, basis);
        ph.a = energy_param_from_q(ph.q, basis.lambda);
        ph.b = 0.0;
        for (std::size_t i = 0; i < n; ++i) ph.b += ph.z[i] * basis.b_hat[i];
    }

    const MixParams mp_liq{st.liquid.a, st.liquid.b, {}};
    const MixParams mp_vap{st.vapor.a, st.vapor.b, {}};
    if (spec.kind == FlashKind::PT) {
        try {
            st.liquid.v = solve_cubic_volume(spec.t, spec.p, mp_liq, basis.eos);
            st.vapor.v = solve_cubic_volume(spec.t, spec.p, mp_vap, basis.eos);
        } catch (const NoVolumeRootError&) {
            out.status = SubStateStatus::Infeasible;
            return out;
        }
        st.p_liq = st.p_vap = spec.p;
    } else {
        const VtVolumes vv = solve_vt_volumes(rr.theta, spec.v_hat, mp_liq, mp_vap, spec.t,
                                              basis.eos);
        if (!vv.feasible) {
            out.status = SubStateStatus::Infeasible;
            return out;
        }
        st.liquid.v = vv.v_liq;
        st.vapor.v = vv.v_vap;
        st.p_liq = pressure(spec.t, vv.v_liq, mp_liq, basis.eos);
        st.p_vap = pressure(spec.t, vv.v_vap, mp_vap, basis.eos);
    }
    out.status = SubStateStatus::Ok;
    return out;
}

ReducedVars ssi_step(const Mixture& mix, const ReductionBasis& basis, std::span<const double> k,
                     const FlashSpec& spec, const FlashConfig& cfg) {
    const SubStateResult sub = evaluate_two_phase(mix, basis, k, spec, cfg);
    if (sub.status == SubStateStatus::SinglePhaseSignal)
        throw std::runtime_error("ssi_step: single-phase signal from Rachford-Rice");
    if (sub.status != SubStateStatus::Ok)
        throw std::runtime_error("ssi_step: infeasible volume sub-problem");
    const TwoPhaseState& st = sub.state;
    const auto h_liq = h_coefficients(st.liquid.q, st.liquid.b, st.liquid.v, spec.t, basis);
    const auto h_vap = h_coefficients(st.vapor.q, st.vapor.b, st.vapor.v, spec.t, basis);
    ReducedVars hd;
    hd.h_delta.resize(h_liq.size());
    for (std::size_t a = 0; a < h_liq.size(); ++a) hd.h_delta[a] = h_vap[a] - h_liq[a];
    return hd;
}

NewtonSystem assemble_newton_system(const Mixture& mix, const ReductionBasis& basis,
                                    const TwoPhaseState& sub, const ReducedVars& h_delta,
                                    const FlashSpec& spec) {
    const std::size_t m = basis.m, mp2 = m + 2;
    const double t = spec.t;

    const CompositionDerivs cd = k_theta_composition_derivs(sub.k, sub.theta, mix.z_hat, basis);

    NewtonSystem sys;
    sys.error.assign(mp2, 0.0);
    sys.jacobian = SquareMatrix(mp2);

    const auto h_liq = h_coefficients(sub.liquid.q, sub.liquid.b, sub.liquid.v, t, basis);
    const auto h_vap = h_coefficients(sub.vapor.q, sub.vapor.b, sub.vapor.v, t, basis);
    for (std::size_t a = 0; a < mp2; ++a)
        sys.error[a] = h_vap[a] - h_liq[a] - h_delta.h_delta[a];

    const HPartials hp_liq = h_partials(sub.liquid.q, sub.liquid.b, sub.liquid.v, t, basis);
    const HPartials hp_vap = h_partials(sub.vapor.q, sub.vapor.b, sub.vapor.v, t, basis);

    const MixParams mp_l{sub.liquid.a, sub.liquid.b, {}};
    const MixParams mp_v{sub.vapor.a, sub.vapor.b, {}};
    const PressureDerivs pd_l = pressure_derivs(t, sub.liquid.v, mp_l, basis.eos);
    const PressureDerivs pd_v = pressure_derivs(t, sub.vapor.v, mp_v, basis.eos);
    std::vector<double> dpdq_l(m), dpdq_v(m);
    for (std::size_t kk = 0; kk < m; ++kk) {
        dpdq_l[kk] = pressure_dq(t, sub.liquid.v, mp_l, basis.eos, basis.lambda[kk],
                                 sub.liquid.q[kk]);
        dpdq_v[kk] = pressure_dq(t, sub.vapor.v, mp_v, basis.eos, basis.lambda[kk],
                                 sub.vapor.q[kk]);
    }

    // volume sensitivities per principal variable
    std::vector<double> dv_liq(mp2, 0.0), dv_vap(mp2, 0.0);
    if (spec.kind == FlashKind::PT) {
        for (std::size_t beta = 0; beta < mp2; ++beta) {
            double nl = pd_l.dp_db * cd.db_liq[beta];
            double nv = pd_v.dp_db * cd.db_vap[beta];
            for (std::size_t kk = 0; kk < m; ++kk) {
                nl += dpdq_l[kk] * cd.dq_liq[kk * mp2 + beta];
                nv += dpdq_v[kk] * cd.dq_vap[kk * mp2 + beta];
            }
            dv_liq[beta] = -nl / pd_l.dp_dv;
            dv_vap[beta] = -nv / pd_v.dp_dv;
        }
    } else {
        const double theta = sub.theta;
        const double coupling = (theta - 1.0) / theta;  // dv_V/dv_L at fixed theta
        const double fv = pd_l.dp_dv - pd_v.dp_dv * coupling;
        const double dvv_dtheta = (sub.liquid.v - sub.vapor.v) / theta;  // at fixed v_L
        for (std::size_t beta = 0; beta < mp2; ++beta) {
            double num = pd_l.dp_db * cd.db_liq[beta] - pd_v.dp_db * cd.db_vap[beta] -
                         pd_v.dp_dv * dvv_dtheta * cd.dtheta[beta];
            for (std::size_t kk = 0; kk < m; ++kk)
                num += dpdq_l[kk] * cd.dq_liq[kk * mp2 + beta] -
                       dpdq_v[kk] * cd.dq_vap[kk * mp2 + beta];
            dv_liq[beta] = -num / fv;
            dv_vap[beta] = coupling * dv_liq[beta] + dvv_dtheta * cd.dtheta[beta];
        }
    }

    for (std::size_t a = 0; a < mp2; ++a) {
        for (std::size_t beta = 0; beta < mp2; ++beta) {
            double dl = hp_liq.dh_db[a] * cd.db_liq[beta] + hp_liq.dh_dv[a] * dv_liq[beta];
            double dv = hp_vap.dh_db[a] * cd.db_vap[beta] + hp_vap.dh_dv[a] * dv_vap[beta];
            for (std::size_t kk = 0; kk < m; ++kk) {
                dl += hp_liq.dh_dq[a * m + kk] * cd.dq_liq[kk * mp2 + beta];
                dv += hp_vap.dh_dq[a * m + kk] * cd.dq_vap[kk * mp2 + beta];
            }
            sys.jacobian(a, beta) = dv - dl - (a == beta ? 1.0 : 0.0);
        }
    }
    return sys;
}

namespace {

struct SinglePhaseInfo {
    double v = 0.0;
    double p = 0.0;
    bool vapor_like = false;
};

SinglePhaseInfo single_phase_state(const Mixture& mix, const FlashSpec& spec) {
    SinglePhaseInfo info;
    const PureParams pp = pure_params(mix.components, mix.eos, spec.t);
    const MixParams mp = mixture_params(mix.z_hat, pp, mix.kappa);
    if (spec.kind == FlashKind::PT) {
        info.p = spec.p;
        info.v = solve_cubic_volume(spec.t, spec.p, mp, mix.eos);
    } else {
        info.v = spec.v_hat;
        info.p = pressure(spec.t, spec.v_hat, mp, mix.eos);
    }
    if (info.p > 0.0) {
        const CubicCoeffs c = volume_cubic(spec.t, info.p, mp, mix.eos);
        double roots[3];
        const int nr = solve_cubic_real(c.rho2, c.rho1, c.rho0, roots);
        double vmax = -1.0;
        int physical = 0;
        for (int i = 0; i < nr; ++i)
            if (roots[i] > mp.b * (1.0 + 1e-12)) {
                ++physical;
                vmax = std::max(vmax, roots[i]);
            }
        info.vapor_like = physical <= 1 || info.v >= vmax * (1.0 - 1e-9);
    }
    return info;
}

FlashResult finish_single_phase(const Mixture& mix, const FlashSpec& spec, FlashResult res) {
    const SinglePhaseInfo info = single_phase_state(mix, spec);
    res.status = FlashStatus::SinglePhase;
    res.vapor_like = info.vapor_like;
    res.theta = info.vapor_like ? 1.0 : 0.0;
    res.x = mix.z_hat;
    res.y = mix.z_hat;
    res.k.assign(mix.size(), 1.0);
    res.v_liq = res.v_vap = info.v;
    res.p = info.p;
    return res;
}

FlashResult finish_two_phase(const FlashSpec& spec, const TwoPhaseState& st, FlashResult res) {
    res.status = FlashStatus::TwoPhase;
    res.theta = st.theta;
    res.x = st.x;
    res.y = st.y;
    res.k = st.k;
    res.v_liq = st.liquid.v;
    res.v_vap = st.vapor.v;
    res.p = spec.kind == FlashKind::PT ? spec.p : st.p_liq;
    return res;
}

}  // namespace

FlashResult flash_isothermal(const Mixture& mix, const Spectrum& spectrum, const FlashSpec& spec,
                             std::optional<std::span<const double>> k0, const FlashConfig& cfg) {
    FlashResult res;
    res.t = spec.t;
    if (spec.kind == FlashKind::PT) res.p = spec.p;

    const ReductionBasis basis = build_reduction_basis(mix, spectrum, spec.t);

    std::vector<double> k;
    if (k0) {
        k.assign(k0->begin(), k0->end());
    } else {
        double p_init;
        if (spec.kind == FlashKind::PT) {
            p_init = spec.p;
        } else if (cfg.vt_eos_pressure_init) {
            const PureParams pp = pure_params(mix.components, mix.eos, spec.t);
            const MixParams mp = mixture_params(mix.z_hat, pp, mix.kappa);
            p_init = std::max(pressure(spec.t, spec.v_hat, mp, mix.eos), cfg.vt_pressure_floor);
        } else {
            p_init = estimate_pressure_vt(mix, spec.t, spec.v_hat);
        }
        k = wilson_k(mix, spec.t, p_init);
    }

    std::vector<double> lnk_old = log_vec(k);
    ReducedVars h_delta;
    SubStateResult sub;

    // SSI phase
    for (int pass = 0; pass < std::max(cfg.max_ssi, 1); ++pass) {
        sub = evaluate_two_phase(mix, basis, k, spec, cfg);
        if (sub.status == SubStateStatus::SinglePhaseSignal)
            return finish_single_phase(mix, spec, std::move(res));
        if (sub.status == SubStateStatus::Infeasible) {
            if (spec.kind == FlashKind::VT) return finish_single_phase(mix, spec, std::move(res));
            res.message = "infeasible volume sub-problem";
            return res;
        }
        const auto h_liq =
            h_coefficients(sub.state.liquid.q, sub.state.liquid.b, sub.state.liquid.v, spec.t,
                           basis);
        const auto h_vap =
            h_coefficients(sub.state.vapor.q, sub.state.vapor.b, sub.state.vapor.v, spec.t, basis);
        h_delta.h_delta.resize(h_liq.size());
        for (std::size_t a = 0; a < h_liq.size(); ++a)
            h_delta.h_delta[a] = h_vap[a] - h_liq[a];

        const std::vector<double> lnk_new = ln_k_from_hdelta(h_delta, basis);
        const double r = norm2_diff(lnk_new, lnk_old);
        res.residual_history.push_back(r);
        ++res.ssi_iterations;
        for (std::size_t i = 0; i < k.size(); ++i) k[i] = std::exp(lnk_new[i]);
        lnk_old = lnk_new;
        if (max_abs_k_minus_one(k) < cfg.trivial_k_tol)
            return finish_single_phase(mix, spec, std::move(res));
        if (r <= cfg.ssi_tol) break;
    }

    // Newton phase
    sub = evaluate_two_phase(mix, basis, k, spec, cfg);
    if (sub.status == SubStateStatus::SinglePhaseSignal)
        return finish_single_phase(mix, spec, std::move(res));
    if (sub.status == SubStateStatus::Infeasible) {
        if (spec.kind == FlashKind::VT) return finish_single_phase(mix, spec, std::move(res));
        res.message = "infeasible volume sub-problem";
        return res;
    }

    for (int it = 0; it < cfg.max_newton; ++it) {
        NewtonSystem sys;
        try {
            sys = assemble_newton_system(mix, basis, sub.state, h_delta, spec);
        } catch (const std::domain_error& err) {
            res.message = err.what();
            return res;
        }
        std::vector<double> rhs(sys.error.size());
        for (std::size_t a = 0; a < rhs.size(); ++a) rhs[a] = -sys.error[a];
        std::vector<double> step;
        try {
            step = solve_gauss(sys.jacobian, rhs);
        } catch (const std::runtime_error&) {
            res.message = "singular Jacobian";
            return res;
        }

        // step halving against invalid sub-states
        double lam = 1.0;
        ReducedVars h_trial;
        std::vector<double> lnk_trial;
        SubStateResult sub_trial;
        bool accepted = false;
        for (int half = 0; half <= cfg.max_step_halvings; ++half) {
            h_trial.h_delta.resize(h_delta.h_delta.size());
            for (std::size_t a = 0; a < h_trial.h_delta.size(); ++a)
                h_trial.h_delta[a] = h_delta.h_delta[a] + lam * step[a];
            lnk_trial = ln_k_from_hdelta(h_trial, basis);
            std::vector<double> k_trial(lnk_trial.size());
            bool finite = true;
            for (std::size_t i = 0; i < lnk_trial.size(); ++i) {
                k_trial[i] = std::exp(lnk_trial[i]);
                finite = finite && std::isfinite(k_trial[i]) && k_trial[i] > 0.0;
            }
            if (finite) {
                if (max_abs_k_minus_one(k_trial) < cfg.trivial_k_tol)
                    return finish_single_phase(mix, spec, std::move(res));
                sub_trial = evaluate_two_phase(mix, basis, k_trial, spec, cfg);
                if (sub_trial.status == SubStateStatus::Ok) {
                    k = std::move(k_trial);
                    accepted = true;
                    break;
                }
            }
            lam *= 0.5;
        }
        if (!accepted) {
            res.message = "Newton step left the two-phase domain";
            return res;
        }

        h_delta = std::move(h_trial);
        sub = std::move(sub_trial);
        const double r = norm2_diff(lnk_trial, lnk_old);
        res.residual_history.push_back(r);
        lnk_old = std::move(lnk_trial);
        ++res.newton_iterations;

        if (max_abs_k_minus_one(k) < cfg.trivial_k_tol)
            return finish_single_phase(mix, spec, std::move(res));
        if (r <= cfg.k_tol) return finish_two_phase(spec, sub.state, std::move(res));
    }
    res.message = "maximum Newton iterations exceeded";
    return res;
}

FlashResult flash_pt(const Mixture& mix, double t, double p,
                     std::optional<std::span<const double>> k0, const FlashConfig& cfg) {
    if (!(t > 0.0 && p > 0.0)) throw std::domain_error("flash_pt: T and p must be positive");
    const Spectrum sp = spectral_decompose(mix.kappa, mix.size());
    return flash_isothermal(mix, sp, FlashSpec::pt(t, p), k0, cfg);
}

FlashResult flash_vt(const Mixture& mix, double t, double v_hat,
                     std::optional<std::span<const double>> k0, const FlashConfig& cfg) {
    if (!(t > 0.0)) throw std::domain_error("flash_vt: T must be positive");
    double bmin = mix.components.empty() ? 0.0 : 1e300;
    for (const Component& c : mix.components)
        bmin = std::min(bmin, mix.eos.omega_b * GAS_CONSTANT * c.tc / c.pc);
    if (!(v_hat > bmin)) throw std::domain_error("flash_vt: v_hat below the minimum co-volume");
    const Spectrum sp = spectral_decompose(mix.kappa, mix.size());
    return flash_isothermal(mix, sp, FlashSpec::vt(t, v_hat), k0, cfg);
}

}  // namespace vleq
