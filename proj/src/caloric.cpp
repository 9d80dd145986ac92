#include "vleq/caloric.hpp"

#include <cmath>
#include <stdexcept>

namespace vleq {

IdealProps ideal_props(const Component& c, double t) {
    const NasaRecord& rec = c.nasa;
    if (!(t >= rec.t_low && t <= rec.t_high))
        throw std::domain_error("ideal_props: temperature outside the tabulated range for " +
                                c.name);
    const double* a = rec.coef[t < rec.t_mid ? 0 : 1];
    const double r = GAS_CONSTANT;
    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t;

    const double cp_r = a[0] / t2 + a[1] / t + a[2] + a[3] * t + a[4] * t2 + a[5] * t3 + a[6] * t4;
    const double h_rt = -a[0] / t2 + a[1] * std::log(t) / t + a[2] + a[3] * t / 2.0 +
                        a[4] * t2 / 3.0 + a[5] * t3 / 4.0 + a[6] * t4 / 5.0 + a[7] / t;

    IdealProps out;
    out.cp = cp_r * r;
    out.cv = out.cp - r;
    out.h = h_rt * r * t;
    out.u = out.h - r * t;
    return out;
}

EnergyParamDerivs energy_param_t_derivs(std::span<const double> z, const ReductionBasis& basis,
                                        const Mixture& mix) {
    const double t = basis.temperature;
    const std::size_t n = basis.n, m = basis.m;
    const double r = GAS_CONSTANT;
    const EosSpec& eos = basis.eos;

    EnergyParamDerivs out;
    const std::vector<double> q = reduced_parameters(z, basis);

    // sum_i z_i c(w_i) s_ki sgn(theta_i) sqrt(Tc_i/pc_i), shared by both derivatives
    std::vector<double> inner(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const Component& c = mix.components[i];
        const double cw = eos.c_of_omega(c.omega);
        const double vartheta = 1.0 + cw * (1.0 - std::sqrt(t / c.tc));
        const double sgn = vartheta >= 0.0 ? 1.0 : -1.0;
        if (vartheta < 0.0) out.negative_alpha_root = true;
        const double w = z[i] * cw * sgn * std::sqrt(c.tc / c.pc);
        for (std::size_t k = 0; k < m; ++k) inner[k] += w * basis.s_at(k, i);
    }
    const double pref = std::sqrt(eos.omega_a / t);
    for (std::size_t k = 0; k < m; ++k) {
        const double dq = -0.5 * r * pref * inner[k];
        const double d2q = 0.25 * r / t * pref * inner[k];
        out.da_dt += 2.0 * basis.lambda[k] * q[k] * dq;
        out.d2a_dt2 += 2.0 * basis.lambda[k] * (dq * dq + q[k] * d2q);
    }
    return out;
}

CaloricState phase_caloric(const Mixture& mix, const ReductionBasis& basis,
                           std::span<const double> z, double v, double t, double p) {
    const std::size_t n = mix.size();
    const double r = GAS_CONSTANT;
    const EosSpec& eos = basis.eos;
    const double d1 = eos.delta1, d2 = eos.delta2;

    const std::vector<double> q = reduced_parameters(z, basis);
    const double a = energy_param_from_q(q, basis.lambda);
    double b = 0.0;
    for (std::size_t i = 0; i < n; ++i) b += z[i] * basis.b_hat[i];
    if (!(v > b)) throw std::domain_error("phase_caloric: v must exceed the co-volume");

    const EnergyParamDerivs ad = energy_param_t_derivs(z, basis, mix);
    const double lratio = std::log((v + d1 * b) / (v + d2 * b));

    CaloricState out;
    double u_ig = 0.0, cv_ig = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const IdealProps ip = ideal_props(mix.components[i], t);
        u_ig += z[i] * ip.u;
        cv_ig += z[i] * ip.cv;
    }
    out.u = u_ig + (a - t * ad.da_dt) / ((d2 - d1) * b) * lratio;
    out.h = out.u + p * v;
    out.cv = cv_ig + t * ad.d2a_dt2 / ((d1 - d2) * b) * lratio;

    const MixParams mp{a, b, {}};
    const PressureDerivs pd = pressure_derivs(t, v, mp, eos, ad.da_dt);
    if (!(pd.dp_dv < 0.0))
        throw std::domain_error("phase_caloric: mechanically unstable state (dp/dv >= 0)");
    out.cp = out.cv - t * pd.dp_dt * pd.dp_dt / pd.dp_dv;
    return out;
}

CaloricState mixture_caloric(double theta, const CaloricState& liquid, const CaloricState& vapor) {
    if (!(theta >= 0.0 && theta <= 1.0))
        throw std::domain_error("mixture_caloric: theta must lie in [0,1]");
    CaloricState out;
    out.u = (1.0 - theta) * liquid.u + theta * vapor.u;
    out.h = (1.0 - theta) * liquid.h + theta * vapor.h;
    out.cv = (1.0 - theta) * liquid.cv + theta * vapor.cv;
    out.cp = (1.0 - theta) * liquid.cp + theta * vapor.cp;
    return out;
}

}  // namespace vleq
