#include "vleq/cubic_eos.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vleq {

EosSpec EosSpec::peng_robinson() {
    EosSpec e;
    e.delta1 = 1.0 + std::numbers::sqrt2;
    e.delta2 = 1.0 - std::numbers::sqrt2;
    e.omega_a = 0.45724;
    e.omega_b = 0.0778;
    e.alpha_form = AlphaForm::PengRobinson;
    return e;
}

EosSpec EosSpec::soave_redlich_kwong() {
    EosSpec e;
    e.delta1 = 0.0;
    e.delta2 = 1.0;
    e.omega_a = 0.42748;
    e.omega_b = 0.08664;
    e.alpha_form = AlphaForm::SoaveRedlichKwong;
    return e;
}

double EosSpec::c_of_omega(double w) const {
    if (alpha_form == AlphaForm::SoaveRedlichKwong)
        return 0.48508 + 1.55171 * w - 0.15613 * w * w;
    if (w < 0.5) return 0.37464 + 1.54226 * w - 0.26992 * w * w;
    return 0.3796 + 1.485 * w - 0.1644 * w * w + 0.01667 * w * w * w;
}

PureParams pure_params(const std::vector<Component>& components, const EosSpec& eos, double t) {
    if (!(t > 0.0)) throw std::domain_error("pure_params: T must be positive");
    PureParams pp;
    pp.temperature = t;
    pp.a_hat.reserve(components.size());
    pp.b_hat.reserve(components.size());
    const double r = GAS_CONSTANT;
    for (const Component& c : components) {
        const double bracket = 1.0 + eos.c_of_omega(c.omega) * (1.0 - std::sqrt(t / c.tc));
        pp.a_hat.push_back(eos.omega_a * r * r * c.tc * c.tc / c.pc * bracket * bracket);
        pp.b_hat.push_back(eos.omega_b * r * c.tc / c.pc);
    }
    return pp;
}

MixParams mixture_params(std::span<const double> z, const PureParams& pp,
                         std::span<const double> kappa) {
    const std::size_t n = z.size();
    MixParams mp;
    mp.g.assign(n, 0.0);
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) sq[i] = std::sqrt(pp.a_hat[i]);
    for (std::size_t i = 0; i < n; ++i) {
        double gi = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            gi += z[j] * (1.0 - kappa[i * n + j]) * sq[i] * sq[j];
        mp.g[i] = gi;
        mp.a += z[i] * gi;
        mp.b += z[i] * pp.b_hat[i];
    }
    return mp;
}

double pressure(double t, double v, const MixParams& mp, const EosSpec& eos) {
    if (!(v > mp.b)) throw std::domain_error("pressure: v must exceed the co-volume");
    const double d = (v + eos.delta1 * mp.b) * (v + eos.delta2 * mp.b);
    return GAS_CONSTANT * t / (v - mp.b) - mp.a / d;
}

PressureDerivs pressure_derivs(double t, double v, const MixParams& mp, const EosSpec& eos,
                               double da_dt) {
    if (!(v > mp.b)) throw std::domain_error("pressure_derivs: v must exceed the co-volume");
    const double d1 = eos.delta1, d2 = eos.delta2;
    const double vmb = v - mp.b;
    const double d = (v + d1 * mp.b) * (v + d2 * mp.b);
    PressureDerivs out;
    out.dp_dv = -GAS_CONSTANT * t / (vmb * vmb) + mp.a * (2.0 * v + (d1 + d2) * mp.b) / (d * d);
    out.dp_dt = GAS_CONSTANT / vmb - da_dt / d;
    out.dp_db =
        GAS_CONSTANT * t / (vmb * vmb) + mp.a * (2.0 * d1 * d2 * mp.b + v * (d1 + d2)) / (d * d);
    return out;
}

double pressure_dq(double t, double v, const MixParams& mp, const EosSpec& eos, double lambda_k,
                   double q_k) {
    (void)t;
    const double d = (v + eos.delta1 * mp.b) * (v + eos.delta2 * mp.b);
    return -2.0 * lambda_k * q_k / d;
}

CubicCoeffs volume_cubic(double t, double p, const MixParams& mp, const EosSpec& eos) {
    const double d1 = eos.delta1, d2 = eos.delta2;
    const double b = mp.b, a = mp.a;
    const double rt_p = GAS_CONSTANT * t / p;
    CubicCoeffs c;
    c.rho2 = (d1 + d2 - 1.0) * b - rt_p;
    c.rho1 = d1 * d2 * b * b + a / p - (d1 + d2) * b * (b + rt_p);
    c.rho0 = -a * b / p - (b + rt_p) * d1 * d2 * b * b;
    return c;
}

int solve_cubic_real(double c2, double c1, double c0, double roots[3]) {
    // depressed form: x = y - c2/3, y^3 + p y + q = 0
    const double shift = c2 / 3.0;
    const double p = c1 - c2 * c2 / 3.0;
    const double q = c0 + 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0;
    const double disc = q * q / 4.0 + p * p * p / 27.0;

    int count = 0;
    if (disc > 0.0) {
        const double s = std::sqrt(disc);
        const double u = std::cbrt(-q / 2.0 + s);
        const double w = std::cbrt(-q / 2.0 - s);
        roots[count++] = u + w - shift;
    } else if (p == 0.0 && q == 0.0) {
        roots[count++] = -shift;
    } else {
        // three real roots, trigonometric form
        const double m = 2.0 * std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (p * m);
        arg = std::clamp(arg, -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            roots[count++] = m * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) - shift;
    }
    // one Newton polish per root against cancellation
    for (int i = 0; i < count; ++i) {
        const double x = roots[i];
        const double f = ((x + c2) * x + c1) * x + c0;
        const double df = (3.0 * x + 2.0 * c2) * x + c1;
        if (df != 0.0) {
            const double step = f / df;
            if (std::isfinite(step) && std::abs(step) < 0.5 * (std::abs(x) + 1e-300))
                roots[i] = x - step;
        }
    }
    std::sort(roots, roots + count);
    return count;
}

double gibbs_root_score(double t, double v, const MixParams& mp, const EosSpec& eos) {
    const double d1 = eos.delta1, d2 = eos.delta2;
    const double a = mp.a, b = mp.b;
    const double rt = GAS_CONSTANT * t;
    const double d = (v + d1 * b) * (v + d2 * b);
    double score = std::log(v - b) + a * v / (rt * d);
    if (b > 0.0) {
        score += -b / (v - b) + a * std::log((v + d1 * b) / (v + d2 * b)) / ((d1 - d2) * b * rt);
    }
    return score;
}

double solve_cubic_volume(double t, double p, const MixParams& mp, const EosSpec& eos) {
    if (!(p > 0.0) || !(t > 0.0))
        throw std::domain_error("solve_cubic_volume: T and p must be positive");
    const CubicCoeffs c = volume_cubic(t, p, mp, eos);
    double roots[3];
    const int nr = solve_cubic_real(c.rho2, c.rho1, c.rho0, roots);

    const double vmin = mp.b * (1.0 + 1e-12);
    double best = -1.0;
    double best_score = 0.0;
    for (int i = 0; i < nr; ++i) {
        const double v = roots[i];
        if (!(v > vmin)) continue;
        const double score = gibbs_root_score(t, v, mp, eos);
        if (best < 0.0 || score > best_score) {
            best = v;
            best_score = score;
        }
    }
    if (best < 0.0)
        throw NoVolumeRootError("solve_cubic_volume: no physical root above the co-volume");
    return best;
}

std::vector<double> ln_psi_direct(double t, double v, const MixParams& mp, const PureParams& pp,
                                  const EosSpec& eos) {
    if (!(v > mp.b)) throw std::domain_error("ln_psi_direct: v must exceed the co-volume");
    const double d1 = eos.delta1, d2 = eos.delta2;
    const double a = mp.a, b = mp.b;
    const double rt = GAS_CONSTANT * t;
    const double vmb = v - mp.b;
    const double d = (v + d1 * b) * (v + d2 * b);
    const double lbase = std::log(vmb);

    const std::size_t n = pp.b_hat.size();
    std::vector<double> out(n);
    if (b == 0.0) {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = lbase + 2.0 * mp.g[i] / (rt * v);
        return out;
    }
    const double lratio = std::log((v + d1 * b) / (v + d2 * b));
    for (std::size_t i = 0; i < n; ++i) {
        const double bh = pp.b_hat[i];
        out[i] = lbase - bh / vmb + a * v * bh / (b * rt * d) -
                 (a * bh - 2.0 * b * mp.g[i]) / ((d1 - d2) * b * b * rt) * lratio;
    }
    return out;
}

}  // namespace vleq
