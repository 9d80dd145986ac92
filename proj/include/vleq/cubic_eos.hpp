#ifndef VLEQ_CUBIC_EOS_HPP
#define VLEQ_CUBIC_EOS_HPP

#include <span>
#include <vector>

#include "vleq/types.hpp"

namespace vleq {

// Per-component energy and co-volume parameters at a fixed temperature.
struct PureParams {
    std::vector<double> a_hat;  // [Pa m^6 / mol^2]
    std::vector<double> b_hat;  // [m^3 / mol]
    double temperature = 0.0;   // [K] at which a_hat was evaluated
};

// van der Waals mixture parameters for one phase composition.
struct MixParams {
    double a = 0.0;         // [Pa m^6 / mol^2]
    double b = 0.0;         // [m^3 / mol]
    std::vector<double> g;  // g_i = sum_j z_j (1-kappa_ij) sqrt(a_i a_j)
};

struct PressureDerivs {
    double dp_dv = 0.0;
    double dp_dt = 0.0;  // with the supplied da/dT
    double dp_db = 0.0;
};

PureParams pure_params(const std::vector<Component>& components, const EosSpec& eos, double t);

MixParams mixture_params(std::span<const double> z, const PureParams& pp,
                         std::span<const double> kappa_row_major);

// p = RT/(v-b) - a/((v+d1 b)(v+d2 b)); throws std::domain_error for v <= b.
double pressure(double t, double v, const MixParams& mp, const EosSpec& eos);

PressureDerivs pressure_derivs(double t, double v, const MixParams& mp, const EosSpec& eos,
                               double da_dt = 0.0);

// dp/dq_k = -2 lambda_k q_k / ((v+d1 b)(v+d2 b))
double pressure_dq(double t, double v, const MixParams& mp, const EosSpec& eos, double lambda_k,
                   double q_k);

// Monic cubic in v for the EoS at fixed (T, p); roots of
// v^3 + rho2 v^2 + rho1 v + rho0 = 0 are the EoS volumes.
struct CubicCoeffs {
    double rho0 = 0.0, rho1 = 0.0, rho2 = 0.0;
};
CubicCoeffs volume_cubic(double t, double p, const MixParams& mp, const EosSpec& eos);

// All real roots of x^3 + c2 x^2 + c1 x + c0, each polished by one Newton step.
int solve_cubic_real(double c2, double c1, double c0, double roots[3]);

class NoVolumeRootError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// EoS volume at (T, p): the physical root (> b); with several candidates the
// one with the lowest phase Gibbs energy is selected. Throws NoVolumeRootError
// when no real root exceeds the co-volume.
double solve_cubic_volume(double t, double p, const MixParams& mp, const EosSpec& eos);

// Composition-weighted root-selection score: sum_i z_i ln(psi_i) collapses to
// a closed form in (a, b) alone. Larger score = lower Gibbs energy.
double gibbs_root_score(double t, double v, const MixParams& mp, const EosSpec& eos);

// ln(psi_i) evaluated directly from the volume-function expression,
// independent of the reduced-space route.
std::vector<double> ln_psi_direct(double t, double v, const MixParams& mp, const PureParams& pp,
                                  const EosSpec& eos);

}  // namespace vleq

#endif
