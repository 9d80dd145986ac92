#ifndef VLEQ_FLASH_HPP
#define VLEQ_FLASH_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vleq/cubic_eos.hpp"
#include "vleq/linalg.hpp"
#include "vleq/rachford_rice.hpp"
#include "vleq/reduction.hpp"
#include "vleq/types.hpp"

namespace vleq {

struct PhaseState {
    std::vector<double> z;  // phase composition
    double v = 0.0;         // molar volume [m^3/mol]
    double t = 0.0;         // [K]
    std::vector<double> q;  // reduced parameters
    double a = 0.0;         // energy parameter
    double b = 0.0;         // co-volume
};

enum class FlashStatus { TwoPhase, SinglePhase, Failed };

struct FlashResult {
    FlashStatus status = FlashStatus::Failed;
    double theta = 0.0;
    std::vector<double> x, y, k;
    double v_liq = 0.0, v_vap = 0.0;
    double p = 0.0, t = 0.0;
    int ssi_iterations = 0;
    int newton_iterations = 0;
    std::vector<double> residual_history;  // ||d lnK||_2 per accepted iteration
    bool vapor_like = false;               // single-phase classification
    std::string message;

    bool converged() const { return status != FlashStatus::Failed; }
};

enum class FlashKind { PT, VT };

struct FlashSpec {
    FlashKind kind = FlashKind::PT;
    double t = 0.0;
    double p = 0.0;      // PT input / VT output
    double v_hat = 0.0;  // VT input

    static FlashSpec pt(double t, double p) { return {FlashKind::PT, t, p, 0.0}; }
    static FlashSpec vt(double t, double v_hat) { return {FlashKind::VT, t, 0.0, v_hat}; }
};

struct FlashConfig {
    double k_tol = 1e-10;        // Newton stop on ||ln K_new - ln K_old||
    double ssi_tol = 1e-2;       // SSI switch threshold on the same norm
    int max_ssi = 1;             // SSI passes before Newton
    int max_newton = 50;
    int max_step_halvings = 20;
    double trivial_k_tol = 1e-8;  // ||K-1||_inf below this = trivial solution
    double rr_tol = 1e-14;
    bool vt_eos_pressure_init = false;  // EoS pressure with 1 kPa floor for blind VT starts
    double vt_pressure_floor = 1e3;     // [Pa]
};

// Wilson correlation K_i = (p_ci/p) exp[5.373 (1+omega_i)(1 - T_ci/T)].
std::vector<double> wilson_k(const Mixture& mix, double t, double p);

// Blind VT pressure estimate: geometric mean of the Wilson/Raoult dew- and
// bubble-point pressures of the feed. v_hat is accepted for signature
// uniformity only.
double estimate_pressure_vt(const Mixture& mix, double t, double v_hat = 0.0);

// Quintic in v_L obtained by eliminating v_V from the pressure equality
// through the volume constraint.
struct QuinticCoeffs {
    double alpha_liq[5] = {};
    double alpha_vap[5] = {};
    double varsigma[6] = {};  // ascending powers of v_L

    double eval(double v_liq) const;
    double eval_scale(double v_liq) const;  // max |varsigma_j v^j|
};

QuinticCoeffs vt_quintic(double theta, double v_hat, const MixParams& liquid,
                         const MixParams& vapor, double t, const EosSpec& eos);

struct VtVolumes {
    bool feasible = false;
    double v_liq = 0.0, v_vap = 0.0;
    QuinticCoeffs quintic;
};

// Solves the VT volume split: v_L from the quintic/pressure equality
// (Newton from just above the liquid co-volume, bisection safeguarded),
// v_V from the volume constraint. Infeasible splits return feasible=false.
// Throws std::domain_error at the theta = 0 or 1 poles.
VtVolumes solve_vt_volumes(double theta, double v_hat, const MixParams& liquid,
                           const MixParams& vapor, double t, const EosSpec& eos);

// One two-phase sub-state: everything Algorithm 1 recomputes per iteration.
struct TwoPhaseState {
    double theta = 0.0;
    std::vector<double> k, x, y;
    PhaseState liquid, vapor;
    double p_liq = 0.0, p_vap = 0.0;
};

enum class SubStateStatus { Ok, SinglePhaseSignal, Infeasible };

struct SubStateResult {
    SubStateStatus status = SubStateStatus::Infeasible;
    TwoPhaseState state;
};

// Steps 1-3 of Algorithm 1 for the current K-factors.
SubStateResult evaluate_two_phase(const Mixture& mix, const ReductionBasis& basis,
                                  std::span<const double> k, const FlashSpec& spec,
                                  const FlashConfig& cfg = {});

// Step 4, successive-substitution branch: principal variables from their
// definitions, h^Delta = h^V - h^L at the freshly solved sub-state.
ReducedVars ssi_step(const Mixture& mix, const ReductionBasis& basis, std::span<const double> k,
                     const FlashSpec& spec, const FlashConfig& cfg = {});

// Step 4, Newton branch: error function and its exact Jacobian at the
// current sub-state.
struct NewtonSystem {
    std::vector<double> error;  // e_alpha = h^V - h^L - h^Delta
    SquareMatrix jacobian;      // d e_alpha / d h^Delta_beta
};

NewtonSystem assemble_newton_system(const Mixture& mix, const ReductionBasis& basis,
                                    const TwoPhaseState& sub, const ReducedVars& h_delta,
                                    const FlashSpec& spec);

FlashResult flash_pt(const Mixture& mix, double t, double p,
                     std::optional<std::span<const double>> k0 = std::nullopt,
                     const FlashConfig& cfg = {});
FlashResult flash_vt(const Mixture& mix, double t, double v_hat,
                     std::optional<std::span<const double>> k0 = std::nullopt,
                     const FlashConfig& cfg = {});

// As above but reusing a prebuilt spectral decomposition (grid sweeps).
FlashResult flash_isothermal(const Mixture& mix, const Spectrum& spectrum, const FlashSpec& spec,
                             std::optional<std::span<const double>> k0 = std::nullopt,
                             const FlashConfig& cfg = {});

}  // namespace vleq

#endif
