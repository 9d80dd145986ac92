#ifndef VLEQ_NONISOTHERMAL_HPP
#define VLEQ_NONISOTHERMAL_HPP

#include <optional>
#include <span>

#include "vleq/caloric.hpp"
#include "vleq/flash.hpp"

namespace vleq {

struct NestedConfig {
    double eps_r = 1e-10;        // relative tolerance on the caloric residual
    int max_outer = 50;
    int max_halvings = 20;       // line-search backtracking limit
    double t_min = 150.0;        // bracketing window for the T0 estimate
    double t_max = 1500.0;
    FlashConfig inner;
};

struct NestedResult {
    FlashResult flash;                    // inner state at the converged temperature
    CaloricState mixture;                 // theta-weighted caloric state
    int outer_iterations = 0;
    std::vector<double> t_history;        // accepted temperatures
    std::vector<double> residual_history; // |target - value| / |target|
    bool t0_bracket_failed = false;       // fell back to 300 K
    bool converged = false;
};

enum class CaloricTarget { Enthalpy, InternalEnergy };

// Single-phase temperature estimate: solves u(T, v, z) = u_hat or
// h(T, p, z) = h_hat over [t_min, t_max] with a bracketed Newton.
// Falls back to 300 K (flagged) when the window does not bracket.
double estimate_temperature(const Mixture& mix, CaloricTarget target, double target_value,
                            double p_or_v, const NestedConfig& cfg = {},
                            bool* bracket_failed = nullptr);

// HP flash: nested temperature Newton around PT flashes, c_p as Jacobian.
NestedResult flash_hp(const Mixture& mix, double h_hat, double p,
                      std::optional<double> t0 = std::nullopt, const NestedConfig& cfg = {});

// UV flash: nested temperature Newton around VT flashes, c_v as Jacobian.
NestedResult flash_uv(const Mixture& mix, double u_hat, double v_hat,
                      std::optional<double> t0 = std::nullopt, const NestedConfig& cfg = {});

// Caloric state of a flash result (two-phase weighted, or the single phase).
CaloricState result_caloric(const Mixture& mix, const FlashResult& res);

}  // namespace vleq

#endif
