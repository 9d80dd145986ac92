#ifndef VLEQ_CALORIC_HPP
#define VLEQ_CALORIC_HPP

#include <span>

#include "vleq/reduction.hpp"
#include "vleq/types.hpp"

namespace vleq {

struct CaloricState {
    double u = 0.0;   // [J/mol]
    double h = 0.0;   // [J/mol]
    double cv = 0.0;  // [J/(mol K)]
    double cp = 0.0;  // [J/(mol K)]
};

struct IdealProps {
    double u = 0.0;   // [J/mol], NASA formation-enthalpy reference
    double h = 0.0;
    double cv = 0.0;  // [J/(mol K)]
    double cp = 0.0;
};

// Ideal-gas properties from the component's 9-coefficient record.
// Throws std::domain_error outside the tabulated temperature range.
IdealProps ideal_props(const Component& c, double t);

struct EnergyParamDerivs {
    double da_dt = 0.0;
    double d2a_dt2 = 0.0;
    bool negative_alpha_root = false;  // some 1 + c(w)(1 - sqrt(T/Tc)) < 0 (very high T)
};

// Temperature derivatives of the mixture energy parameter in reduced form.
EnergyParamDerivs energy_param_t_derivs(std::span<const double> z, const ReductionBasis& basis,
                                        const Mixture& mix);

// Departure-corrected caloric state of one phase at (z, v, T) and pressure p.
// The composition is held frozen; cp needs mechanical stability (dp/dv < 0).
CaloricState phase_caloric(const Mixture& mix, const ReductionBasis& basis,
                           std::span<const double> z, double v, double t, double p);

// theta-weighted mixture quantities.
CaloricState mixture_caloric(double theta, const CaloricState& liquid, const CaloricState& vapor);

}  // namespace vleq

#endif
