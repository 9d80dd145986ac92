#ifndef VLEQ_RACHFORD_RICE_HPP
#define VLEQ_RACHFORD_RICE_HPP

#include <span>
#include <vector>

namespace vleq {

enum class RRStatus {
    Ok,           // root found in the admissible window (c_1, c_n)
    SinglePhase,  // no K above and below 1: no sign change exists
    Degenerate,   // all K = 1
    MaxIter,
};

struct RRResult {
    RRStatus status = RRStatus::MaxIter;
    double theta = 0.0;
    int iterations = 0;
    double residual = 0.0;             // final Rachford-Rice residual
    std::vector<double> sigma_trace;   // Newton iterates of the transformed variable
};

// Rachford-Rice residual sum_i z_i (K_i - 1)/(1 + theta (K_i - 1)).
double rachford_rice_residual(std::span<const double> z_hat, std::span<const double> k,
                              double theta);

// Solves the Rachford-Rice equation by Newton iteration on the convex
// transformed variable sigma = (theta - c_1)/(c_n - theta); monotone in
// sigma on the selected branch. Returns the mathematical root, which can
// lie outside [0,1]; the caller owns the phase-stability interpretation.
RRResult solve_rachford_rice(std::span<const double> z_hat, std::span<const double> k,
                             double tol = 1e-14, int max_iter = 50);

// x_i = z_i / (1 + theta (K_i - 1)), y_i = K_i x_i.
// Throws std::domain_error when a denominator is not positive.
void phase_compositions(std::span<const double> z_hat, std::span<const double> k, double theta,
                        std::vector<double>& x, std::vector<double>& y);

}  // namespace vleq

#endif
