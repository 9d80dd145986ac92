#ifndef VLEQ_REDUCTION_HPP
#define VLEQ_REDUCTION_HPP

#include <span>
#include <vector>

#include "vleq/cubic_eos.hpp"
#include "vleq/types.hpp"

namespace vleq {

// Temperature-independent spectral decomposition of beta = 1 - kappa.
// Eigenpairs are sorted by |lambda| descending; m is the smallest count
// whose rank-m reconstruction reaches the truncation tolerance.
struct Spectrum {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<double> lambda;  // all n eigenvalues
    std::vector<double> s;       // n x n, row k = eigenvector k
    double trunc_tol = 0.0;

    double s_at(std::size_t k, std::size_t i) const { return s[k * n + i]; }
};

Spectrum spectral_decompose(std::span<const double> kappa_row_major, std::size_t n,
                            double trunc_tol = 1e-10, bool force_full_rank = false);

// Reduction basis at one temperature: retained eigenpairs, the reduction
// matrix s_hat_ki = s_ki sqrt(a_hat_i), and the co-volumes.
struct ReductionBasis {
    std::size_t n = 0;
    std::size_t m = 0;
    double temperature = 0.0;
    std::vector<double> lambda;  // retained m eigenvalues
    std::vector<double> s;       // m x n eigenvector rows
    std::vector<double> s_hat;   // m x n
    std::vector<double> b_hat;   // n
    EosSpec eos;

    double s_at(std::size_t k, std::size_t i) const { return s[k * n + i]; }
    double s_hat_at(std::size_t k, std::size_t i) const { return s_hat[k * n + i]; }
};

ReductionBasis build_reduction_basis(const Mixture& mix, const Spectrum& spectrum, double t);
ReductionBasis build_reduction_basis(const Mixture& mix, double t, double trunc_tol = 1e-10,
                                     bool force_full_rank = false);

// Principal variables h^Delta (length m+2) of the reduced-space iteration.
struct ReducedVars {
    std::vector<double> h_delta;
};

// q_k = sum_i z_i s_hat_ki
std::vector<double> reduced_parameters(std::span<const double> z, const ReductionBasis& basis);

// a = sum_k lambda_k q_k^2
double energy_param_from_q(std::span<const double> q, std::span<const double> lambda);

// Coefficients h(q, b, v) of ln(psi_i) = sum_k h_k s_hat_ki + h_{m+1} b_hat_i + h_{m+2}.
std::vector<double> h_coefficients(std::span<const double> q, double b, double v, double t,
                                   const ReductionBasis& basis);

std::vector<double> ln_psi(std::span<const double> h, const ReductionBasis& basis);

std::vector<double> ln_k_from_hdelta(const ReducedVars& hd, const ReductionBasis& basis);

// Partial derivatives of h_alpha with respect to (q_k, b, v) at one phase state.
struct HPartials {
    std::size_t m = 0;
    std::vector<double> dh_dq;  // (m+2) x m, row-major: dh_alpha/dq_k
    std::vector<double> dh_db;  // m+2
    std::vector<double> dh_dv;  // m+2
    double at(const std::vector<double>& mat, std::size_t alpha, std::size_t k) const {
        return mat[alpha * m + k];
    }
};
HPartials h_partials(std::span<const double> q, double b, double v, double t,
                     const ReductionBasis& basis);

// Derivatives of K, theta, x, y, q, b with respect to the principal variables.
// Row-major (m+2) columns indexed by beta.
struct CompositionDerivs {
    std::size_t n = 0, mp2 = 0;
    std::vector<double> dk;        // n x (m+2): dK_i/dh^D_beta
    std::vector<double> dtheta;    // m+2
    std::vector<double> dx;        // n x (m+2)
    std::vector<double> dy;        // n x (m+2)
    std::vector<double> dq_liq;    // m x (m+2)
    std::vector<double> dq_vap;    // m x (m+2)
    std::vector<double> db_liq;    // m+2
    std::vector<double> db_vap;    // m+2
};

CompositionDerivs k_theta_composition_derivs(std::span<const double> k, double theta,
                                             std::span<const double> z_hat,
                                             const ReductionBasis& basis);

}  // namespace vleq

#endif
