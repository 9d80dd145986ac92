#include "vleq/rachford_rice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vleq {

double rachford_rice_residual(std::span<const double> z_hat, std::span<const double> k,
                              double theta) {
    double s = 0.0;
    for (std::size_t i = 0; i < z_hat.size(); ++i) {
        const double km1 = k[i] - 1.0;
        s += z_hat[i] * km1 / (1.0 + theta * km1);
    }
    return s;
}

RRResult solve_rachford_rice(std::span<const double> z_hat, std::span<const double> k, double tol,
                             int max_iter) {
    const std::size_t n = z_hat.size();
    RRResult res;

    // components with K = 1 contribute nothing and are excluded from the window
    std::size_t imax = n, imin = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (k[i] > 1.0 && (imax == n || k[i] > k[imax])) imax = i;
        if (k[i] < 1.0 && (imin == n || k[i] < k[imin])) imin = i;
    }
    if (imax == n && imin == n) {
        res.status = RRStatus::Degenerate;
        return res;
    }
    if (imax == n || imin == n) {
        res.status = RRStatus::SinglePhase;
        return res;
    }

    const double c1 = 1.0 / (1.0 - k[imax]);  // < 0
    const double cn = 1.0 / (1.0 - k[imin]);  // > 1
    const double span_c = cn - c1;

    // d_i in the transformed variable; K = 1 entries are inert
    std::vector<double> d(n), zc(n);
    std::size_t active = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (k[i] == 1.0) continue;
        const double ci = 1.0 / (1.0 - k[i]);
        d[active] = (c1 - ci) / span_c;
        zc[active] = z_hat[i];
        ++active;
    }

    auto s_value = [&](double sigma, double& sp) {
        double s = 0.0;
        sp = 0.0;
        for (std::size_t i = 0; i < active; ++i) {
            const double den = d[i] + sigma * (1.0 + d[i]);
            const double t = zc[i] / den;
            s += t;
            sp -= t * (1.0 + d[i]) / den;
        }
        return s;
    };

    double sigma = 1.0;
    for (int it = 0; it < max_iter; ++it) {
        res.sigma_trace.push_back(sigma);
        double sp = 0.0;
        const double s = s_value(sigma, sp);
        const double g = (1.0 + sigma) * s;
        double step;
        if (g > 0.0) {
            const double gp = s + (1.0 + sigma) * sp;
            step = g / gp;
        } else if (g < 0.0) {
            const double h = -sigma * (1.0 + sigma) * s;
            const double hp = -(1.0 + 2.0 * sigma) * s - sigma * (1.0 + sigma) * sp;
            step = h / hp;
        } else {
            step = 0.0;
        }
        const double sigma_new = sigma - step;
        res.iterations = it + 1;
        const double theta = (c1 + sigma_new * cn) / (1.0 + sigma_new);
        const double resid = rachford_rice_residual(z_hat, k, theta);
        if (std::abs(resid) <= tol || sigma_new == sigma) {
            res.sigma_trace.push_back(sigma_new);
            res.status = RRStatus::Ok;
            res.theta = theta;
            res.residual = resid;
            return res;
        }
        sigma = sigma_new;
    }
    res.status = RRStatus::MaxIter;
    res.theta = (c1 + sigma * cn) / (1.0 + sigma);
    res.residual = rachford_rice_residual(z_hat, k, res.theta);
    return res;
}

void phase_compositions(std::span<const double> z_hat, std::span<const double> k, double theta,
                        std::vector<double>& x, std::vector<double>& y) {
    const std::size_t n = z_hat.size();
    x.resize(n);
    y.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double den = 1.0 + theta * (k[i] - 1.0);
        if (!(den > 0.0))
            throw std::domain_error("phase_compositions: pole in the material balance");
        x[i] = z_hat[i] / den;
        y[i] = k[i] * x[i];
    }
}

}  // namespace vleq
