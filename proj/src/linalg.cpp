#include "vleq/linalg.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace vleq {

namespace {

double off_diagonal_norm(const SquareMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = i + 1; j < m.n; ++j) s += m(i, j) * m(i, j);
    return std::sqrt(2.0 * s);
}

double frobenius_norm(const SquareMatrix& m) {
    double s = 0.0;
    for (double v : m.a) s += v * v;
    return std::sqrt(s);
}

}  // namespace

EigenResult jacobi_eigen_symmetric(const SquareMatrix& input) {
    const std::size_t n = input.n;
    SquareMatrix a = input;
    SquareMatrix v(n);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

    const double tol = 1e-14 * frobenius_norm(a);
    int sweeps = 0;
    while (off_diagonal_norm(a) > tol) {
        if (++sweeps > 100) throw std::runtime_error("jacobi_eigen_symmetric: no convergence");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
                double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k != p && k != q) {
                        const double akp = a(k, p), akq = a(k, q);
                        a(k, p) = akp - s * (akq + tau * akp);
                        a(p, k) = a(k, p);
                        a(k, q) = akq + s * (akp - tau * akq);
                        a(q, k) = a(k, q);
                    }
                    const double vpk = v(p, k), vqk = v(q, k);
                    v(p, k) = vpk - s * (vqk + tau * vpk);
                    v(q, k) = vqk + s * (vpk - tau * vqk);
                }
            }
        }
    }

    EigenResult res;
    res.values.resize(n);
    res.vectors = v;
    res.sweeps = sweeps;
    for (std::size_t i = 0; i < n; ++i) res.values[i] = a(i, i);

    // sign convention: largest-magnitude entry of each eigenvector positive
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t imax = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::abs(res.vectors(k, i)) > std::abs(res.vectors(k, imax))) imax = i;
        if (res.vectors(k, imax) < 0.0)
            for (std::size_t i = 0; i < n; ++i) res.vectors(k, i) = -res.vectors(k, i);
    }
    return res;
}

std::vector<double> solve_gauss(SquareMatrix a, std::vector<double> rhs) {
    const std::size_t n = a.n;
    if (rhs.size() != n) throw std::invalid_argument("solve_gauss: size mismatch");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(piv, c));
            std::swap(rhs[col], rhs[piv]);
        }
        double scale = 0.0;
        for (std::size_t c = col; c < n; ++c) scale = std::max(scale, std::abs(a(col, c)));
        if (std::abs(a(col, col)) <= 1e-14 * scale || a(col, col) == 0.0)
            throw std::runtime_error("solve_gauss: singular matrix");
        const double inv = 1.0 / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a(r, col) * inv;
            if (f == 0.0) continue;
            for (std::size_t c = col + 1; c < n; ++c) a(r, c) -= f * a(col, c);
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

}  // namespace vleq
