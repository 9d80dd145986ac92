#ifndef VLEQ_LINALG_HPP
#define VLEQ_LINALG_HPP

#include <cstddef>
#include <vector>

namespace vleq {

// Dense row-major square matrix, just enough for the small systems used here.
struct SquareMatrix {
    std::size_t n = 0;
    std::vector<double> a;

    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t size) : n(size), a(size * size, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

struct EigenResult {
    std::vector<double> values;       // eigenvalues
    SquareMatrix vectors;             // row k = eigenvector of values[k]
    int sweeps = 0;
};

// Cyclic Jacobi rotations for a symmetric matrix. Eigenvectors are
// normalized, rows of the result; the sign convention makes the
// largest-magnitude entry of each vector positive.
EigenResult jacobi_eigen_symmetric(const SquareMatrix& m);

// In-place Gauss elimination with partial pivoting; solves A x = rhs.
// Throws std::runtime_error when a pivot falls below 1e-14 times the
// row scale (singular system).
std::vector<double> solve_gauss(SquareMatrix a, std::vector<double> rhs);

}  // namespace vleq

#endif
