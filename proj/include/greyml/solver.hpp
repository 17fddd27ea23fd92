#pragma once

#include <Eigen/Dense>

namespace greyml::solver {

enum class SolveMethod { direct, cg };

// Solution of the stationarity system for an equality-constrained ridge
// problem: multipliers lambda (one per sample) plus the bias b.
struct KktSolution {
    Eigen::VectorXd lambda;
    double b = 0.0;
};

// Solve A x = rhs for symmetric positive definite A. `direct` uses a
// Cholesky factorization; `cg` runs conjugate gradient iterations from a
// zero start until the residual norm falls below tol (relative to the
// rhs norm), capped at 10 * n iterations.
Eigen::VectorXd solve_spd(const Eigen::MatrixXd& A, const Eigen::VectorXd& rhs,
                          SolveMethod method = SolveMethod::direct,
                          double tol = 1e-10);

// Solve the bordered system
//   [ 0   1^T ] [ b      ]   [ 0 ]
//   [ 1  H    ] [ lambda ] = [ y ],  H = omega + I / C,
// by block elimination: eta = H^{-1} 1, nu = H^{-1} y,
// b = (1^T nu) / (1^T eta), lambda = nu - b * eta.
KktSolution solve_kkt(const Eigen::MatrixXd& omega, const Eigen::VectorXd& y,
                      double C, SolveMethod method = SolveMethod::direct);

} // namespace greyml::solver
