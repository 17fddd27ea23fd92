#include "greyml/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "greyml/errors.hpp"

namespace greyml::solver {

namespace {

Eigen::VectorXd solve_cg(const Eigen::MatrixXd& A, const Eigen::VectorXd& rhs, double tol) {
    const Eigen::Index n = A.rows();
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd r = rhs;
    Eigen::VectorXd p = r;
    double rs = r.squaredNorm();
    const double target = tol * rhs.norm();
    const Eigen::Index max_iter = 10 * n;
    for (Eigen::Index it = 0; it < max_iter && std::sqrt(rs) > target; ++it) {
        const Eigen::VectorXd Ap = A * p;
        const double pAp = p.dot(Ap);
        if (!(pAp > 0.0)) {
            throw NumericalError("solve_spd: matrix is not positive definite");
        }
        const double alpha = rs / pAp;
        x += alpha * p;
        r -= alpha * Ap;
        const double rs_next = r.squaredNorm();
        p = r + (rs_next / rs) * p;
        rs = rs_next;
    }
    if (std::sqrt(rs) > target && std::sqrt(rs) > tol) {
        throw NumericalError("solve_spd: conjugate gradient failed to converge");
    }
    return x;
}

} // namespace

Eigen::VectorXd solve_spd(const Eigen::MatrixXd& A, const Eigen::VectorXd& rhs,
                          SolveMethod method, double tol) {
    if (A.rows() != A.cols()) {
        throw std::invalid_argument("solve_spd: matrix is not square");
    }
    if (A.rows() != rhs.size()) {
        throw std::invalid_argument("solve_spd: matrix and rhs sizes disagree");
    }
    if (A.rows() == 0) {
        throw std::invalid_argument("solve_spd: empty system");
    }
    if (method == SolveMethod::cg) {
        return solve_cg(A, rhs, tol);
    }
    Eigen::LLT<Eigen::MatrixXd> llt(A);
    if (llt.info() != Eigen::Success) {
        throw NumericalError("solve_spd: Cholesky factorization failed; matrix is not positive definite");
    }
    return llt.solve(rhs);
}

KktSolution solve_kkt(const Eigen::MatrixXd& omega, const Eigen::VectorXd& y,
                      double C, SolveMethod method) {
    if (omega.rows() != omega.cols()) {
        throw std::invalid_argument("solve_kkt: omega is not square");
    }
    if (omega.rows() != y.size()) {
        throw std::invalid_argument("solve_kkt: omega and y sizes disagree");
    }
    if (omega.rows() == 0) {
        throw std::invalid_argument("solve_kkt: empty system");
    }
    if (!(C > 0.0)) {
        throw std::invalid_argument("solve_kkt: C must be positive");
    }
    const Eigen::Index m = omega.rows();
    Eigen::MatrixXd H = omega;
    H.diagonal().array() += 1.0 / C;

    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(m);
    const Eigen::VectorXd eta = solve_spd(H, ones, method);
    const Eigen::VectorXd nu = solve_spd(H, y, method);
    const double denom = ones.dot(eta);
    if (std::abs(denom) < 1e-300 || !std::isfinite(denom)) {
        throw NumericalError("solve_kkt: degenerate system; 1^T H^{-1} 1 vanished");
    }
    KktSolution sol;
    sol.b = ones.dot(nu) / denom;
    sol.lambda = nu - sol.b * eta;
    return sol;
}

} // namespace greyml::solver
