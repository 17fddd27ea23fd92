#pragma once

#include <vector>

#include <Eigen/Dense>

#include "greyml/kernel.hpp"
#include "greyml/series.hpp"
#include "greyml/solver.hpp"

namespace greyml::lssvm {

// Training data for the partially linear estimator. Each sample pairs a
// kernel input x(k) with an optional parametric regressor z(k) and a
// target y(k). All x share one dimension; all z share another (which may
// be zero when the model has no linear part).
struct SampleSet {
    std::vector<Eigen::VectorXd> x;
    std::vector<Eigen::VectorXd> z;
    Eigen::VectorXd y;

    std::size_t size() const { return x.size(); }
};

// Fitted estimator. Kernel inputs are min-max scaled before the Gram
// matrix is formed; `inputs` holds the scaled training points and
// `scaler` the transform so predictions can reproduce it. The linear
// regressors are used as given.
struct SemiModel {
    Eigen::VectorXd lambda;
    double b = 0.0;
    Eigen::VectorXd omega1;
    kernel::KernelSpec kernel_spec;
    double C = 1.0;
    std::vector<Eigen::VectorXd> inputs;
    series::ScalerState scaler;
};

// Fit by solving the bordered stationarity system on the augmented Gram
// matrix omega(i,j) = z(i).z(j) + K(x(i), x(j)), then recover the linear
// weights omega1 = sum_k lambda(k) z(k).
SemiModel fit_semi(const SampleSet& samples, const kernel::KernelSpec& spec, double C,
                   solver::SolveMethod method = solver::SolveMethod::direct);

// Point prediction: omega1.z + sum_k lambda(k) K(x(k), x) + b.
double predict_semi(const SemiModel& model, const Eigen::VectorXd& x, const Eigen::VectorXd& z);

// Nonparametric part only: sum_k lambda(k) K(x(k), x).
double phi_hat(const SemiModel& model, const Eigen::VectorXd& x);

} // namespace greyml::lssvm
