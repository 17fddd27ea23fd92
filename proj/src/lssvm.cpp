#include "greyml/lssvm.hpp"

#include <cmath>
#include <stdexcept>

namespace greyml::lssvm {

namespace {

void validate(const SampleSet& samples, double C) {
    const std::size_t m = samples.x.size();
    if (m < 2) {
        throw std::invalid_argument("fit_semi: need at least 2 samples");
    }
    if (samples.z.size() != m) {
        throw std::invalid_argument("fit_semi: x and z sample counts disagree");
    }
    if (static_cast<std::size_t>(samples.y.size()) != m) {
        throw std::invalid_argument("fit_semi: x and y sample counts disagree");
    }
    if (!(C > 0.0)) {
        throw std::invalid_argument("fit_semi: C must be positive");
    }
    const Eigen::Index xd = samples.x.front().size();
    const Eigen::Index zd = samples.z.front().size();
    if (xd == 0) {
        throw std::invalid_argument("fit_semi: kernel inputs are empty vectors");
    }
    for (std::size_t k = 0; k < m; ++k) {
        if (samples.x[k].size() != xd) {
            throw std::invalid_argument("fit_semi: kernel inputs differ in dimension");
        }
        if (samples.z[k].size() != zd) {
            throw std::invalid_argument("fit_semi: linear regressors differ in dimension");
        }
        if (!samples.x[k].allFinite() || !samples.z[k].allFinite()) {
            throw std::invalid_argument("fit_semi: sample contains a non-finite value");
        }
    }
    if (!samples.y.allFinite()) {
        throw std::invalid_argument("fit_semi: target contains a non-finite value");
    }
}

} // namespace

SemiModel fit_semi(const SampleSet& samples, const kernel::KernelSpec& spec, double C,
                   solver::SolveMethod method) {
    validate(samples, C);
    const std::size_t m = samples.x.size();

    SemiModel model;
    model.kernel_spec = spec;
    model.C = C;
    model.scaler = series::fit_scaler(samples.x);
    model.inputs.reserve(m);
    for (const auto& xk : samples.x) {
        model.inputs.push_back(series::apply_scaler(model.scaler, xk));
    }

    Eigen::MatrixXd omega = kernel::gram(spec, model.inputs);
    const Eigen::Index zd = samples.z.front().size();
    if (zd > 0) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                const double dot = samples.z[i].dot(samples.z[j]);
                omega(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += dot;
                if (i != j) {
                    omega(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += dot;
                }
            }
        }
    }

    const solver::KktSolution sol = solver::solve_kkt(omega, samples.y, C, method);
    model.lambda = sol.lambda;
    model.b = sol.b;
    model.omega1 = Eigen::VectorXd::Zero(zd);
    for (std::size_t k = 0; k < m; ++k) {
        model.omega1 += model.lambda[static_cast<Eigen::Index>(k)] * samples.z[k];
    }
    return model;
}

double phi_hat(const SemiModel& model, const Eigen::VectorXd& x) {
    if (model.inputs.empty()) {
        throw std::invalid_argument("phi_hat: model has no training inputs");
    }
    const Eigen::VectorXd xs = series::apply_scaler(model.scaler, x);
    double acc = 0.0;
    for (std::size_t k = 0; k < model.inputs.size(); ++k) {
        acc += model.lambda[static_cast<Eigen::Index>(k)] *
               kernel::kernel_eval(model.kernel_spec, model.inputs[k], xs);
    }
    return acc;
}

double predict_semi(const SemiModel& model, const Eigen::VectorXd& x, const Eigen::VectorXd& z) {
    if (z.size() != model.omega1.size()) {
        throw std::invalid_argument("predict_semi: regressor dimension differs from training");
    }
    return model.omega1.dot(z) + phi_hat(model, x) + model.b;
}

} // namespace greyml::lssvm
