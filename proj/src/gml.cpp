#include "greyml/gml.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "greyml/errors.hpp"

namespace greyml::gml {

namespace {

void check_training_series(const series::RawSeries& output) {
    series::require_finite(output, "gml fit");
    if (output.size() < 4) {
        throw std::invalid_argument("gml fit: need at least 4 output values");
    }
}

} // namespace

GmlModel fit_kgm1n(const series::RawSeries& output,
                   const std::vector<series::RawSeries>& inputs,
                   const kernel::KernelSpec& spec, double C) {
    check_training_series(output);
    if (inputs.empty()) {
        throw std::invalid_argument("fit_kgm1n: need at least one input series");
    }
    const std::size_t n = output.size();
    const std::size_t p = inputs.size();
    std::vector<series::CumSeries> in1;
    in1.reserve(p);
    for (const auto& in : inputs) {
        series::require_finite(in, "fit_kgm1n");
        if (in.size() != n) {
            throw std::invalid_argument("fit_kgm1n: input length differs from output length");
        }
        in1.push_back(series::ago(in));
    }
    const series::CumSeries x1 = series::ago(output);
    const series::BackgroundSeries z1 = series::background(x1);

    lssvm::SampleSet samples;
    samples.x.reserve(n - 1);
    samples.z.reserve(n - 1);
    samples.y.resize(static_cast<Eigen::Index>(n - 1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        Eigen::VectorXd chi(static_cast<Eigen::Index>(p));
        for (std::size_t j = 0; j < p; ++j) {
            chi[static_cast<Eigen::Index>(j)] = in1[j].values[k];
        }
        samples.x.push_back(std::move(chi));
        Eigen::VectorXd zk(1);
        zk[0] = z1.values[k];
        samples.z.push_back(std::move(zk));
        samples.y[static_cast<Eigen::Index>(k)] = output.values[k + 1];
    }

    GmlModel model;
    model.kind = GmlKind::kgm1n;
    model.engine = lssvm::fit_semi(samples, spec, C);
    model.alpha = -model.engine.omega1[0];
    model.mu = model.engine.b;
    model.train_output = output;
    model.n_inputs = p;
    return model;
}

GmlModel fit_knea(const series::RawSeries& output, const kernel::KernelSpec& spec, double C) {
    check_training_series(output);
    const std::size_t n = output.size();

    lssvm::SampleSet samples;
    samples.x.reserve(n - 1);
    samples.z.reserve(n - 1);
    samples.y.resize(static_cast<Eigen::Index>(n - 1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        Eigen::VectorXd xk(1);
        xk[0] = static_cast<double>(k + 1);
        samples.x.push_back(std::move(xk));
        Eigen::VectorXd zk(1);
        zk[0] = output.values[k];
        samples.z.push_back(std::move(zk));
        samples.y[static_cast<Eigen::Index>(k)] = output.values[k + 1];
    }

    GmlModel model;
    model.kind = GmlKind::knea;
    model.engine = lssvm::fit_semi(samples, spec, C);
    model.alpha = model.engine.omega1[0];
    model.mu = model.engine.b;
    model.train_output = output;
    model.n_inputs = 0;
    return model;
}

GmlModel fit_general_discrete(const series::RawSeries& output,
                              const lssvm::SampleSet& samples,
                              const kernel::KernelSpec& spec, double C,
                              std::size_t n_inputs) {
    check_training_series(output);
    if (samples.z.empty() || samples.z.front().size() != 1) {
        throw std::invalid_argument("fit_general_discrete: linear part must be a scalar");
    }
    GmlModel model;
    model.kind = GmlKind::general_discrete;
    model.engine = lssvm::fit_semi(samples, spec, C);
    model.alpha = model.engine.omega1[0];
    model.mu = model.engine.b;
    model.train_output = output;
    model.n_inputs = n_inputs;
    return model;
}

GmlForecast forecast_gml(const GmlModel& model,
                         const std::vector<series::RawSeries>& inputs_extended,
                         std::size_t horizon) {
    const std::size_t n = model.train_output.size();
    if (n == 0) {
        throw std::invalid_argument("forecast_gml: model has no training output");
    }
    const std::size_t total = n + horizon;
    const std::size_t steps = total - 1; // transitions k = 1..total-1

    // Kernel inputs per transition.
    std::vector<Eigen::VectorXd> xs;
    xs.reserve(steps);
    if (model.kind == GmlKind::knea) {
        for (std::size_t k = 1; k <= steps; ++k) {
            Eigen::VectorXd xk(1);
            xk[0] = static_cast<double>(k);
            xs.push_back(std::move(xk));
        }
    } else {
        if (inputs_extended.size() != model.n_inputs || model.n_inputs == 0) {
            throw std::invalid_argument("forecast_gml: input series count does not match the model");
        }
        std::vector<series::CumSeries> in1;
        in1.reserve(inputs_extended.size());
        for (const auto& in : inputs_extended) {
            series::require_finite(in, "forecast_gml");
            if (in.size() < steps) {
                throw std::invalid_argument(
                    "forecast_gml: input series too short; need " + std::to_string(steps) +
                    " values to reach horizon " + std::to_string(horizon));
            }
            in1.push_back(series::ago(in));
        }
        for (std::size_t k = 0; k < steps; ++k) {
            Eigen::VectorXd chi(static_cast<Eigen::Index>(in1.size()));
            for (std::size_t j = 0; j < in1.size(); ++j) {
                chi[static_cast<Eigen::Index>(j)] = in1[j].values[k];
            }
            xs.push_back(std::move(chi));
        }
    }

    GmlForecast result;
    result.phi.values.reserve(steps);
    for (const auto& xk : xs) {
        result.phi.values.push_back(lssvm::phi_hat(model.engine, xk));
    }

    const double x0 = model.train_output.values.front();
    std::vector<double> trajectory;
    trajectory.reserve(total);
    if (model.kind == GmlKind::knea) {
        double x = x0;
        trajectory.push_back(x);
        for (std::size_t k = 0; k < steps; ++k) {
            x = model.alpha * x + result.phi.values[k] + model.mu;
            trajectory.push_back(x);
        }
    } else if (model.kind == GmlKind::kgm1n) {
        const double denom = 1.0 + 0.5 * model.alpha;
        if (std::abs(denom) < 1e-12) {
            throw NumericalError("forecast_gml: recursion denominator 1 + alpha/2 vanished");
        }
        series::CumSeries hat1;
        hat1.values.reserve(total);
        double x = x0;
        hat1.values.push_back(x);
        for (std::size_t k = 0; k < steps; ++k) {
            x = ((1.0 - 0.5 * model.alpha) * x + result.phi.values[k] + model.mu) / denom;
            hat1.values.push_back(x);
        }
        trajectory = series::iago(hat1).values;
    } else {
        series::CumSeries hat1;
        hat1.values.reserve(total);
        double x = x0;
        hat1.values.push_back(x);
        for (std::size_t k = 0; k < steps; ++k) {
            x = model.alpha * x + result.phi.values[k] + model.mu;
            hat1.values.push_back(x);
        }
        trajectory = series::iago(hat1).values;
    }

    result.fitted.values.assign(trajectory.begin(),
                                trajectory.begin() + static_cast<std::ptrdiff_t>(n));
    result.predicted.values.assign(trajectory.begin() + static_cast<std::ptrdiff_t>(n),
                                   trajectory.end());
    return result;
}

} // namespace greyml::gml
