#include "greyml/grey.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "greyml/errors.hpp"

namespace greyml::grey {

namespace {

std::size_t theta_len(GreyKind kind, std::size_t n_inputs) {
    switch (kind) {
    case GreyKind::gm11:
    case GreyKind::ngm11k:
    case GreyKind::dgm11:
        return 1;
    case GreyKind::ngm11kc:
    case GreyKind::ndgm:
        return 2;
    case GreyKind::dgm1n:
        return n_inputs + 1;
    }
    throw std::invalid_argument("unknown grey model kind");
}

bool is_multivariate(GreyKind kind) { return kind == GreyKind::dgm1n; }

bool is_continuous(GreyKind kind) {
    return kind == GreyKind::gm11 || kind == GreyKind::ngm11k || kind == GreyKind::ngm11kc;
}

// Ordinary least squares through the normal equations. Near-singular
// systems (all-zero series and similar degeneracies) are reported as
// numerical failures.
Eigen::VectorXd least_squares(const Eigen::MatrixXd& A, const Eigen::VectorXd& y) {
    const Eigen::MatrixXd AtA = A.transpose() * A;
    const Eigen::VectorXd Aty = A.transpose() * y;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(AtA);
    if (ldlt.info() != Eigen::Success) {
        throw NumericalError("fit_classic: normal equations are singular");
    }
    const Eigen::VectorXd d = ldlt.vectorD();
    const double dmax = d.cwiseAbs().maxCoeff();
    if (!(dmax > 0.0) || d.cwiseAbs().minCoeff() <= 1e-13 * dmax) {
        throw NumericalError("fit_classic: normal equations are singular");
    }
    Eigen::VectorXd theta = ldlt.solve(Aty);
    if (!theta.allFinite()) {
        throw NumericalError("fit_classic: least-squares solution is not finite");
    }
    return theta;
}

} // namespace

double continuous_response(double a, const ForcingFn& f, double x0, double t, double step) {
    if (!(t >= 1.0)) {
        throw std::invalid_argument("continuous_response: t must be at least 1");
    }
    if (!(step > 0.0)) {
        throw std::invalid_argument("continuous_response: step must be positive");
    }
    const double span = t - 1.0;
    double integral = 0.0;
    if (span > 0.0) {
        const auto n_sub = static_cast<std::size_t>(std::ceil(span / step - 1e-12));
        const double h = span / static_cast<double>(n_sub);
        auto g = [&](double tau) { return std::exp(-a * (t - tau)) * f(tau); };
        double acc = 0.5 * (g(1.0) + g(t));
        for (std::size_t i = 1; i < n_sub; ++i) {
            acc += g(1.0 + h * static_cast<double>(i));
        }
        integral = h * acc;
    }
    return x0 * std::exp(-a * span) + integral;
}

double discrete_response(double alpha, const ForcingFn& f, double x0, std::size_t k) {
    double x = x0;
    for (std::size_t j = 1; j <= k; ++j) {
        x = alpha * x + f(static_cast<double>(j + 1));
    }
    return x;
}

GreyParams fit_classic(GreyKind kind, const series::RawSeries& output,
                       const std::vector<series::RawSeries>& inputs) {
    series::require_finite(output, "fit_classic");
    const std::size_t n = output.size();
    if (n < 4) {
        throw std::invalid_argument("fit_classic: need at least 4 output values");
    }
    if (is_multivariate(kind)) {
        if (inputs.empty()) {
            throw std::invalid_argument("fit_classic: this model needs at least one input series");
        }
        for (const auto& in : inputs) {
            series::require_finite(in, "fit_classic");
            if (in.size() != n) {
                throw std::invalid_argument("fit_classic: input length differs from output length");
            }
        }
    } else if (!inputs.empty()) {
        throw std::invalid_argument("fit_classic: univariate model given input series");
    }

    const series::CumSeries x1 = series::ago(output);

    GreyParams params;
    params.kind = kind;
    params.n_inputs = inputs.size();

    switch (kind) {
    case GreyKind::gm11:
    case GreyKind::ngm11k:
    case GreyKind::ngm11kc: {
        // x(0)(k) + a z(1)(k) = f(theta; k), k = 2..n
        const series::BackgroundSeries z = series::background(x1);
        const auto rows = static_cast<Eigen::Index>(n - 1);
        const Eigen::Index cols = kind == GreyKind::ngm11kc ? 3 : 2;
        Eigen::MatrixXd A(rows, cols);
        Eigen::VectorXd y(rows);
        for (std::size_t i = 0; i < n - 1; ++i) {
            const auto r = static_cast<Eigen::Index>(i);
            const double kk = static_cast<double>(i + 2);
            A(r, 0) = -z.values[i];
            if (kind == GreyKind::gm11) {
                A(r, 1) = 1.0;
            } else {
                A(r, 1) = kk;
                if (kind == GreyKind::ngm11kc) {
                    A(r, 2) = 1.0;
                }
            }
            y[r] = output.values[i + 1];
        }
        const Eigen::VectorXd sol = least_squares(A, y);
        params.a_or_alpha = sol[0];
        params.theta.assign(sol.data() + 1, sol.data() + sol.size());
        break;
    }
    case GreyKind::dgm11:
    case GreyKind::ndgm: {
        // x(1)(k+1) = alpha x(1)(k) + f(theta; k), k = 1..n-1
        const auto rows = static_cast<Eigen::Index>(n - 1);
        const Eigen::Index cols = kind == GreyKind::ndgm ? 3 : 2;
        Eigen::MatrixXd A(rows, cols);
        Eigen::VectorXd y(rows);
        for (std::size_t i = 0; i < n - 1; ++i) {
            const auto r = static_cast<Eigen::Index>(i);
            A(r, 0) = x1.values[i];
            if (kind == GreyKind::dgm11) {
                A(r, 1) = 1.0;
            } else {
                A(r, 1) = static_cast<double>(i + 1);
                A(r, 2) = 1.0;
            }
            y[r] = x1.values[i + 1];
        }
        const Eigen::VectorXd sol = least_squares(A, y);
        params.a_or_alpha = sol[0];
        params.theta.assign(sol.data() + 1, sol.data() + sol.size());
        break;
    }
    case GreyKind::dgm1n: {
        // x1(1)(k+1) = beta1 x1(1)(k) + sum_i betai xi(1)(k) + mu
        const std::size_t p = inputs.size();
        std::vector<series::CumSeries> in1;
        in1.reserve(p);
        for (const auto& in : inputs) {
            in1.push_back(series::ago(in));
        }
        const auto rows = static_cast<Eigen::Index>(n - 1);
        const auto cols = static_cast<Eigen::Index>(p + 2);
        Eigen::MatrixXd A(rows, cols);
        Eigen::VectorXd y(rows);
        for (std::size_t i = 0; i < n - 1; ++i) {
            const auto r = static_cast<Eigen::Index>(i);
            A(r, 0) = x1.values[i];
            for (std::size_t j = 0; j < p; ++j) {
                A(r, static_cast<Eigen::Index>(j + 1)) = in1[j].values[i];
            }
            A(r, cols - 1) = 1.0;
            y[r] = x1.values[i + 1];
        }
        const Eigen::VectorXd sol = least_squares(A, y);
        params.a_or_alpha = sol[0];
        params.theta.assign(sol.data() + 1, sol.data() + sol.size());
        break;
    }
    }
    return params;
}

series::RawSeries forecast_classic(const GreyParams& params, const series::RawSeries& output,
                                   const std::vector<series::RawSeries>& inputs_extended,
                                   std::size_t horizon) {
    series::require_finite(output, "forecast_classic");
    if (params.theta.size() != theta_len(params.kind, params.n_inputs)) {
        throw std::invalid_argument("forecast_classic: theta length does not match the model kind");
    }
    const std::size_t n = output.size();
    const std::size_t total = n + horizon;
    const double x0 = output.values.front();

    ForcingFn f;
    switch (params.kind) {
    case GreyKind::gm11:
    case GreyKind::dgm11:
        f = [b = params.theta[0]](double) { return b; };
        break;
    case GreyKind::ngm11k:
        f = [b = params.theta[0]](double t) { return b * t; };
        break;
    case GreyKind::ngm11kc:
        f = [b = params.theta[0], c = params.theta[1]](double t) { return b * t + c; };
        break;
    case GreyKind::ndgm:
        // Step tau applies the forcing of transition k = tau - 1.
        f = [b1 = params.theta[0], b2 = params.theta[1]](double tau) {
            return b1 * (tau - 1.0) + b2;
        };
        break;
    case GreyKind::dgm1n: {
        if (inputs_extended.size() != params.n_inputs) {
            throw std::invalid_argument("forecast_classic: input series count does not match the model");
        }
        auto in1 = std::make_shared<std::vector<series::CumSeries>>();
        in1->reserve(inputs_extended.size());
        for (const auto& in : inputs_extended) {
            series::require_finite(in, "forecast_classic");
            if (in.size() + 1 < total) {
                throw std::invalid_argument(
                    "forecast_classic: input series too short; need " +
                    std::to_string(total - 1) + " values to reach horizon " +
                    std::to_string(horizon));
            }
            in1->push_back(series::ago(in));
        }
        f = [in1, theta = params.theta](double tau) {
            const auto k = static_cast<std::size_t>(tau) - 2; // cumulative index k = tau - 1
            double acc = theta.back();
            for (std::size_t j = 0; j < in1->size(); ++j) {
                acc += theta[j] * (*in1)[j].values[k];
            }
            return acc;
        };
        break;
    }
    }

    series::CumSeries hat1;
    hat1.values.reserve(total);
    if (is_continuous(params.kind)) {
        for (std::size_t t = 1; t <= total; ++t) {
            hat1.values.push_back(
                continuous_response(params.a_or_alpha, f, x0, static_cast<double>(t)));
        }
    } else {
        double x = x0;
        hat1.values.push_back(x);
        for (std::size_t j = 1; j < total; ++j) {
            x = params.a_or_alpha * x + f(static_cast<double>(j + 1));
            hat1.values.push_back(x);
        }
    }
    return series::iago(hat1);
}

} // namespace greyml::grey
