#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "greyml/lssvm.hpp"
#include "oracles.hpp"

using namespace greyml;

namespace {

Eigen::VectorXd vec1(double v) {
    Eigen::VectorXd x(1);
    x << v;
    return x;
}

lssvm::SampleSet line_samples() {
    // y = 3x + 1 on x = 0..3, no linear part
    lssvm::SampleSet s;
    s.y.resize(4);
    for (int k = 0; k < 4; ++k) {
        s.x.push_back(vec1(static_cast<double>(k)));
        s.z.emplace_back(0);
        s.y[k] = 3.0 * k + 1.0;
    }
    return s;
}

} // namespace

TEST_CASE("nonparametric fit interpolates a line at large C") {
    const lssvm::SemiModel model = lssvm::fit_semi(line_samples(), kernel::make_linear(), 1e10);
    const Eigen::VectorXd none(0);
    for (int k = 0; k < 4; ++k) {
        const double pred = lssvm::predict_semi(model, vec1(static_cast<double>(k)), none);
        CHECK(pred == doctest::Approx(3.0 * k + 1.0).epsilon(1e-4));
    }
    CHECK(lssvm::predict_semi(model, vec1(4.0), none) == doctest::Approx(13.0).epsilon(1e-3));
}

TEST_CASE("constant targets give a bias-only model") {
    lssvm::SampleSet s;
    s.y = Eigen::VectorXd::Constant(5, 5.0);
    for (int k = 0; k < 5; ++k) {
        s.x.push_back(vec1(static_cast<double>(k)));
        s.z.emplace_back(0);
    }
    const lssvm::SemiModel model = lssvm::fit_semi(s, kernel::make_gaussian(1.0), 100.0);
    CHECK(model.b == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(model.lambda.cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("pure linear part is recovered through omega1") {
    // y = 2 z with z(k) = k; the kernel part has nothing left to explain.
    lssvm::SampleSet s;
    const int m = 10;
    s.y.resize(m);
    for (int k = 1; k <= m; ++k) {
        s.x.push_back(vec1(static_cast<double>(k)));
        s.z.push_back(vec1(static_cast<double>(k)));
        s.y[k - 1] = 2.0 * k;
    }
    const lssvm::SemiModel model = lssvm::fit_semi(s, kernel::make_gaussian(1.0), 1e8);
    REQUIRE(model.omega1.size() == 1);
    CHECK(std::abs(model.omega1[0] - 2.0) < 0.05);
    double worst = 0.0;
    for (int k = 1; k <= m; ++k) {
        const double pred =
            lssvm::predict_semi(model, vec1(static_cast<double>(k)), vec1(static_cast<double>(k)));
        worst = std::max(worst, std::abs(pred - 2.0 * k) / (2.0 * k));
    }
    CHECK(worst * 100.0 < 0.1); // training MAPE under 0.1 percent
}

TEST_CASE("fit matches the dense bordered-system oracle") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    const int m = 7;
    lssvm::SampleSet s;
    s.y.resize(m);
    for (int k = 0; k < m; ++k) {
        s.x.push_back(vec1(dist(rng)));
        s.z.push_back(vec1(dist(rng)));
        s.y[k] = dist(rng);
    }
    const kernel::KernelSpec spec = kernel::make_gaussian(0.8);
    const double C = 10.0;
    const lssvm::SemiModel model = lssvm::fit_semi(s, spec, C);

    // Rebuild the augmented Gram the fit used: scaled kernel inputs plus
    // the plain z outer products.
    const series::ScalerState scaler = series::fit_scaler(s.x);
    std::vector<Eigen::VectorXd> scaled;
    for (const auto& xk : s.x) {
        scaled.push_back(series::apply_scaler(scaler, xk));
    }
    Eigen::MatrixXd omega = kernel::gram(spec, scaled);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            omega(i, j) += s.z[static_cast<std::size_t>(i)].dot(s.z[static_cast<std::size_t>(j)]);
        }
    }
    const oracles::BorderedSolution ref = oracles::bordered_solve(omega, s.y, C);
    CHECK(std::abs(model.b - ref.b) <= 1e-8);
    CHECK((model.lambda - ref.lambda).cwiseAbs().maxCoeff() <= 1e-8);
    double omega1 = 0.0;
    for (int k = 0; k < m; ++k) {
        omega1 += ref.lambda[k] * s.z[static_cast<std::size_t>(k)][0];
    }
    CHECK(model.omega1[0] == doctest::Approx(omega1).epsilon(1e-8));
}

TEST_CASE("prediction formula spelled out by hand") {
    // Multipliers from the 2-sample identity-Gram system: lambda = [-0.5, 0.5], b = 2.
    lssvm::SemiModel model;
    model.lambda = Eigen::VectorXd(2);
    model.lambda << -0.5, 0.5;
    model.b = 2.0;
    model.omega1 = Eigen::VectorXd(0);
    model.kernel_spec = kernel::make_gaussian(1.0);
    model.C = 1.0;
    model.inputs = {vec1(0.0), vec1(1.0)};
    model.scaler.lo = {0.0};
    model.scaler.hi = {1.0};

    const Eigen::VectorXd none(0);
    const double expected = -0.5 * 1.0 + 0.5 * std::exp(-0.5) + 2.0;
    CHECK(lssvm::predict_semi(model, vec1(0.0), none) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("phi_hat is the kernel sum alone") {
    lssvm::SemiModel model;
    model.lambda = Eigen::VectorXd::Zero(3);
    model.b = 7.0;
    model.omega1 = Eigen::VectorXd(0);
    model.kernel_spec = kernel::make_gaussian(1.0);
    model.inputs = {vec1(0.0), vec1(0.5), vec1(1.0)};
    model.scaler.lo = {0.0};
    model.scaler.hi = {1.0};
    CHECK(lssvm::phi_hat(model, vec1(0.3)) == doctest::Approx(0.0));

    model.lambda[0] = 1.0;
    CHECK(lssvm::phi_hat(model, vec1(0.0)) == doctest::Approx(1.0));
}

TEST_CASE("predict decomposes into linear part, kernel part and bias") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    lssvm::SampleSet s;
    const int m = 8;
    s.y.resize(m);
    for (int k = 0; k < m; ++k) {
        Eigen::VectorXd x(2);
        x << dist(rng), dist(rng);
        s.x.push_back(x);
        s.z.push_back(vec1(dist(rng)));
        s.y[k] = dist(rng);
    }
    const lssvm::SemiModel model = lssvm::fit_semi(s, kernel::make_gaussian(1.2), 50.0);
    for (int trial = 0; trial < 100; ++trial) {
        Eigen::VectorXd x(2);
        x << dist(rng), dist(rng);
        const Eigen::VectorXd z = vec1(dist(rng));
        const double whole = lssvm::predict_semi(model, x, z);
        const double parts = model.omega1.dot(z) + lssvm::phi_hat(model, x) + model.b;
        CHECK(whole == doctest::Approx(parts).epsilon(1e-12));
    }
}

TEST_CASE("training residuals shrink as C grows") {
    std::mt19937 rng(47);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    lssvm::SampleSet s;
    const int m = 10;
    s.y.resize(m);
    for (int k = 0; k < m; ++k) {
        s.x.push_back(vec1(static_cast<double>(k)));
        s.z.emplace_back(0);
        s.y[k] = std::sin(0.6 * k) + 0.1 * dist(rng);
    }
    const Eigen::VectorXd none(0);
    double prev = -1.0;
    for (double C : {1e2, 1e4, 1e8}) {
        const lssvm::SemiModel model = lssvm::fit_semi(s, kernel::make_gaussian(1.0), C);
        double worst = 0.0;
        for (int k = 0; k < m; ++k) {
            worst = std::max(worst,
                             std::abs(lssvm::predict_semi(model, s.x[static_cast<std::size_t>(k)],
                                                          none) -
                                      s.y[k]));
        }
        if (prev >= 0.0) {
            CHECK(worst <= prev + 1e-9);
        }
        prev = worst;
    }
}

TEST_CASE("training residual equals lambda over C") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::uniform_real_distribution<double> cdist(1.0, 1e4);
    for (int trial = 0; trial < 10; ++trial) {
        lssvm::SampleSet s;
        const int m = 6;
        s.y.resize(m);
        for (int k = 0; k < m; ++k) {
            s.x.push_back(vec1(dist(rng)));
            s.z.push_back(vec1(dist(rng)));
            s.y[k] = dist(rng);
        }
        const double C = cdist(rng);
        const lssvm::SemiModel model = lssvm::fit_semi(s, kernel::make_gaussian(0.9), C);
        for (int k = 0; k < m; ++k) {
            const double pred = lssvm::predict_semi(model, s.x[static_cast<std::size_t>(k)],
                                                    s.z[static_cast<std::size_t>(k)]);
            const double resid = s.y[k] - pred;
            CHECK(resid == doctest::Approx(model.lambda[k] / C)
                               .epsilon(1e-7)
                               .scale(std::max(1.0, std::abs(s.y[k]))));
        }
    }
}

TEST_CASE("identically zero z reduces to the nonparametric path") {
    lssvm::SampleSet with_z = line_samples();
    for (auto& z : with_z.z) {
        z = vec1(0.0);
    }
    const lssvm::SampleSet without_z = line_samples();
    const kernel::KernelSpec spec = kernel::make_gaussian(1.0);
    const lssvm::SemiModel a = lssvm::fit_semi(with_z, spec, 100.0);
    const lssvm::SemiModel b = lssvm::fit_semi(without_z, spec, 100.0);
    CHECK(a.b == b.b);
    CHECK((a.lambda - b.lambda).cwiseAbs().maxCoeff() == 0.0);
    REQUIRE(a.omega1.size() == 1);
    CHECK(a.omega1[0] == 0.0);
}

TEST_CASE("fit validates the sample set") {
    lssvm::SampleSet s = line_samples();
    const kernel::KernelSpec spec = kernel::make_gaussian(1.0);

    lssvm::SampleSet tiny;
    tiny.x.push_back(vec1(1.0));
    tiny.z.emplace_back(0);
    tiny.y = Eigen::VectorXd::Ones(1);
    CHECK_THROWS_AS(lssvm::fit_semi(tiny, spec, 1.0), std::invalid_argument);

    CHECK_THROWS_AS(lssvm::fit_semi(s, spec, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(lssvm::fit_semi(s, spec, -5.0), std::invalid_argument);

    lssvm::SampleSet ragged = line_samples();
    Eigen::VectorXd wide(2);
    wide << 1, 2;
    ragged.x[2] = wide;
    CHECK_THROWS_AS(lssvm::fit_semi(ragged, spec, 1.0), std::invalid_argument);

    lssvm::SampleSet bad_y = line_samples();
    bad_y.y[1] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(lssvm::fit_semi(bad_y, spec, 1.0), std::invalid_argument);

    const lssvm::SemiModel model = lssvm::fit_semi(s, spec, 1.0);
    CHECK_THROWS_AS(lssvm::predict_semi(model, vec1(1.0), vec1(1.0)), std::invalid_argument);
}
