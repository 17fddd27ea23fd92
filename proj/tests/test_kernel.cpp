#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "greyml/kernel.hpp"

using namespace greyml;

namespace {

Eigen::VectorXd vec1(double v) {
    Eigen::VectorXd x(1);
    x << v;
    return x;
}

} // namespace

TEST_CASE("gaussian kernel values") {
    const kernel::KernelSpec spec = kernel::make_gaussian(2.0);
    const Eigen::VectorXd u = vec1(0.0);
    const Eigen::VectorXd v = vec1(1.0);
    CHECK(kernel::kernel_eval(spec, u, u) == doctest::Approx(1.0));
    // squared distance 1, denominator 2 * 2
    CHECK(kernel::kernel_eval(spec, u, v) == doctest::Approx(std::exp(-0.25)));
    CHECK(kernel::kernel_eval(spec, u, v) == kernel::kernel_eval(spec, v, u));
}

TEST_CASE("polynomial kernel values") {
    const kernel::KernelSpec spec = kernel::make_polynomial(2, 1.0);
    Eigen::VectorXd u(2), v(2);
    u << 1, 2;
    v << 3, 4;
    CHECK(kernel::kernel_eval(spec, u, v) == doctest::Approx(144.0)); // (11 + 1)^2
}

TEST_CASE("linear kernel is the dot product") {
    const kernel::KernelSpec spec = kernel::make_linear();
    Eigen::VectorXd u(3), v(3);
    u << 1, 0, 2;
    v << 3, 5, -1;
    CHECK(kernel::kernel_eval(spec, u, v) == doctest::Approx(1.0));
}

TEST_CASE("kernel spec factories validate parameters") {
    CHECK_THROWS_AS(kernel::make_gaussian(0.0), std::invalid_argument);
    CHECK_THROWS_AS(kernel::make_gaussian(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(kernel::make_polynomial(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(kernel::make_polynomial(2, -1.0), std::invalid_argument);
}

TEST_CASE("kernel_eval validates dimensions") {
    const kernel::KernelSpec spec = kernel::make_linear();
    Eigen::VectorXd u(2), v(3), e(0);
    u << 1, 2;
    v << 1, 2, 3;
    CHECK_THROWS_AS(kernel::kernel_eval(spec, u, v), std::invalid_argument);
    CHECK_THROWS_AS(kernel::kernel_eval(spec, e, e), std::invalid_argument);
}

TEST_CASE("gram matrix is exactly symmetric and matches pairwise evaluation") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<Eigen::VectorXd> pts;
    for (int i = 0; i < 7; ++i) {
        Eigen::VectorXd p(3);
        p << dist(rng), dist(rng), dist(rng);
        pts.push_back(p);
    }
    const kernel::KernelSpec spec = kernel::make_gaussian(1.5);
    const Eigen::MatrixXd g = kernel::gram(spec, pts);
    REQUIRE(g.rows() == 7);
    REQUIRE(g.cols() == 7);
    CHECK(g == g.transpose());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) ==
              doctest::Approx(1.0));
        for (std::size_t j = 0; j < pts.size(); ++j) {
            CHECK(g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) ==
                  doctest::Approx(kernel::kernel_eval(spec, pts[i], pts[j])));
        }
    }
}

TEST_CASE("gaussian gram matrix is positive semidefinite") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Eigen::VectorXd> pts;
    for (int i = 0; i < 10; ++i) {
        Eigen::VectorXd p(2);
        p << dist(rng), dist(rng);
        pts.push_back(p);
    }
    const Eigen::MatrixXd g = kernel::gram(kernel::make_gaussian(0.7), pts);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10);
}

TEST_CASE("cross_gram agrees with kernel_eval and with gram on equal lists") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<Eigen::VectorXd> a, b;
    for (int i = 0; i < 4; ++i) {
        a.push_back(vec1(dist(rng)));
    }
    for (int i = 0; i < 6; ++i) {
        b.push_back(vec1(dist(rng)));
    }
    const kernel::KernelSpec spec = kernel::make_polynomial(3, 0.5);
    const Eigen::MatrixXd r = kernel::cross_gram(spec, a, b);
    REQUIRE(r.rows() == 4);
    REQUIRE(r.cols() == 6);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            CHECK(r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) ==
                  doctest::Approx(kernel::kernel_eval(spec, a[i], b[j])));
        }
    }
    const Eigen::MatrixXd square = kernel::cross_gram(spec, a, a);
    const Eigen::MatrixXd g = kernel::gram(spec, a);
    CHECK((square - g).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("gram and cross_gram reject empty sample lists") {
    const kernel::KernelSpec spec = kernel::make_linear();
    CHECK_THROWS_AS(kernel::gram(spec, {}), std::invalid_argument);
    CHECK_THROWS_AS(kernel::cross_gram(spec, {}, {vec1(1.0)}), std::invalid_argument);
    CHECK_THROWS_AS(kernel::cross_gram(spec, {vec1(1.0)}, {}), std::invalid_argument);
}
