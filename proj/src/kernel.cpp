#include "greyml/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace greyml::kernel {

KernelSpec make_gaussian(double sigma2) {
    if (!(sigma2 > 0.0)) {
        throw std::invalid_argument("make_gaussian: sigma2 must be positive");
    }
    KernelSpec s;
    s.kind = KernelKind::gaussian;
    s.sigma2 = sigma2;
    return s;
}

KernelSpec make_polynomial(int degree, double offset) {
    if (degree < 1) {
        throw std::invalid_argument("make_polynomial: degree must be at least 1");
    }
    if (offset < 0.0) {
        throw std::invalid_argument("make_polynomial: offset must be nonnegative");
    }
    KernelSpec s;
    s.kind = KernelKind::polynomial;
    s.degree = degree;
    s.offset = offset;
    return s;
}

KernelSpec make_linear() {
    KernelSpec s;
    s.kind = KernelKind::linear;
    return s;
}

double kernel_eval(const KernelSpec& spec, const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("kernel_eval: vectors differ in dimension");
    }
    if (u.size() == 0) {
        throw std::invalid_argument("kernel_eval: vectors are empty");
    }
    switch (spec.kind) {
    case KernelKind::gaussian: {
        if (!(spec.sigma2 > 0.0)) {
            throw std::invalid_argument("kernel_eval: sigma2 must be positive");
        }
        const double d2 = (u - v).squaredNorm();
        return std::exp(-d2 / (2.0 * spec.sigma2));
    }
    case KernelKind::polynomial: {
        if (spec.degree < 1) {
            throw std::invalid_argument("kernel_eval: degree must be at least 1");
        }
        return std::pow(u.dot(v) + spec.offset, spec.degree);
    }
    case KernelKind::linear:
        return u.dot(v);
    }
    throw std::invalid_argument("kernel_eval: unknown kernel kind");
}

Eigen::MatrixXd gram(const KernelSpec& spec, const std::vector<Eigen::VectorXd>& x) {
    const auto m = static_cast<Eigen::Index>(x.size());
    if (m == 0) {
        throw std::invalid_argument("gram: no samples");
    }
    Eigen::MatrixXd g(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = i; j < m; ++j) {
            const double v = kernel_eval(spec, x[static_cast<std::size_t>(i)],
                                         x[static_cast<std::size_t>(j)]);
            g(i, j) = v;
            g(j, i) = v;
        }
    }
    return g;
}

Eigen::MatrixXd cross_gram(const KernelSpec& spec,
                           const std::vector<Eigen::VectorXd>& rows,
                           const std::vector<Eigen::VectorXd>& cols) {
    if (rows.empty() || cols.empty()) {
        throw std::invalid_argument("cross_gram: empty sample list");
    }
    Eigen::MatrixXd g(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                kernel_eval(spec, rows[i], cols[j]);
        }
    }
    return g;
}

} // namespace greyml::kernel
