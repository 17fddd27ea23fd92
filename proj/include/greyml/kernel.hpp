#pragma once

#include <vector>

#include <Eigen/Dense>

namespace greyml::kernel {

enum class KernelKind { gaussian, polynomial, linear };

// Parameter bundle for a kernel function. Only the fields relevant to the
// chosen kind are consulted: sigma2 for gaussian, degree/offset for
// polynomial, none for linear.
struct KernelSpec {
    KernelKind kind = KernelKind::gaussian;
    double sigma2 = 1.0;
    int degree = 2;
    double offset = 1.0;
};

KernelSpec make_gaussian(double sigma2);
KernelSpec make_polynomial(int degree, double offset);
KernelSpec make_linear();

double kernel_eval(const KernelSpec& spec, const Eigen::VectorXd& u, const Eigen::VectorXd& v);

// Gram matrix over one sample list: G(i,j) = K(x[i], x[j]). The upper
// triangle is computed and mirrored so the result is exactly symmetric.
Eigen::MatrixXd gram(const KernelSpec& spec, const std::vector<Eigen::VectorXd>& x);

// Rectangular kernel matrix between two sample lists:
// R(i,j) = K(rows[i], cols[j]).
Eigen::MatrixXd cross_gram(const KernelSpec& spec,
                           const std::vector<Eigen::VectorXd>& rows,
                           const std::vector<Eigen::VectorXd>& cols);

} // namespace greyml::kernel
