#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "greyml/series.hpp"

namespace greyml::grey {

enum class GreyKind { gm11, ngm11k, ngm11kc, dgm11, ndgm, dgm1n };

// Forcing term evaluated at a continuous time t or a discrete step index.
using ForcingFn = std::function<double(double)>;

// Fitted coefficients of a linear grey model. `a_or_alpha` is the dynamic
// coefficient: the decay rate a for the continuous kinds, the recursion
// multiplier for the discrete kinds. `theta` holds the forcing
// coefficients in model order:
//   gm11    theta = [b]           x(0)(k) + a z(1)(k) = b
//   ngm11k  theta = [b]           x(0)(k) + a z(1)(k) = b k
//   ngm11kc theta = [b, c]        x(0)(k) + a z(1)(k) = b k + c
//   dgm11   theta = [beta]        x(1)(k+1) = alpha x(1)(k) + beta
//   ndgm    theta = [beta1, beta2] x(1)(k+1) = alpha x(1)(k) + beta1 k + beta2
//   dgm1n   theta = [beta2..betan, mu]
//           x1(1)(k+1) = beta1 x1(1)(k) + sum_i betai xi(1)(k) + mu
struct GreyParams {
    GreyKind kind = GreyKind::gm11;
    double a_or_alpha = 0.0;
    std::vector<double> theta;
    std::size_t n_inputs = 0;
};

// Cumulative response of the continuous dynamic at time t:
//   X(1)(t) = x0 e^{-a (t-1)} + integral_1^t e^{-a (t-tau)} f(tau) dtau,
// the integral by composite trapezoid with subintervals no wider than
// `step`. t = 1 returns x0.
double continuous_response(double a, const ForcingFn& f, double x0, double t,
                           double step = 0.01);

// Cumulative response of the discrete dynamic after k steps:
//   X(1)(k+1) = x0 alpha^k + sum_{tau=2}^{k+1} alpha^{k+1-tau} f(tau),
// computed by the forward recursion X(j+1) = alpha X(j) + f(j+1).
// k = 0 returns x0.
double discrete_response(double alpha, const ForcingFn& f, double x0, std::size_t k);

// Least-squares parameter estimation on the model's defining difference
// equation. Continuous kinds regress the discretized form
// x(0)(k) + a z(1)(k) = f(theta; k); discrete kinds regress the recursion
// on cumulative (1-AGO) data. `inputs` is empty except for dgm1n.
GreyParams fit_classic(GreyKind kind, const series::RawSeries& output,
                       const std::vector<series::RawSeries>& inputs = {});

// Fitted values for k = 1..n plus `horizon` forecasts, obtained by
// running the matching response evaluator from the initial condition
// X(1)(1) = x(0)(1) and differencing back. dgm1n needs `inputs_extended`
// to cover at least n + horizon - 1 steps.
series::RawSeries forecast_classic(const GreyParams& params, const series::RawSeries& output,
                                   const std::vector<series::RawSeries>& inputs_extended,
                                   std::size_t horizon);

} // namespace greyml::grey
