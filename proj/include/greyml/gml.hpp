#pragma once

#include <cstddef>
#include <vector>

#include "greyml/lssvm.hpp"
#include "greyml/series.hpp"

namespace greyml::gml {

enum class GmlKind { kgm1n, knea, general_discrete };

// A grey dynamic equation whose forcing function is a fitted kernel
// estimator. `alpha` is the dynamic coefficient with the model's own sign
// convention (see fit_kgm1n / fit_knea below); `mu` is the intercept.
// `engine` keeps the multipliers, bias and scaled kernel inputs;
// `train_output` is the series the model was fitted on.
struct GmlModel {
    GmlKind kind = GmlKind::kgm1n;
    double alpha = 0.0;
    double mu = 0.0;
    lssvm::SemiModel engine;
    series::RawSeries train_output;
    std::size_t n_inputs = 0;
};

// Result of running a fitted model forward. `fitted` covers k = 1..n,
// `predicted` the horizon steps after it. `phi` holds the kernel-term
// value feeding each transition, so phi[j] drives the step that produces
// the (j+2)-th value of the combined trajectory.
struct GmlForecast {
    series::RawSeries fitted;
    series::RawSeries predicted;
    series::RawSeries phi;
};

// Multivariate kernel grey model
//   X1(0)(k+1) + alpha Z1(1)(k+1) = phi(chi(k)) + mu,
// chi(k) the cumulated input vector [X2(1)(k), ..., Xn(1)(k)]. Samples
// k = 1..n-1 use y(k) = X1(0)(k+1) with the background value Z1(1)(k+1)
// as the scalar linear regressor, so the engine weight is -alpha and the
// reported alpha = -omega1.
GmlModel fit_kgm1n(const series::RawSeries& output,
                   const std::vector<series::RawSeries>& inputs,
                   const kernel::KernelSpec& spec, double C);

// Univariate kernel decline model
//   X(0)(k+1) = alpha X(0)(k) + phi(k) + mu,
// with the time index as the kernel input. alpha = omega1, mu = b.
GmlModel fit_knea(const series::RawSeries& output, const kernel::KernelSpec& spec, double C);

// General discrete form X1(1)(k+1) = alpha X1(1)(k) + phi(chi(k)) + mu
// with caller-built samples, for composing further model variants. The
// linear part must be scalar; alpha = omega1, mu = b. forecast_gml
// assumes the conventional construction (z(k) the cumulative output,
// chi(k) from cumulated inputs); other constructions need a hand-rolled
// recursion on top of lssvm::phi_hat.
GmlModel fit_general_discrete(const series::RawSeries& output,
                              const lssvm::SampleSet& samples,
                              const kernel::KernelSpec& spec, double C,
                              std::size_t n_inputs);

// Run the fitted dynamic forward from X(1)(1) = x(0)(1). kgm1n uses the
// background-value recursion
//   X(1)(k+1) = [(1 - alpha/2) X(1)(k) + phi(k) + mu] / (1 + alpha/2)
// and differences back; knea recurses directly on X(0);
// general_discrete recurses on X(1). Kernel inputs beyond the training
// range come from `inputs_extended` (kgm1n, general_discrete; must cover
// n + horizon steps) or the extended time index (knea).
GmlForecast forecast_gml(const GmlModel& model,
                         const std::vector<series::RawSeries>& inputs_extended,
                         std::size_t horizon);

} // namespace greyml::gml
