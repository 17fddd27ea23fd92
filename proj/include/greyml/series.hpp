#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace greyml::series {

/// Original series X^(0): the system output (or one input) at times k = 1..n.
struct RawSeries {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
};

/// Accumulated series X^(1): running prefix sums of a RawSeries.
struct CumSeries {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
};

/// Background values z(k) = 0.5*(X^(1)(k-1) + X^(1)(k)) for k = 2..n.
/// values[i] holds z(i+2), so the vector has n-1 entries.
struct BackgroundSeries {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
};

/// Per-dimension min/max captured from training rows. Maps each training
/// dimension affinely onto [0,1]; out-of-range inputs extrapolate linearly.
/// Constant dimensions map to 0.5.
struct ScalerState {
    std::vector<double> lo;
    std::vector<double> hi;

    std::size_t dim() const { return lo.size(); }
};

/// First-order accumulation (1-AGO): result[k] = sum of x[1..k].
CumSeries ago(const RawSeries& x);

/// Inverse accumulation (first differencing); ago(iago(c)) == c.
RawSeries iago(const CumSeries& c);

/// Background values of a cumulative series; requires length >= 2.
BackgroundSeries background(const CumSeries& c);

ScalerState fit_scaler(const std::vector<Eigen::VectorXd>& rows);
Eigen::VectorXd apply_scaler(const ScalerState& s, const Eigen::VectorXd& v);
Eigen::VectorXd invert_scaler(const ScalerState& s, const Eigen::VectorXd& v);

/// Throws std::invalid_argument when the series is empty or contains
/// non-finite values; `what` names the series in the message.
void require_finite(const RawSeries& x, const char* what);

} // namespace greyml::series
