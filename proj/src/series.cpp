#include "greyml/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace greyml::series {

void require_finite(const RawSeries& x, const char* what) {
    if (x.values.empty()) {
        throw std::invalid_argument(std::string(what) + ": series is empty");
    }
    for (double v : x.values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument(std::string(what) + ": series contains a non-finite value");
        }
    }
}

CumSeries ago(const RawSeries& x) {
    if (x.values.empty()) {
        throw std::invalid_argument("ago: input series is empty");
    }
    CumSeries c;
    c.values.reserve(x.size());
    double acc = 0.0;
    for (double v : x.values) {
        acc += v;
        c.values.push_back(acc);
    }
    return c;
}

RawSeries iago(const CumSeries& c) {
    if (c.values.empty()) {
        throw std::invalid_argument("iago: input series is empty");
    }
    RawSeries x;
    x.values.reserve(c.size());
    x.values.push_back(c.values.front());
    for (std::size_t k = 1; k < c.size(); ++k) {
        x.values.push_back(c.values[k] - c.values[k - 1]);
    }
    return x;
}

BackgroundSeries background(const CumSeries& c) {
    if (c.size() < 2) {
        throw std::invalid_argument("background: need at least 2 cumulative values");
    }
    BackgroundSeries z;
    z.values.reserve(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) {
        z.values.push_back(0.5 * (c.values[k - 1] + c.values[k]));
    }
    return z;
}

ScalerState fit_scaler(const std::vector<Eigen::VectorXd>& rows) {
    if (rows.empty()) {
        throw std::invalid_argument("fit_scaler: no rows");
    }
    const Eigen::Index d = rows.front().size();
    ScalerState s;
    s.lo.assign(static_cast<std::size_t>(d), 0.0);
    s.hi.assign(static_cast<std::size_t>(d), 0.0);
    for (Eigen::Index j = 0; j < d; ++j) {
        s.lo[static_cast<std::size_t>(j)] = rows.front()[j];
        s.hi[static_cast<std::size_t>(j)] = rows.front()[j];
    }
    for (const auto& r : rows) {
        if (r.size() != d) {
            throw std::invalid_argument("fit_scaler: inconsistent row dimensions");
        }
        for (Eigen::Index j = 0; j < d; ++j) {
            auto i = static_cast<std::size_t>(j);
            s.lo[i] = std::min(s.lo[i], r[j]);
            s.hi[i] = std::max(s.hi[i], r[j]);
        }
    }
    return s;
}

Eigen::VectorXd apply_scaler(const ScalerState& s, const Eigen::VectorXd& v) {
    if (static_cast<std::size_t>(v.size()) != s.dim()) {
        throw std::invalid_argument("apply_scaler: dimension mismatch");
    }
    Eigen::VectorXd out(v.size());
    for (Eigen::Index j = 0; j < v.size(); ++j) {
        auto i = static_cast<std::size_t>(j);
        const double span = s.hi[i] - s.lo[i];
        out[j] = span > 0.0 ? (v[j] - s.lo[i]) / span : 0.5;
    }
    return out;
}

Eigen::VectorXd invert_scaler(const ScalerState& s, const Eigen::VectorXd& v) {
    if (static_cast<std::size_t>(v.size()) != s.dim()) {
        throw std::invalid_argument("invert_scaler: dimension mismatch");
    }
    Eigen::VectorXd out(v.size());
    for (Eigen::Index j = 0; j < v.size(); ++j) {
        auto i = static_cast<std::size_t>(j);
        const double span = s.hi[i] - s.lo[i];
        out[j] = span > 0.0 ? s.lo[i] + v[j] * span : s.lo[i];
    }
    return out;
}

} // namespace greyml::series
