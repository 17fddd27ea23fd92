#include "greyml/tuning.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "greyml/errors.hpp"

namespace greyml::tuning {

namespace {

void check_pair(const series::RawSeries& actual, const series::RawSeries& predicted,
                const char* what) {
    if (actual.values.empty()) {
        throw std::invalid_argument(std::string(what) + ": empty series");
    }
    if (actual.size() != predicted.size()) {
        throw std::invalid_argument(std::string(what) + ": series lengths differ");
    }
}

void check_grid_axis(const std::vector<double>& values, const char* name) {
    if (values.empty()) {
        throw std::invalid_argument(std::string("grid_search: ") + name + " axis is empty");
    }
    double prev = 0.0;
    for (double v : values) {
        if (!(v > 0.0)) {
            throw std::invalid_argument(std::string("grid_search: ") + name +
                                        " values must be positive");
        }
        if (!(v > prev)) {
            throw std::invalid_argument(std::string("grid_search: ") + name +
                                        " values must be sorted ascending");
        }
        prev = v;
    }
}

} // namespace

double mape(const series::RawSeries& actual, const series::RawSeries& predicted) {
    check_pair(actual, predicted, "mape");
    double acc = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        if (actual.values[i] == 0.0) {
            throw std::invalid_argument("mape: actual value is zero");
        }
        acc += std::abs(actual.values[i] - predicted.values[i]) / std::abs(actual.values[i]);
    }
    return acc / static_cast<double>(actual.size()) * 100.0;
}

double rmse(const series::RawSeries& actual, const series::RawSeries& predicted) {
    check_pair(actual, predicted, "rmse");
    double acc = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const double d = actual.values[i] - predicted.values[i];
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(actual.size()));
}

double mae(const series::RawSeries& actual, const series::RawSeries& predicted) {
    check_pair(actual, predicted, "mae");
    double acc = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        acc += std::abs(actual.values[i] - predicted.values[i]);
    }
    return acc / static_cast<double>(actual.size());
}

SplitIndices rolling_split(std::size_t n, std::size_t val_len) {
    if (n < 4) {
        throw std::invalid_argument("rolling_split: need at least 4 points");
    }
    if (val_len < 1 || val_len > n - 3) {
        throw std::invalid_argument("rolling_split: val_len must be in [1, n - 3]");
    }
    SplitIndices split;
    split.train.resize(n - val_len);
    split.validation.resize(val_len);
    std::iota(split.train.begin(), split.train.end(), std::size_t{0});
    std::iota(split.validation.begin(), split.validation.end(), n - val_len);
    return split;
}

std::size_t default_val_len(std::size_t n) {
    const auto fifth = static_cast<std::size_t>(
        std::ceil(0.2 * static_cast<double>(n) - 1e-12));
    return fifth < 2 ? 2 : fifth;
}

SearchGrid SearchGrid::defaults() {
    SearchGrid g;
    g.C_values = {1e-1, 1.0, 1e1, 1e2, 1e3, 1e4, 1e5, 1e6};
    g.sigma2_values = {1e-2, 1e-1, 1.0, 1e1, 1e2};
    return g;
}

SearchReport grid_search(const FitForecast& procedure, const series::RawSeries& output,
                         const std::vector<series::RawSeries>& inputs,
                         const SearchGrid& grid, std::size_t val_len) {
    series::require_finite(output, "grid_search");
    check_grid_axis(grid.C_values, "C");
    check_grid_axis(grid.sigma2_values, "sigma2");
    const std::size_t n = output.size();
    const SplitIndices split = rolling_split(n, val_len);

    series::RawSeries train_output;
    train_output.values.assign(output.values.begin(),
                               output.values.begin() +
                                   static_cast<std::ptrdiff_t>(split.train.size()));
    series::RawSeries actual_tail;
    actual_tail.values.assign(output.values.end() - static_cast<std::ptrdiff_t>(val_len),
                              output.values.end());

    SearchReport report;
    report.train_len = split.train.size();
    report.val_len = val_len;
    report.table.reserve(grid.C_values.size() * grid.sigma2_values.size());

    const double inf = std::numeric_limits<double>::infinity();
    double best = inf;
    for (double C : grid.C_values) {
        for (double s2 : grid.sigma2_values) {
            SearchCell cell;
            cell.C = C;
            cell.sigma2 = s2;
            try {
                const series::RawSeries pred = procedure(train_output, inputs, C, s2, val_len);
                if (pred.size() != val_len) {
                    throw std::invalid_argument("procedure returned " +
                                                std::to_string(pred.size()) + " values, expected " +
                                                std::to_string(val_len));
                }
                cell.score = mape(actual_tail, pred);
                if (!std::isfinite(cell.score)) {
                    throw NumericalError("validation score is not finite");
                }
            } catch (const std::exception& e) {
                cell.failed = true;
                cell.score = inf;
                cell.message = e.what();
            }
            if (!cell.failed && cell.score < best) {
                best = cell.score;
                report.best_C = C;
                report.best_sigma2 = s2;
            }
            report.table.push_back(std::move(cell));
        }
    }

    if (!(best < inf)) {
        std::string msg = "grid_search: every cell failed;";
        for (const auto& cell : report.table) {
            msg += " [C=" + std::to_string(cell.C) + " sigma2=" + std::to_string(cell.sigma2) +
                   ": " + cell.message + "]";
        }
        throw NumericalError(msg);
    }
    return report;
}

} // namespace greyml::tuning
