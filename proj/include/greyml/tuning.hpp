#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "greyml/series.hpp"

namespace greyml::tuning {

double mape(const series::RawSeries& actual, const series::RawSeries& predicted);
double rmse(const series::RawSeries& actual, const series::RawSeries& predicted);
double mae(const series::RawSeries& actual, const series::RawSeries& predicted);

// Time-ordered holdout split: positions 0..n-val_len-1 train, the
// remaining val_len positions validate. val_len must leave at least 3
// training points.
struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> validation;
};

SplitIndices rolling_split(std::size_t n, std::size_t val_len);

std::size_t default_val_len(std::size_t n);

// Candidate values, each list sorted ascending and strictly positive.
struct SearchGrid {
    std::vector<double> C_values;
    std::vector<double> sigma2_values;

    static SearchGrid defaults();
};

struct SearchCell {
    double C = 0.0;
    double sigma2 = 0.0;
    double score = 0.0;
    bool failed = false;
    std::string message;
};

struct SearchReport {
    double best_C = 0.0;
    double best_sigma2 = 0.0;
    std::vector<SearchCell> table;
    std::size_t train_len = 0;
    std::size_t val_len = 0;
};

// Fits on the training window and returns the val-window continuation
// (`horizon` values). `inputs` spans the full series so models that need
// future regressors can reach them.
using FitForecast = std::function<series::RawSeries(
    const series::RawSeries& train_output, const std::vector<series::RawSeries>& inputs,
    double C, double sigma2, std::size_t horizon)>;

// Exhaustive scan of the grid. Each cell fits on the head of `output`
// and scores validation MAPE on the tail; cells whose fit throws score
// +infinity and keep the message. Ties go to the smallest C, then the
// smallest sigma2. Throws a numerical-failure error listing every
// diagnostic when no cell succeeds.
SearchReport grid_search(const FitForecast& procedure, const series::RawSeries& output,
                         const std::vector<series::RawSeries>& inputs,
                         const SearchGrid& grid, std::size_t val_len);

} // namespace greyml::tuning
