#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "greyml/kernel.hpp"
#include "greyml/lssvm.hpp"
#include "greyml/series.hpp"
#include "greyml/tuning.hpp"

namespace greyml::cli {

// Parsed CSV contents: the first column's labels, the selected output
// column, and any selected input columns in request order.
struct Dataset {
    std::vector<std::string> time_labels;
    std::string output_name;
    series::RawSeries output;
    std::vector<std::string> input_names;
    std::vector<series::RawSeries> inputs;
};

enum class ModelKind {
    gm11,
    ngm11k,
    ngm11kc,
    dgm11,
    ndgm,
    dgm1n,
    kgm1n,
    knea,
    lssvm_static
};

struct RunConfig {
    ModelKind model = ModelKind::gm11;
    kernel::KernelSpec kernel_spec;
    double C = 1e4;
    double sigma2 = 1.0;
    std::size_t horizon = 0;
    std::size_t val_len = 0; // 0 = derive from the series length
    tuning::SearchGrid grid = tuning::SearchGrid::defaults();
    std::string out_path;
    bool timestamp = true;
};

// Read a CSV with a header row. The output column is mandatory; rows
// whose output cell is empty count as future rows (inputs only). Parse
// problems name the 1-based data row and the column.
Dataset ingest(const std::string& path, const std::string& output_col,
               const std::vector<std::string>& input_cols);

// Static one-step kernel regression chi(k) -> X(0)(k+1) with no linear
// term: the non-dynamic baseline for the compare command.
lssvm::SemiModel fit_static(const series::RawSeries& output,
                            const std::vector<series::RawSeries>& inputs,
                            const kernel::KernelSpec& spec, double C);

series::RawSeries forecast_static(const lssvm::SemiModel& model,
                                  const series::RawSeries& output,
                                  const std::vector<series::RawSeries>& inputs_extended,
                                  std::size_t horizon);

// Full command entry point (argv excludes nothing; argv[0] is the
// program name). Writes reports to `out`, diagnostics to `err`. Returns
// the process exit code: 0 success, 2 usage or parse error, 3 numerical
// failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace greyml::cli
