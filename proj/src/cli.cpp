#include "greyml/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "CLI11.hpp"

#include "greyml/errors.hpp"
#include "greyml/gml.hpp"
#include "greyml/grey.hpp"

namespace greyml::cli {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

double parse_cell(const std::string& text, std::size_t row, const std::string& column) {
    const std::string t = trim(text);
    double value = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || t.empty()) {
        throw ParseError("row " + std::to_string(row) + ", column '" + column +
                         "': cannot parse '" + t + "' as a number");
    }
    return value;
}

std::size_t find_column(const std::vector<std::string>& header, const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) {
            return i;
        }
    }
    throw ParseError("column '" + name + "' not found in header");
}

std::string iso_utc_now() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ModelKind parse_model(const std::string& name) {
    static const std::map<std::string, ModelKind> table = {
        {"gm11", ModelKind::gm11},     {"ngm11k", ModelKind::ngm11k},
        {"ngm11kc", ModelKind::ngm11kc}, {"dgm11", ModelKind::dgm11},
        {"ndgm", ModelKind::ndgm},     {"dgm1n", ModelKind::dgm1n},
        {"kgm1n", ModelKind::kgm1n},   {"knea", ModelKind::knea},
        {"lssvm", ModelKind::lssvm_static}};
    const auto it = table.find(name);
    if (it == table.end()) {
        throw std::invalid_argument("unknown model '" + name + "'");
    }
    return it->second;
}

bool is_grey(ModelKind m) {
    return m == ModelKind::gm11 || m == ModelKind::ngm11k || m == ModelKind::ngm11kc ||
           m == ModelKind::dgm11 || m == ModelKind::ndgm || m == ModelKind::dgm1n;
}

grey::GreyKind to_grey_kind(ModelKind m) {
    switch (m) {
    case ModelKind::gm11: return grey::GreyKind::gm11;
    case ModelKind::ngm11k: return grey::GreyKind::ngm11k;
    case ModelKind::ngm11kc: return grey::GreyKind::ngm11kc;
    case ModelKind::dgm11: return grey::GreyKind::dgm11;
    case ModelKind::ndgm: return grey::GreyKind::ndgm;
    case ModelKind::dgm1n: return grey::GreyKind::dgm1n;
    default: break;
    }
    throw std::invalid_argument("not a classical grey model");
}

const char* model_name(ModelKind m) {
    switch (m) {
    case ModelKind::gm11: return "gm11";
    case ModelKind::ngm11k: return "ngm11k";
    case ModelKind::ngm11kc: return "ngm11kc";
    case ModelKind::dgm11: return "dgm11";
    case ModelKind::ndgm: return "ndgm";
    case ModelKind::dgm1n: return "dgm1n";
    case ModelKind::kgm1n: return "kgm1n";
    case ModelKind::knea: return "knea";
    case ModelKind::lssvm_static: return "lssvm";
    }
    return "?";
}

kernel::KernelSpec parse_kernel(const std::string& name, double sigma2) {
    if (name == "gaussian") {
        return kernel::make_gaussian(sigma2);
    }
    if (name == "polynomial") {
        return kernel::make_polynomial(2, 1.0);
    }
    if (name == "linear") {
        return kernel::make_linear();
    }
    throw std::invalid_argument("unknown kernel '" + name + "'");
}

kernel::KernelSpec with_sigma2(const kernel::KernelSpec& base, double sigma2) {
    if (base.kind == kernel::KernelKind::gaussian) {
        return kernel::make_gaussian(sigma2);
    }
    return base;
}

void parse_grid_spec(const std::string& text, tuning::SearchGrid& grid) {
    for (const std::string& part : split(text, ';')) {
        const std::string p = trim(part);
        if (p.empty()) {
            continue;
        }
        const auto eq = p.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("bad --grid segment '" + p +
                                        "'; expected C=... or sigma2=...");
        }
        const std::string key = trim(p.substr(0, eq));
        std::vector<double> values;
        for (const std::string& v : split(p.substr(eq + 1), ',')) {
            const std::string tv = trim(v);
            double d = 0.0;
            const auto [ptr, ec] = std::from_chars(tv.data(), tv.data() + tv.size(), d);
            if (ec != std::errc{} || ptr != tv.data() + tv.size() || tv.empty()) {
                throw std::invalid_argument("bad --grid value '" + tv + "'");
            }
            values.push_back(d);
        }
        if (key == "C") {
            grid.C_values = values;
        } else if (key == "sigma2") {
            grid.sigma2_values = values;
        } else {
            throw std::invalid_argument("bad --grid key '" + key + "'");
        }
    }
}

series::RawSeries head(const series::RawSeries& s, std::size_t len) {
    if (len > s.size()) {
        throw std::invalid_argument("series shorter than the requested window");
    }
    series::RawSeries h;
    h.values.assign(s.values.begin(), s.values.begin() + static_cast<std::ptrdiff_t>(len));
    return h;
}

series::RawSeries tail(const series::RawSeries& s, std::size_t len) {
    if (len > s.size()) {
        throw std::invalid_argument("series shorter than the requested window");
    }
    series::RawSeries t;
    t.values.assign(s.values.end() - static_cast<std::ptrdiff_t>(len), s.values.end());
    return t;
}

std::vector<series::RawSeries> head_all(const std::vector<series::RawSeries>& in,
                                        std::size_t len) {
    std::vector<series::RawSeries> out;
    out.reserve(in.size());
    for (const auto& s : in) {
        out.push_back(head(s, len));
    }
    return out;
}

// A writer that buffers one report so the timestamp policy and ordering
// stay uniform across commands.
struct Report {
    std::vector<std::pair<std::string, std::string>> lines;

    void add(const std::string& key, const std::string& value) { lines.emplace_back(key, value); }
    void add(const std::string& key, double value) { lines.emplace_back(key, fmt(value)); }

    void print(std::ostream& os, bool timestamp) const {
        if (timestamp) {
            os << "generated = " << iso_utc_now() << "\n";
        }
        for (const auto& [k, v] : lines) {
            os << k << " = " << v << "\n";
        }
    }
};

void write_forecast_csv(const std::string& path, const series::RawSeries& actual,
                        const series::RawSeries& full) {
    std::ofstream os(path);
    if (!os) {
        throw std::invalid_argument("cannot open output file '" + path + "'");
    }
    os << "t,actual,predicted\n";
    for (std::size_t i = 0; i < full.size(); ++i) {
        os << (i + 1) << ",";
        if (i < actual.size()) {
            os << fmt(actual.values[i]);
        }
        os << "," << fmt(full.values[i]) << "\n";
    }
    if (!os) {
        throw std::invalid_argument("failed writing output file '" + path + "'");
    }
}

// One fitted-plus-predicted run of a kernel model; shared by forecast,
// gridsearch and compare so every command exercises the same path.
struct KernelRun {
    series::RawSeries fitted;
    series::RawSeries predicted;
};

KernelRun run_kernel_model(ModelKind model, const series::RawSeries& train_output,
                           const std::vector<series::RawSeries>& inputs_full,
                           const kernel::KernelSpec& spec, double C, std::size_t horizon) {
    const std::size_t n = train_output.size();
    KernelRun run;
    if (model == ModelKind::kgm1n) {
        const auto train_inputs = head_all(inputs_full, n);
        const gml::GmlModel m = gml::fit_kgm1n(train_output, train_inputs, spec, C);
        gml::GmlForecast fc = gml::forecast_gml(m, inputs_full, horizon);
        run.fitted = std::move(fc.fitted);
        run.predicted = std::move(fc.predicted);
    } else if (model == ModelKind::knea) {
        const gml::GmlModel m = gml::fit_knea(train_output, spec, C);
        gml::GmlForecast fc = gml::forecast_gml(m, {}, horizon);
        run.fitted = std::move(fc.fitted);
        run.predicted = std::move(fc.predicted);
    } else if (model == ModelKind::lssvm_static) {
        const auto train_inputs = head_all(inputs_full, n);
        const lssvm::SemiModel m = fit_static(train_output, train_inputs, spec, C);
        const series::RawSeries full = forecast_static(m, train_output, inputs_full, horizon);
        run.fitted = head(full, n);
        run.predicted = tail(full, horizon);
    } else {
        throw std::invalid_argument("model is not kernel-based");
    }
    return run;
}

tuning::FitForecast make_procedure(ModelKind model, const kernel::KernelSpec& base) {
    return [model, base](const series::RawSeries& train_output,
                         const std::vector<series::RawSeries>& inputs, double C, double sigma2,
                         std::size_t horizon) {
        return run_kernel_model(model, train_output, inputs, with_sigma2(base, sigma2), C, horizon)
            .predicted;
    };
}

void add_metrics(Report& report, const std::string& prefix, const series::RawSeries& actual,
                 const series::RawSeries& predicted) {
    try {
        report.add(prefix + "_mape", tuning::mape(actual, predicted));
    } catch (const std::invalid_argument&) {
        report.add(prefix + "_mape", "undefined");
    }
    report.add(prefix + "_rmse", tuning::rmse(actual, predicted));
    report.add(prefix + "_mae", tuning::mae(actual, predicted));
}

void describe_grey_params(Report& report, const grey::GreyParams& params) {
    std::vector<std::string> names;
    switch (params.kind) {
    case grey::GreyKind::gm11:
        report.add("a", params.a_or_alpha);
        names = {"b"};
        break;
    case grey::GreyKind::ngm11k:
        report.add("a", params.a_or_alpha);
        names = {"b"};
        break;
    case grey::GreyKind::ngm11kc:
        report.add("a", params.a_or_alpha);
        names = {"b", "c"};
        break;
    case grey::GreyKind::dgm11:
        report.add("alpha", params.a_or_alpha);
        names = {"beta"};
        break;
    case grey::GreyKind::ndgm:
        report.add("alpha", params.a_or_alpha);
        names = {"beta1", "beta2"};
        break;
    case grey::GreyKind::dgm1n:
        report.add("beta1", params.a_or_alpha);
        for (std::size_t i = 0; i + 1 < params.theta.size(); ++i) {
            names.push_back("beta" + std::to_string(i + 2));
        }
        names.push_back("mu");
        break;
    }
    for (std::size_t i = 0; i < params.theta.size(); ++i) {
        report.add(names[i], params.theta[i]);
    }
}

struct ParsedArgs {
    std::string command;
    std::string csv_path;
    std::string model = "gm11";
    std::string kernel = "gaussian";
    std::string output_col = "y";
    std::vector<std::string> input_cols;
    RunConfig config;
    std::string grid_spec;
};

void cmd_fit(const ParsedArgs& args, const Dataset& data, std::ostream& out) {
    Report report;
    report.add("command", "fit");
    report.add("model", model_name(args.config.model));
    report.add("n", static_cast<double>(data.output.size()));
    if (is_grey(args.config.model)) {
        const grey::GreyParams params =
            grey::fit_classic(to_grey_kind(args.config.model), data.output, data.inputs);
        describe_grey_params(report, params);
    } else if (args.config.model == ModelKind::kgm1n || args.config.model == ModelKind::knea) {
        const gml::GmlModel m =
            args.config.model == ModelKind::kgm1n
                ? gml::fit_kgm1n(data.output, data.inputs, args.config.kernel_spec, args.config.C)
                : gml::fit_knea(data.output, args.config.kernel_spec, args.config.C);
        report.add("kernel", args.kernel);
        report.add("C", args.config.C);
        if (args.config.kernel_spec.kind == kernel::KernelKind::gaussian) {
            report.add("sigma2", args.config.kernel_spec.sigma2);
        }
        report.add("alpha", m.alpha);
        report.add("mu", m.mu);
    } else {
        const lssvm::SemiModel m =
            fit_static(data.output, data.inputs, args.config.kernel_spec, args.config.C);
        report.add("kernel", args.kernel);
        report.add("C", args.config.C);
        if (args.config.kernel_spec.kind == kernel::KernelKind::gaussian) {
            report.add("sigma2", args.config.kernel_spec.sigma2);
        }
        report.add("b", m.b);
    }
    report.print(out, args.config.timestamp);
}

void cmd_forecast(const ParsedArgs& args, const Dataset& data, std::ostream& out) {
    if (args.config.out_path.empty()) {
        throw std::invalid_argument("forecast requires --out <path> for the prediction CSV");
    }
    const std::size_t n = data.output.size();
    const std::size_t horizon = args.config.horizon;

    series::RawSeries full;
    if (is_grey(args.config.model)) {
        const grey::GreyKind kind = to_grey_kind(args.config.model);
        const grey::GreyParams params = grey::fit_classic(
            kind, data.output, kind == grey::GreyKind::dgm1n ? data.inputs : std::vector<series::RawSeries>{});
        full = grey::forecast_classic(params, data.output, data.inputs, horizon);
    } else {
        const KernelRun run = run_kernel_model(args.config.model, data.output, data.inputs,
                                               args.config.kernel_spec, args.config.C, horizon);
        full = run.fitted;
        full.values.insert(full.values.end(), run.predicted.values.begin(),
                           run.predicted.values.end());
    }

    write_forecast_csv(args.config.out_path, data.output, full);

    Report report;
    report.add("command", "forecast");
    report.add("model", model_name(args.config.model));
    report.add("n", static_cast<double>(n));
    report.add("horizon", static_cast<double>(horizon));
    report.add("out", args.config.out_path);
    add_metrics(report, "train", data.output, head(full, n));
    report.print(out, args.config.timestamp);
}

void cmd_gridsearch(const ParsedArgs& args, const Dataset& data, std::ostream& out) {
    if (is_grey(args.config.model)) {
        throw std::invalid_argument("gridsearch applies to kernel models (kgm1n, knea, lssvm)");
    }
    const std::size_t n = data.output.size();
    const std::size_t val_len =
        args.config.val_len > 0 ? args.config.val_len : tuning::default_val_len(n);
    const tuning::FitForecast proc =
        make_procedure(args.config.model, args.config.kernel_spec);
    const tuning::SearchReport report =
        tuning::grid_search(proc, data.output, data.inputs, args.config.grid, val_len);

    Report text;
    text.add("command", "gridsearch");
    text.add("model", model_name(args.config.model));
    text.add("kernel", args.kernel);
    text.add("n", static_cast<double>(n));
    text.add("train_len", static_cast<double>(report.train_len));
    text.add("val_len", static_cast<double>(report.val_len));
    text.add("best_C", report.best_C);
    text.add("best_sigma2", report.best_sigma2);
    text.add("cells", static_cast<double>(report.table.size()));
    for (std::size_t i = 0; i < report.table.size(); ++i) {
        const tuning::SearchCell& cell = report.table[i];
        std::string line = "C=" + fmt(cell.C) + " sigma2=" + fmt(cell.sigma2);
        if (cell.failed) {
            line += " failed: " + cell.message;
        } else {
            line += " mape=" + fmt(cell.score);
        }
        text.add("cell_" + std::to_string(i + 1), line);
    }
    text.print(out, args.config.timestamp);
}

struct CompareRow {
    std::string model;
    double train_mape = 0.0;
    double train_rmse = 0.0;
    double test_mape = 0.0;
    double test_rmse = 0.0;
};

CompareRow score_row(const std::string& name, const series::RawSeries& train_actual,
                     const series::RawSeries& test_actual, const series::RawSeries& fitted,
                     const series::RawSeries& predicted) {
    CompareRow row;
    row.model = name;
    row.train_mape = tuning::mape(train_actual, fitted);
    row.train_rmse = tuning::rmse(train_actual, fitted);
    row.test_mape = tuning::mape(test_actual, predicted);
    row.test_rmse = tuning::rmse(test_actual, predicted);
    return row;
}

void cmd_compare(const ParsedArgs& args, const Dataset& data, std::ostream& out) {
    const std::size_t n = data.output.size();
    const std::size_t val_len =
        args.config.val_len > 0 ? args.config.val_len : tuning::default_val_len(n);
    if (n < 4 || val_len > n - 4) {
        throw std::invalid_argument("compare: series too short for the requested split");
    }
    const series::RawSeries train_out = head(data.output, n - val_len);
    const series::RawSeries test_out = tail(data.output, val_len);
    const std::size_t train_len = train_out.size();
    const bool has_inputs = !data.inputs.empty();

    std::vector<CompareRow> rows;

    // Classical baselines, fitted directly on the training window.
    std::vector<ModelKind> classics = {ModelKind::gm11, ModelKind::dgm11};
    if (has_inputs) {
        classics.push_back(ModelKind::dgm1n);
    }
    for (ModelKind mk : classics) {
        const grey::GreyKind kind = to_grey_kind(mk);
        const grey::GreyParams params = grey::fit_classic(
            kind, train_out,
            kind == grey::GreyKind::dgm1n ? head_all(data.inputs, train_len)
                                          : std::vector<series::RawSeries>{});
        const series::RawSeries full =
            grey::forecast_classic(params, train_out, data.inputs, val_len);
        rows.push_back(score_row(model_name(mk), train_out, test_out, head(full, train_len),
                                 tail(full, val_len)));
    }

    // Kernel models, tuned on the training window with an inner holdout.
    std::size_t inner_val = tuning::default_val_len(train_len);
    if (train_len < 5) {
        throw std::invalid_argument("compare: training window too short for tuning");
    }
    inner_val = std::min(inner_val, train_len - 4);
    if (inner_val < 1) {
        inner_val = 1;
    }

    const std::vector<ModelKind> kernels = {has_inputs ? ModelKind::kgm1n : ModelKind::knea,
                                            ModelKind::lssvm_static};
    for (ModelKind mk : kernels) {
        const tuning::FitForecast proc = make_procedure(mk, args.config.kernel_spec);
        const tuning::SearchReport search =
            tuning::grid_search(proc, train_out, data.inputs, args.config.grid, inner_val);
        const kernel::KernelSpec spec = with_sigma2(args.config.kernel_spec, search.best_sigma2);
        const KernelRun run =
            run_kernel_model(mk, train_out, data.inputs, spec, search.best_C, val_len);
        rows.push_back(score_row(model_name(mk), train_out, test_out, run.fitted, run.predicted));
    }

    std::ostringstream table;
    table << "model,train_mape,train_rmse,test_mape,test_rmse\n";
    for (const CompareRow& row : rows) {
        table << row.model << "," << fmt(row.train_mape) << "," << fmt(row.train_rmse) << ","
              << fmt(row.test_mape) << "," << fmt(row.test_rmse) << "\n";
    }

    if (args.config.timestamp) {
        out << "generated = " << iso_utc_now() << "\n";
    }
    out << table.str();
    if (!args.config.out_path.empty()) {
        std::ofstream os(args.config.out_path);
        if (!os) {
            throw std::invalid_argument("cannot open output file '" + args.config.out_path + "'");
        }
        os << table.str();
    }
}

} // namespace

Dataset ingest(const std::string& path, const std::string& output_col,
               const std::vector<std::string>& input_cols) {
    std::ifstream is(path);
    if (!is) {
        throw ParseError("cannot open file '" + path + "'");
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        lines.push_back(line);
    }
    while (!lines.empty() && trim(lines.back()).empty()) {
        lines.pop_back();
    }
    if (lines.empty()) {
        throw ParseError("file '" + path + "' is empty");
    }

    std::string header_line = lines.front();
    if (header_line.size() >= 3 && header_line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
        header_line.erase(0, 3);
    }
    std::vector<std::string> header = split(header_line, ',');
    for (auto& h : header) {
        h = trim(h);
    }

    Dataset data;
    data.output_name = output_col;
    const std::size_t out_idx = find_column(header, output_col);
    std::vector<std::size_t> input_idx;
    input_idx.reserve(input_cols.size());
    for (const std::string& name : input_cols) {
        input_idx.push_back(find_column(header, name));
        data.input_names.push_back(name);
    }
    data.inputs.resize(input_cols.size());

    bool output_ended = false;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        if (trim(lines[r]).empty()) {
            throw ParseError("row " + std::to_string(r) + ": blank line inside the data");
        }
        const std::vector<std::string> fields = split(lines[r], ',');
        if (fields.size() != header.size()) {
            throw ParseError("row " + std::to_string(r) + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(fields.size()));
        }
        data.time_labels.push_back(trim(fields[0]));
        const std::string out_cell = trim(fields[out_idx]);
        if (out_cell.empty()) {
            output_ended = true;
        } else {
            if (output_ended) {
                throw ParseError("row " + std::to_string(r) + ": output column '" + output_col +
                                 "' resumes after empty cells; future rows must be trailing");
            }
            data.output.values.push_back(parse_cell(fields[out_idx], r, output_col));
        }
        for (std::size_t j = 0; j < input_idx.size(); ++j) {
            data.inputs[j].values.push_back(
                parse_cell(fields[input_idx[j]], r, input_cols[j]));
        }
    }
    if (data.output.values.empty()) {
        throw ParseError("file '" + path + "' has no rows with output values");
    }
    return data;
}

lssvm::SemiModel fit_static(const series::RawSeries& output,
                            const std::vector<series::RawSeries>& inputs,
                            const kernel::KernelSpec& spec, double C) {
    series::require_finite(output, "fit_static");
    const std::size_t n = output.size();
    if (n < 4) {
        throw std::invalid_argument("fit_static: need at least 4 output values");
    }
    lssvm::SampleSet samples;
    samples.y.resize(static_cast<Eigen::Index>(n - 1));
    if (inputs.empty()) {
        for (std::size_t k = 0; k + 1 < n; ++k) {
            Eigen::VectorXd xk(1);
            xk[0] = static_cast<double>(k + 1);
            samples.x.push_back(std::move(xk));
        }
    } else {
        std::vector<series::CumSeries> in1;
        in1.reserve(inputs.size());
        for (const auto& in : inputs) {
            series::require_finite(in, "fit_static");
            if (in.size() != n) {
                throw std::invalid_argument("fit_static: input length differs from output length");
            }
            in1.push_back(series::ago(in));
        }
        for (std::size_t k = 0; k + 1 < n; ++k) {
            Eigen::VectorXd chi(static_cast<Eigen::Index>(in1.size()));
            for (std::size_t j = 0; j < in1.size(); ++j) {
                chi[static_cast<Eigen::Index>(j)] = in1[j].values[k];
            }
            samples.x.push_back(std::move(chi));
        }
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        samples.z.emplace_back(0);
        samples.y[static_cast<Eigen::Index>(k)] = output.values[k + 1];
    }
    return lssvm::fit_semi(samples, spec, C);
}

series::RawSeries forecast_static(const lssvm::SemiModel& model,
                                  const series::RawSeries& output,
                                  const std::vector<series::RawSeries>& inputs_extended,
                                  std::size_t horizon) {
    series::require_finite(output, "forecast_static");
    const std::size_t n = output.size();
    const std::size_t steps = n + horizon - 1;
    const Eigen::VectorXd no_z(0);

    std::vector<Eigen::VectorXd> xs;
    xs.reserve(steps);
    if (inputs_extended.empty()) {
        for (std::size_t k = 1; k <= steps; ++k) {
            Eigen::VectorXd xk(1);
            xk[0] = static_cast<double>(k);
            xs.push_back(std::move(xk));
        }
    } else {
        std::vector<series::CumSeries> in1;
        in1.reserve(inputs_extended.size());
        for (const auto& in : inputs_extended) {
            series::require_finite(in, "forecast_static");
            if (in.size() < steps) {
                throw std::invalid_argument(
                    "forecast_static: input series too short; need " + std::to_string(steps) +
                    " values to reach horizon " + std::to_string(horizon));
            }
            in1.push_back(series::ago(in));
        }
        for (std::size_t k = 0; k < steps; ++k) {
            Eigen::VectorXd chi(static_cast<Eigen::Index>(in1.size()));
            for (std::size_t j = 0; j < in1.size(); ++j) {
                chi[static_cast<Eigen::Index>(j)] = in1[j].values[k];
            }
            xs.push_back(std::move(chi));
        }
    }

    series::RawSeries full;
    full.values.reserve(n + horizon);
    full.values.push_back(output.values.front());
    for (const auto& xk : xs) {
        full.values.push_back(lssvm::predict_semi(model, xk, no_z));
    }
    return full;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    ParsedArgs args;
    bool no_timestamp = false;

    CLI::App app{"Small-sample grey forecasting toolkit"};
    app.add_option("command", args.command, "fit | forecast | gridsearch | compare")->required();
    app.add_option("csv", args.csv_path, "input CSV file")->required();
    app.add_option("--model", args.model,
                   "gm11 | ngm11k | ngm11kc | dgm11 | ndgm | dgm1n | kgm1n | knea | lssvm")
        ->capture_default_str();
    app.add_option("--kernel", args.kernel, "gaussian | polynomial | linear")
        ->capture_default_str();
    app.add_option("--C", args.config.C, "regularization constant")->capture_default_str();
    app.add_option("--sigma2", args.config.sigma2, "gaussian kernel width")
        ->capture_default_str();
    app.add_option("--horizon", args.config.horizon, "steps to forecast past the data")
        ->capture_default_str();
    app.add_option("--val-len", args.config.val_len,
                   "validation tail length (0 = one fifth of the series, at least 2)")
        ->capture_default_str();
    app.add_option("--inputs", args.input_cols, "input column names (comma separated)")
        ->delimiter(',');
    app.add_option("--output-col", args.output_col, "output column name")->capture_default_str();
    app.add_option("--out", args.config.out_path, "output CSV path");
    app.add_option("--grid", args.grid_spec, "grid override, e.g. C=1,10,100;sigma2=0.1,1");
    app.add_flag("--no-timestamp", no_timestamp, "omit the generated-at line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        args.config.model = parse_model(args.model);
        args.config.kernel_spec = parse_kernel(args.kernel, args.config.sigma2);
        args.config.timestamp = !no_timestamp;
        if (!args.grid_spec.empty()) {
            parse_grid_spec(args.grid_spec, args.config.grid);
        }

        const Dataset data = ingest(args.csv_path, args.output_col, args.input_cols);

        if (args.command == "fit") {
            cmd_fit(args, data, out);
        } else if (args.command == "forecast") {
            cmd_forecast(args, data, out);
        } else if (args.command == "gridsearch") {
            cmd_gridsearch(args, data, out);
        } else if (args.command == "compare") {
            cmd_compare(args, data, out);
        } else {
            throw std::invalid_argument("unknown command '" + args.command +
                                        "'; expected fit, forecast, gridsearch or compare");
        }
        return 0;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace greyml::cli
