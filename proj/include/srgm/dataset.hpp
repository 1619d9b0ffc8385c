#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srgm/models.hpp"
#include "srgm/rng.hpp"

namespace srgm {

struct DataPoint {
    double time = 0.0;      // strictly increasing across a dataset
    double failures = 0.0;  // cumulative count, non-decreasing
};

// Ordered (time, cumulative failures) observations. Counts are stored as
// reals: recorded failure logs are integer-valued but model comparisons are
// not.
struct FailureDataset {
    std::string name;
    std::vector<DataPoint> points;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

// Chronological prefix/suffix of one dataset. test may be empty; split
// fragments are exempt from the 3-point minimum that applies to full
// datasets.
struct DataSplit {
    FailureDataset train;
    FailureDataset test;
};

enum class GenMode { deterministic, poisson };

inline void validate(const FailureDataset& d, std::size_t min_points = 3) {
    if (d.points.size() < min_points)
        throw std::invalid_argument("dataset '" + d.name + "' has " +
                                    std::to_string(d.points.size()) + " points, needs at least " +
                                    std::to_string(min_points));
    for (std::size_t i = 0; i < d.points.size(); ++i) {
        const DataPoint& pt = d.points[i];
        if (!std::isfinite(pt.time) || !std::isfinite(pt.failures))
            throw std::invalid_argument("dataset '" + d.name + "' row " + std::to_string(i + 1) +
                                        ": values must be finite");
        if (!(pt.time > 0.0))
            throw std::invalid_argument("dataset '" + d.name + "' row " + std::to_string(i + 1) +
                                        ": time must be positive");
        if (pt.failures < 0.0)
            throw std::invalid_argument("dataset '" + d.name + "' row " + std::to_string(i + 1) +
                                        ": cumulative count must be non-negative");
        if (i > 0 && !(pt.time > d.points[i - 1].time))
            throw std::invalid_argument("dataset '" + d.name + "' row " + std::to_string(i + 1) +
                                        ": time must be strictly increasing");
        if (i > 0 && pt.failures < d.points[i - 1].failures)
            throw std::invalid_argument("dataset '" + d.name + "' row " + std::to_string(i + 1) +
                                        ": cumulative count must not decrease");
    }
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline double parse_cell(std::string_view cell, std::size_t line_no, const std::string& name) {
    std::string text{trim(cell)};
    if (text.empty())
        throw std::invalid_argument("dataset '" + name + "' line " + std::to_string(line_no) +
                                    ": empty cell");
    char* end = nullptr;
    double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size())
        throw std::invalid_argument("dataset '" + name + "' line " + std::to_string(line_no) +
                                    ": not a number: '" + text + "'");
    return value;
}

}  // namespace detail

// Reads the CSV ingest format: UTF-8, mandatory "time,failures" header,
// '.' decimal separator, LF or CRLF endings. Errors name the offending line
// (1-based, counting the header).
inline FailureDataset load_csv(std::istream& in, std::string name = "dataset") {
    FailureDataset out;
    out.name = std::move(name);
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line))
        throw std::invalid_argument("dataset '" + out.name + "': empty input, expected 'time,failures' header");
    ++line_no;
    if (detail::trim(line) != "time,failures")
        throw std::invalid_argument("dataset '" + out.name + "' line 1: expected header 'time,failures', got '" +
                                    std::string(detail::trim(line)) + "'");

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view row = detail::trim(line);
        if (row.empty()) continue;
        std::size_t comma = row.find(',');
        if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos)
            throw std::invalid_argument("dataset '" + out.name + "' line " + std::to_string(line_no) +
                                        ": expected exactly two comma-separated cells");
        DataPoint pt;
        pt.time = detail::parse_cell(row.substr(0, comma), line_no, out.name);
        pt.failures = detail::parse_cell(row.substr(comma + 1), line_no, out.name);
        if (!out.points.empty() && !(pt.time > out.points.back().time))
            throw std::invalid_argument("dataset '" + out.name + "' line " + std::to_string(line_no) +
                                        ": time must be strictly increasing");
        if (!out.points.empty() && pt.failures < out.points.back().failures)
            throw std::invalid_argument("dataset '" + out.name + "' line " + std::to_string(line_no) +
                                        ": cumulative count must not decrease");
        out.points.push_back(pt);
    }
    validate(out);
    return out;
}

inline FailureDataset load_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path.string());
    return load_csv(in, path.stem().string());
}

// 17 significant digits: enough for the text round-trip to reproduce every
// double bit-exactly.
inline void write_csv(const FailureDataset& d, std::ostream& out) {
    out << "time,failures\n";
    char buf[64];
    for (const DataPoint& pt : d.points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", pt.time, pt.failures);
        out << buf;
    }
    if (!out) throw std::runtime_error("write failed for dataset '" + d.name + "'");
}

inline void write_csv_file(const FailureDataset& d, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    write_csv(d, out);
}

// Chronological split. Train size is round-half-up of fraction * n, clamped
// to [1, n]; concatenating train then test reproduces the original order.
inline DataSplit split_chronological(const FailureDataset& d, double train_fraction) {
    if (!(train_fraction > 0.0) || !(train_fraction <= 1.0))
        throw std::domain_error("train fraction must be in (0, 1]");
    auto n = static_cast<double>(d.points.size());
    auto k = static_cast<std::size_t>(std::floor(train_fraction * n + 0.5));
    if (k < 1) k = 1;
    if (k > d.points.size()) k = d.points.size();

    DataSplit split;
    split.train.name = d.name;
    split.test.name = d.name;
    split.train.points.assign(d.points.begin(), d.points.begin() + static_cast<std::ptrdiff_t>(k));
    split.test.points.assign(d.points.begin() + static_cast<std::ptrdiff_t>(k), d.points.end());
    return split;
}

// Builds a dataset from a model curve. deterministic records mu(t_i) itself;
// poisson draws independent increments with means mu(t_i) - mu(t_{i-1}), so
// counts stay non-decreasing and the final count is Poisson(mu(t_last)).
inline FailureDataset generate_synthetic(ModelKind kind, Params p, const std::vector<double>& times,
                                         GenMode mode, std::uint64_t seed,
                                         std::string name = "synthetic") {
    if (times.size() < 3) throw std::domain_error("need at least 3 time points");
    FailureDataset out;
    out.name = std::move(name);
    out.points.reserve(times.size());

    SplitMix64 rng(seed);
    double prev_mu = 0.0;
    double cumulative = 0.0;
    for (double t : times) {
        double mu = mean_value(kind, p, t);
        DataPoint pt;
        pt.time = t;
        if (mode == GenMode::deterministic) {
            pt.failures = mu;
        } else {
            double increment_mean = mu - prev_mu;
            if (increment_mean < 0.0) increment_mean = 0.0;  // guard FP wobble; mu is non-decreasing
            cumulative += static_cast<double>(detail::poisson(rng, increment_mean));
            pt.failures = cumulative;
        }
        prev_mu = mu;
        out.points.push_back(pt);
    }
    validate(out);
    return out;
}

}  // namespace srgm
