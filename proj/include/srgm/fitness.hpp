#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "srgm/dataset.hpp"
#include "srgm/models.hpp"

namespace srgm {

enum class Metric { rmse, euclidean };

inline std::string_view metric_id(Metric m) { return m == Metric::rmse ? "rmse" : "ed"; }

inline Metric parse_metric(std::string_view name) {
    if (name == "rmse") return Metric::rmse;
    if (name == "ed") return Metric::euclidean;
    throw std::invalid_argument("unknown metric '" + std::string(name) + "': valid names are rmse, ed");
}

namespace detail {

inline double squared_error_sum(std::span<const double> actual, std::span<const double> predicted) {
    if (actual.size() != predicted.size())
        throw std::invalid_argument("metric inputs differ in length: " + std::to_string(actual.size()) +
                                    " vs " + std::to_string(predicted.size()));
    if (actual.empty()) throw std::invalid_argument("metric inputs must be non-empty");
    double sum = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        double diff = actual[i] - predicted[i];
        sum += diff * diff;
    }
    return sum;
}

}  // namespace detail

// sqrt(mean of squared differences)
inline double rmse(std::span<const double> actual, std::span<const double> predicted) {
    return std::sqrt(detail::squared_error_sum(actual, predicted) / static_cast<double>(actual.size()));
}

// sqrt(sum of squared differences); equals sqrt(N) * rmse
inline double euclidean_distance(std::span<const double> actual, std::span<const double> predicted) {
    return std::sqrt(detail::squared_error_sum(actual, predicted));
}

// Fitting error of one model curve against one data window. Evaluation is a
// pure function of the parameters; lower is better.
struct Objective {
    ModelKind kind = ModelKind::go_exponential;
    FailureDataset window;  // the points being fitted, typically the training split
    Metric metric = Metric::rmse;

    double operator()(Params p) const;
};

// Metric between the window's counts and mean_value(kind, p, t_i) over the
// window. Overflow at extreme parameters comes back as +infinity so
// optimizers reject such points instead of crashing.
inline double evaluate(const Objective& obj, Params p) {
    if (obj.window.empty()) throw std::domain_error("objective window is empty");
    double sum = 0.0;
    for (const DataPoint& pt : obj.window.points) {
        double diff = pt.failures - mean_value(obj.kind, p, pt.time);
        sum += diff * diff;
    }
    double value = obj.metric == Metric::rmse
                       ? std::sqrt(sum / static_cast<double>(obj.window.size()))
                       : std::sqrt(sum);
    return std::isfinite(value) ? value : std::numeric_limits<double>::infinity();
}

inline double Objective::operator()(Params p) const { return evaluate(*this, p); }

}  // namespace srgm
