#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace srgm {

// The four reliability growth curves. Each kind maps to exactly one pair of
// mean-value function mu(t) and failure intensity lambda(t) = d mu / dt.
enum class ModelKind {
    go_exponential,    // mu(t) = a (1 - e^{-bt})
    power,             // mu(t) = a t^b
    delayed_s_shaped,  // mu(t) = a (1 - (1 + bt) e^{-bt})
    musa_okumoto,      // mu(t) = a ln(1 + bt)
};

inline constexpr std::array<ModelKind, 4> all_models = {
    ModelKind::go_exponential,
    ModelKind::power,
    ModelKind::delayed_s_shaped,
    ModelKind::musa_okumoto,
};

// Curve parameters. a scales the expected total failure count, b shapes the
// detection rate. Both must be positive.
struct Params {
    double a = 0.0;
    double b = 0.0;
};

// Per-parameter box bounds the optimizers search inside.
struct SearchSpace {
    double a_min = 0.0;
    double a_max = 0.0;
    double b_min = 0.0;
    double b_max = 0.0;

    double a_width() const { return a_max - a_min; }
    double b_width() const { return b_max - b_min; }

    bool contains(Params p) const {
        return p.a >= a_min && p.a <= a_max && p.b >= b_min && p.b <= b_max;
    }
};

inline void validate(const SearchSpace& s) {
    if (!std::isfinite(s.a_min) || !std::isfinite(s.a_max) || !std::isfinite(s.b_min) ||
        !std::isfinite(s.b_max))
        throw std::domain_error("search space bounds must be finite");
    if (!(s.a_min > 0.0) || !(s.b_min > 0.0))
        throw std::domain_error("search space bounds must be positive");
    if (!(s.a_min < s.a_max) || !(s.b_min < s.b_max))
        throw std::domain_error("search space requires min < max on both axes");
}

// Default box: a in [1e-5, 2000], b in [1e-5, 1].
inline SearchSpace default_bounds() { return {1e-5, 2000.0, 1e-5, 1.0}; }

namespace detail {

// e^{-x} with an explicit cutoff: beyond the cutoff the true value is below
// double denormal range, so extreme bt seen during search stays well-defined
// instead of tripping FP underflow handling.
inline double exp_neg(double x) { return x > 700.0 ? 0.0 : std::exp(-x); }

inline void check_model_args(Params p, double t) {
    if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(t))
        throw std::domain_error("model arguments must be finite");
    if (!(p.a > 0.0) || !(p.b > 0.0))
        throw std::domain_error("model parameters a and b must be positive");
    if (t < 0.0) throw std::domain_error("time must be non-negative");
}

}  // namespace detail

// Expected cumulative failures by time t. mu(0) = 0 and mu is non-decreasing
// for every kind and all positive parameters.
inline double mean_value(ModelKind kind, Params p, double t) {
    detail::check_model_args(p, t);
    switch (kind) {
        case ModelKind::go_exponential:
            return p.a * (1.0 - detail::exp_neg(p.b * t));
        case ModelKind::power:
            return p.a * std::pow(t, p.b);
        case ModelKind::delayed_s_shaped: {
            double bt = p.b * t;
            return p.a * (1.0 - (1.0 + bt) * detail::exp_neg(bt));
        }
        case ModelKind::musa_okumoto:
            return p.a * std::log1p(p.b * t);
    }
    throw std::domain_error("unknown model kind");
}

// Instantaneous failure rate d mu / dt.
inline double failure_intensity(ModelKind kind, Params p, double t) {
    detail::check_model_args(p, t);
    switch (kind) {
        case ModelKind::go_exponential:
            return p.a * p.b * detail::exp_neg(p.b * t);
        case ModelKind::power:
            // a b t^{b-1} diverges at t = 0 once b < 1
            if (t == 0.0 && p.b < 1.0)
                throw std::domain_error("power-model intensity is singular at t = 0 for b < 1");
            return p.a * p.b * std::pow(t, p.b - 1.0);
        case ModelKind::delayed_s_shaped: {
            double bt = p.b * t;
            return p.a * p.b * p.b * t * detail::exp_neg(bt);
        }
        case ModelKind::musa_okumoto:
            return p.a * p.b / (1.0 + p.b * t);
    }
    throw std::domain_error("unknown model kind");
}

// Short machine ids used by the CLI and CSV reports.
inline std::string_view model_id(ModelKind kind) {
    switch (kind) {
        case ModelKind::go_exponential: return "go";
        case ModelKind::power: return "power";
        case ModelKind::delayed_s_shaped: return "dss";
        case ModelKind::musa_okumoto: return "mo";
    }
    return "?";
}

// Row labels used in rendered comparison tables.
inline std::string_view model_display_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::go_exponential: return "EXP(G-O)";
        case ModelKind::power: return "POW";
        case ModelKind::delayed_s_shaped: return "DSS";
        case ModelKind::musa_okumoto: return "M-O";
    }
    return "?";
}

inline ModelKind parse_model(std::string_view name) {
    for (ModelKind kind : all_models)
        if (name == model_id(kind)) return kind;
    throw std::invalid_argument("unknown model '" + std::string(name) +
                                "': valid names are go, power, dss, mo");
}

}  // namespace srgm
