#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "srgm/models.hpp"
#include "srgm/rng.hpp"

namespace srgm {

using ObjectiveFn = std::function<double(Params)>;

// ---------------------------------------------------------------------------
// Configurations. Defaults are the library's standard settings; everything is
// overridable per run.

struct CsConfig {
    int nests = 10;
    double discovery_rate = 0.25;  // fraction of worst nests rebuilt per generation
    double step_scale = 0.01;      // alpha in the Levy move
    int max_iter = 100;
    int cuckoos = 1;  // new Levy solutions per generation
    int eggs = 2;     // components per solution; fixed by the 2-parameter curves
};

struct FaConfig {
    int fireflies = 25;
    int dimensions = 2;  // fixed by the 2-parameter curves
    int max_iter = 100;
    double alpha = 0.01;  // randomization, in units of bound width
    double beta0 = 1.0;   // attractiveness at distance zero
    double gamma = 1.0;   // absorption, on unit-scaled coordinates
};

struct PsoConfig {
    int swarm = 20;
    double inertia = 0.729;
    double cognitive = 1.49445;
    double social = 1.49445;
    int max_iter = 100;
};

struct AcoConfig {
    int archive_size = 10;
    double locality = 0.1;        // q: spread of the kernel-rank weighting
    double deviation_ratio = 0.85;  // xi: scales the per-dimension sampling deviation
    int ants = 10;
    int max_iter = 100;
};

using OptimizerConfig = std::variant<CsConfig, FaConfig, PsoConfig, AcoConfig>;

inline void validate(const CsConfig& c) {
    if (c.nests < 1 || c.cuckoos < 1 || c.max_iter < 1)
        throw std::domain_error("cs config: counts and max_iter must be >= 1");
    if (!(c.discovery_rate >= 0.0) || !(c.discovery_rate <= 1.0))
        throw std::domain_error("cs config: discovery rate must be in [0, 1]");
    if (!(c.step_scale >= 0.0)) throw std::domain_error("cs config: step scale must be >= 0");
    if (c.eggs != 2) throw std::domain_error("cs config: eggs must be 2, one per curve parameter");
}

inline void validate(const FaConfig& c) {
    if (c.fireflies < 1 || c.max_iter < 1)
        throw std::domain_error("fa config: counts and max_iter must be >= 1");
    if (!(c.alpha >= 0.0) || !(c.alpha <= 1.0))
        throw std::domain_error("fa config: alpha must be in [0, 1]");
    if (!(c.beta0 >= 0.0) || !(c.gamma >= 0.0))
        throw std::domain_error("fa config: beta0 and gamma must be >= 0");
    if (c.dimensions != 2)
        throw std::domain_error("fa config: dimensions must be 2, one per curve parameter");
}

inline void validate(const PsoConfig& c) {
    if (c.swarm < 1 || c.max_iter < 1)
        throw std::domain_error("pso config: counts and max_iter must be >= 1");
    if (!(c.inertia >= 0.0) || !(c.inertia <= 1.0))
        throw std::domain_error("pso config: inertia must be in [0, 1]");
    if (!(c.cognitive >= 0.0) || !(c.social >= 0.0))
        throw std::domain_error("pso config: acceleration coefficients must be >= 0");
}

inline void validate(const AcoConfig& c) {
    if (c.archive_size < 2 || c.ants < 1 || c.max_iter < 1)
        throw std::domain_error("aco config: archive needs >= 2 entries, ants and max_iter >= 1");
    if (!(c.locality >= 0.0) || !(c.locality <= 1.0))
        throw std::domain_error("aco config: locality must be in [0, 1]");
    if (!(c.deviation_ratio >= 0.0) || !(c.deviation_ratio <= 1.0))
        throw std::domain_error("aco config: deviation ratio must be in [0, 1]");
}

inline void validate(const OptimizerConfig& cfg) {
    std::visit([](const auto& c) { validate(c); }, cfg);
}

inline std::string_view algorithm_id(const OptimizerConfig& cfg) {
    struct Visitor {
        std::string_view operator()(const CsConfig&) const { return "cs"; }
        std::string_view operator()(const FaConfig&) const { return "fa"; }
        std::string_view operator()(const PsoConfig&) const { return "pso"; }
        std::string_view operator()(const AcoConfig&) const { return "aco"; }
    };
    return std::visit(Visitor{}, cfg);
}

inline OptimizerConfig default_config(std::string_view algorithm) {
    if (algorithm == "cs") return CsConfig{};
    if (algorithm == "fa") return FaConfig{};
    if (algorithm == "pso") return PsoConfig{};
    if (algorithm == "aco") return AcoConfig{};
    throw std::invalid_argument("unknown algorithm '" + std::string(algorithm) +
                                "': valid names are cs, fa, pso, aco");
}

inline int max_iterations(const OptimizerConfig& cfg) {
    return std::visit([](const auto& c) { return c.max_iter; }, cfg);
}

inline void set_max_iterations(OptimizerConfig& cfg, int iters) {
    std::visit([iters](auto& c) { c.max_iter = iters; }, cfg);
}

// ---------------------------------------------------------------------------
// Populations and results.

struct Candidate {
    Params pos;
    double fitness = std::numeric_limits<double>::infinity();
};

using Population = std::vector<Candidate>;

struct PsoParticle {
    Params pos;
    double fitness = std::numeric_limits<double>::infinity();
    double vel_a = 0.0;
    double vel_b = 0.0;
    Params best_pos;
    double best_fitness = std::numeric_limits<double>::infinity();
};

using PsoSwarm = std::vector<PsoParticle>;

// One seeded optimizer run. trace holds the best-so-far fitness after each
// generation, so it is non-increasing by construction.
struct RunResult {
    Params best_params;
    double best_fitness = std::numeric_limits<double>::infinity();
    std::vector<double> trace;
    double wall_time_ms = 0.0;
    int iter_of_best = 0;  // first generation (1-based) whose best equals the final value
};

namespace detail {

inline double clamp(double x, double lo, double hi) { return x < lo ? lo : (x > hi ? hi : x); }

inline Params clamp_to(const SearchSpace& space, Params p) {
    return {clamp(p.a, space.a_min, space.a_max), clamp(p.b, space.b_min, space.b_max)};
}

template <class Rng>
Params uniform_params(Rng& rng, const SearchSpace& space) {
    Params p;
    p.a = uniform(rng, space.a_min, space.a_max);
    p.b = uniform(rng, space.b_min, space.b_max);
    return p;
}

inline std::size_t best_index(const Population& pop) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i)
        if (pop[i].fitness < pop[best].fitness) best = i;
    return best;
}

// Mantegna's construction for a stable step with index beta = 1.5:
// u / |v|^{1/beta} with u ~ N(0, sigma_u^2), v ~ N(0, 1).
template <class Rng>
double mantegna_levy(Rng& rng) {
    constexpr double sigma_u = 0.6965745025576968;  // closed form for beta = 1.5
    double u = sigma_u * standard_normal(rng);
    double v = standard_normal(rng);
    double mag = std::abs(v);
    if (mag < 1e-300) mag = 1e-300;
    return u / std::pow(mag, 1.0 / 1.5);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Cuckoo search.

// One Levy flight from current. Per coordinate: x += alpha * L * (x - best)
// with L heavy-tailed (Mantegna, beta = 1.5). The (x - best) factor keeps the
// move on each axis commensurate with that axis' scale and aims the flight
// along the line to the incumbent best. Result is clamped to the space.
template <class Rng>
Params levy_step(Params current, Params best, double alpha, const SearchSpace& space, Rng& rng) {
    double step_a = detail::mantegna_levy(rng);
    double step_b = detail::mantegna_levy(rng);
    Params out;
    out.a = current.a + alpha * step_a * (current.a - best.a);
    out.b = current.b + alpha * step_b * (current.b - best.b);
    return detail::clamp_to(space, out);
}

// One generation: each new cuckoo starts a Levy flight from a randomly chosen
// nest, then challenges another uniformly chosen nest and takes it over when
// strictly better (ties keep the incumbent). Afterwards the worst
// ceil(p_a * n) nests are rebuilt from fresh uniform samples; the single best
// nest is never rebuilt.
template <class Rng>
void cs_step(Population& nests, const ObjectiveFn& obj, const SearchSpace& space,
             const CsConfig& cfg, Rng& rng) {
    const std::size_t n = nests.size();
    for (int c = 0; c < cfg.cuckoos; ++c) {
        std::size_t source = detail::uniform_index(rng, n);
        const Params& best = nests[detail::best_index(nests)].pos;
        Candidate cuckoo;
        cuckoo.pos = levy_step(nests[source].pos, best, cfg.step_scale, space, rng);
        cuckoo.fitness = obj(cuckoo.pos);
        std::size_t target = detail::uniform_index(rng, n);
        if (cuckoo.fitness < nests[target].fitness) nests[target] = cuckoo;
    }

    std::size_t rebuild = static_cast<std::size_t>(
        std::ceil(cfg.discovery_rate * static_cast<double>(n)));
    if (rebuild == 0) return;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return nests[x].fitness > nests[y].fitness;  // worst first
    });
    std::size_t keep = detail::best_index(nests);
    std::size_t rebuilt = 0;
    for (std::size_t idx : order) {
        if (rebuilt == rebuild) break;
        if (idx == keep) continue;
        nests[idx].pos = detail::uniform_params(rng, space);
        nests[idx].fitness = obj(nests[idx].pos);
        ++rebuilt;
    }
}

// ---------------------------------------------------------------------------
// Firefly algorithm.
//
// Distances, attraction and the random walk all act on unit-scaled
// coordinates ((x - min) / width per axis): with gamma of order 1 the
// attraction would die out numerically on a raw axis thousands of units wide,
// and the walk term has to perturb both axes in proportion to their spans.

namespace detail {

inline double fa_norm_dist2(const SearchSpace& space, Params x, Params y) {
    double da = (x.a - y.a) / space.a_width();
    double db = (x.b - y.b) / space.b_width();
    return da * da + db * db;
}

}  // namespace detail

// One generation of the pairwise movement loop. Every firefly moves toward
// each brighter one it is compared against: attraction beta0 e^{-gamma r^2}
// along (x_j - x_i) plus an alpha * (rand - 1/2) walk per axis, re-evaluating
// after every move. The generation's brightest firefly only performs the
// random walk.
template <class Rng>
void fa_step(Population& flies, const ObjectiveFn& obj, const SearchSpace& space,
             const FaConfig& cfg, Rng& rng) {
    const double wa = space.a_width();
    const double wb = space.b_width();

    auto random_walk = [&](Params p) {
        p.a += cfg.alpha * (rng.next_double() - 0.5) * wa;
        p.b += cfg.alpha * (rng.next_double() - 0.5) * wb;
        return detail::clamp_to(space, p);
    };

    for (std::size_t i = 0; i < flies.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (!(flies[j].fitness < flies[i].fitness)) continue;
            double r2 = detail::fa_norm_dist2(space, flies[i].pos, flies[j].pos);
            double beta = cfg.beta0 * std::exp(-cfg.gamma * r2);
            Params moved = flies[i].pos;
            moved.a += beta * (flies[j].pos.a - flies[i].pos.a);
            moved.b += beta * (flies[j].pos.b - flies[i].pos.b);
            moved = random_walk(moved);
            flies[i].pos = moved;
            flies[i].fitness = obj(moved);
        }
    }

    std::size_t brightest = detail::best_index(flies);
    flies[brightest].pos = random_walk(flies[brightest].pos);
    flies[brightest].fitness = obj(flies[brightest].pos);
}

// ---------------------------------------------------------------------------
// Particle swarm, global-best topology.

// Standard velocity/position update with inertia w and per-coordinate random
// cognitive/social pulls. Velocities are capped at 20% of the bound width per
// axis; positions are clamped to the space.
template <class Rng>
void pso_step(PsoSwarm& swarm, const ObjectiveFn& obj, const SearchSpace& space,
              const PsoConfig& cfg, Rng& rng) {
    constexpr double velocity_cap_fraction = 0.2;
    const double cap_a = velocity_cap_fraction * space.a_width();
    const double cap_b = velocity_cap_fraction * space.b_width();

    std::size_t g = 0;
    for (std::size_t i = 1; i < swarm.size(); ++i)
        if (swarm[i].best_fitness < swarm[g].best_fitness) g = i;
    const Params gbest = swarm[g].best_pos;

    for (PsoParticle& particle : swarm) {
        double r1a = rng.next_double(), r2a = rng.next_double();
        double r1b = rng.next_double(), r2b = rng.next_double();
        particle.vel_a = cfg.inertia * particle.vel_a +
                         cfg.cognitive * r1a * (particle.best_pos.a - particle.pos.a) +
                         cfg.social * r2a * (gbest.a - particle.pos.a);
        particle.vel_b = cfg.inertia * particle.vel_b +
                         cfg.cognitive * r1b * (particle.best_pos.b - particle.pos.b) +
                         cfg.social * r2b * (gbest.b - particle.pos.b);
        particle.vel_a = detail::clamp(particle.vel_a, -cap_a, cap_a);
        particle.vel_b = detail::clamp(particle.vel_b, -cap_b, cap_b);
        particle.pos.a += particle.vel_a;
        particle.pos.b += particle.vel_b;
        particle.pos = detail::clamp_to(space, particle.pos);
        particle.fitness = obj(particle.pos);
        if (particle.fitness < particle.best_fitness) {
            particle.best_fitness = particle.fitness;
            particle.best_pos = particle.pos;
        }
    }
}

// ---------------------------------------------------------------------------
// Ant colony for continuous domains (solution-archive Gaussian sampling).

// The archive stays sorted best-first. Each ant picks a kernel by
// rank-weighted roulette (locality q), then samples each dimension from a
// Gaussian centred on the kernel with deviation xi * mean absolute deviation
// to the other archive members, floored at 1e-12 of the bound width. New ants
// are merged in and the worst entries truncated.
template <class Rng>
void aco_step(Population& archive, const ObjectiveFn& obj, const SearchSpace& space,
              const AcoConfig& cfg, Rng& rng) {
    const std::size_t k = archive.size();
    const double floor_a = 1e-12 * space.a_width();
    const double floor_b = 1e-12 * space.b_width();

    std::vector<double> cumulative(k);
    {
        double total = 0.0;
        for (std::size_t rank = 0; rank < k; ++rank) {
            double z = static_cast<double>(rank) /
                       (cfg.locality * static_cast<double>(k) + 1e-300);
            total += std::exp(-0.5 * z * z);
            cumulative[rank] = total;
        }
        for (double& c : cumulative) c /= total;
    }

    auto pick_kernel = [&](double u) {
        for (std::size_t rank = 0; rank < k; ++rank)
            if (u <= cumulative[rank]) return rank;
        return k - 1;
    };

    auto deviation = [&](std::size_t l, auto coord, double floor_value) {
        double sum = 0.0;
        for (std::size_t r = 0; r < k; ++r)
            if (r != l) sum += std::abs(coord(archive[r].pos) - coord(archive[l].pos));
        double dev = cfg.deviation_ratio * sum / static_cast<double>(k - 1);
        return dev < floor_value ? floor_value : dev;
    };

    Population ants;
    ants.reserve(static_cast<std::size_t>(cfg.ants));
    for (int m = 0; m < cfg.ants; ++m) {
        std::size_t l = pick_kernel(rng.next_double());
        double sd_a = deviation(l, [](Params p) { return p.a; }, floor_a);
        double sd_b = deviation(l, [](Params p) { return p.b; }, floor_b);
        Candidate ant;
        ant.pos.a = archive[l].pos.a + sd_a * detail::standard_normal(rng);
        ant.pos.b = archive[l].pos.b + sd_b * detail::standard_normal(rng);
        ant.pos = detail::clamp_to(space, ant.pos);
        ant.fitness = obj(ant.pos);
        ants.push_back(ant);
    }

    archive.insert(archive.end(), ants.begin(), ants.end());
    std::stable_sort(archive.begin(), archive.end(),
                     [](const Candidate& x, const Candidate& y) { return x.fitness < y.fitness; });
    archive.resize(k);
}

// ---------------------------------------------------------------------------
// The shared driver.

namespace detail {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace detail

// Runs one seeded, single-threaded minimization of obj over space. The best
// candidate is tracked across every evaluation, so the trace is monotone even
// for moves that worsen a population member. Identical (obj, space, cfg,
// seed) replays the identical result apart from wall_time_ms.
inline RunResult minimize(const ObjectiveFn& obj, const SearchSpace& space,
                          const OptimizerConfig& cfg, std::uint64_t seed) {
    validate(space);
    validate(cfg);

    RunResult result;
    ObjectiveFn probe = [&](Params p) {
        double f = obj(p);
        if (f < result.best_fitness) {
            result.best_fitness = f;
            result.best_params = p;
        }
        return f;
    };

    SplitMix64 rng(seed);
    const int iters = max_iterations(cfg);
    result.trace.reserve(static_cast<std::size_t>(iters));

    auto init_population = [&](int count) {
        Population pop(static_cast<std::size_t>(count));
        for (Candidate& c : pop) {
            c.pos = detail::uniform_params(rng, space);
            c.fitness = probe(c.pos);
        }
        return pop;
    };

    const auto started = std::chrono::steady_clock::now();
    std::visit(detail::overloaded{
                   [&](const CsConfig& c) {
                       Population nests = init_population(c.nests);
                       for (int it = 0; it < iters; ++it) {
                           cs_step(nests, probe, space, c, rng);
                           result.trace.push_back(result.best_fitness);
                       }
                   },
                   [&](const FaConfig& c) {
                       Population flies = init_population(c.fireflies);
                       for (int it = 0; it < iters; ++it) {
                           fa_step(flies, probe, space, c, rng);
                           result.trace.push_back(result.best_fitness);
                       }
                   },
                   [&](const PsoConfig& c) {
                       PsoSwarm swarm(static_cast<std::size_t>(c.swarm));
                       for (PsoParticle& particle : swarm) {
                           particle.pos = detail::uniform_params(rng, space);
                           particle.fitness = probe(particle.pos);
                           particle.best_pos = particle.pos;
                           particle.best_fitness = particle.fitness;
                       }
                       for (int it = 0; it < iters; ++it) {
                           pso_step(swarm, probe, space, c, rng);
                           result.trace.push_back(result.best_fitness);
                       }
                   },
                   [&](const AcoConfig& c) {
                       Population archive = init_population(c.archive_size);
                       std::stable_sort(archive.begin(), archive.end(),
                                        [](const Candidate& x, const Candidate& y) {
                                            return x.fitness < y.fitness;
                                        });
                       for (int it = 0; it < iters; ++it) {
                           aco_step(archive, probe, space, c, rng);
                           result.trace.push_back(result.best_fitness);
                       }
                   },
               },
               cfg);
    const auto finished = std::chrono::steady_clock::now();
    result.wall_time_ms = std::chrono::duration<double, std::milli>(finished - started).count();

    if (!std::isfinite(result.best_fitness))
        throw std::runtime_error("optimizer '" + std::string(algorithm_id(cfg)) +
                                 "' found no finite fitness: the objective rejected every probe");

    result.iter_of_best = static_cast<int>(result.trace.size());
    for (std::size_t i = 0; i < result.trace.size(); ++i) {
        if (result.trace[i] == result.best_fitness) {
            result.iter_of_best = static_cast<int>(i) + 1;
            break;
        }
    }
    return result;
}

}  // namespace srgm
