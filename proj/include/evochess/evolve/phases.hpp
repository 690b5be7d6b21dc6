#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "evochess/arena/book.hpp"
#include "evochess/arena/game.hpp"
#include "evochess/core/epd.hpp"
#include "evochess/evolve/training.hpp"
#include "evochess/ga/codec.hpp"
#include "evochess/ga/generation.hpp"
#include "evochess/search/search.hpp"

// The three evolution phases: (1) evaluation weights learned from the move
// choices of game winners, (2) coevolution of the per-run phase-1 winners by
// round-robin match play, (3) search parameters evolved to minimize the total
// node count over a tactical suite with the phase-2 weights frozen.

namespace evochess {

struct PhaseReport {
    std::vector<double> best_fitness;  ///< index = generation, 0 = initial population
    std::vector<double> mean_fitness;
    double wall_seconds = 0.0;
};

struct EvalPhaseResult {
    PhaseReport report;
    EvalOrganism best;
};

struct SearchPhaseResult {
    PhaseReport report;
    SearchOrganism best;
    std::uint64_t best_total_nodes = 0;  ///< node count behind best.fitness
    std::uint64_t node_budget = 0;       ///< |suite| * node_cap
};

namespace detail {

template <typename Params>
void record_generation(PhaseReport& report, const std::vector<Organism<Params>>& pop) {
    double best = pop.front().fitness;
    double sum = 0.0;
    for (const auto& o : pop) {
        if (o.fitness > best) best = o.fitness;
        sum += o.fitness;
    }
    report.best_fitness.push_back(best);
    report.mean_fitness.push_back(sum / static_cast<double>(pop.size()));
}

template <typename Params>
const Organism<Params>& best_of(const std::vector<Organism<Params>>& pop) {
    return pop[fitness_order(pop).front()];
}

class StopWatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/// Per-generation observer: generation index (0 = initial population) and the
/// scored population. Used for logging and checkpointing.
template <typename Params>
using GenerationCallback = std::function<void(int, const std::vector<Organism<Params>>&)>;

/// Phase 1: evolves 224-bit evaluation genomes against the training set,
/// fitness = (number of 1-ply move matches)^2. Elitism makes the best-fitness
/// series non-decreasing. Deterministic for a given rng state.
inline EvalPhaseResult run_eval_evolution(const TrainingSet& ts, const GAConfig& cfg, Rng& rng,
                                          int jobs = 1,
                                          const GenerationCallback<EvalParams>& on_generation = {}) {
    if (ts.pairs.empty()) throw std::invalid_argument("run_eval_evolution: empty training set");
    cfg.validate();
    detail::StopWatch watch;

    auto fitness = [&](const EvalOrganism& o) { return move_match_fitness(o.decoded, ts, jobs); };

    std::vector<EvalOrganism> pop;
    pop.reserve(static_cast<std::size_t>(cfg.population_size));
    for (int i = 0; i < cfg.population_size; ++i)
        pop.push_back(make_organism<EvalParams>(random_chromosome(GenomeKind::Evaluation, rng)));
    for (auto& o : pop) o.fitness = fitness(o);

    PhaseReport report;
    detail::record_generation(report, pop);
    if (on_generation) on_generation(0, pop);

    for (int gen = 1; gen <= cfg.generations; ++gen) {
        pop = next_generation(pop, cfg, fitness, rng);
        detail::record_generation(report, pop);
        if (on_generation) on_generation(gen, pop);
    }

    report.wall_seconds = watch.seconds();
    return EvalPhaseResult{std::move(report), detail::best_of(pop)};
}

/// Round-robin fitness: every organism plays `games_per_pair` games against
/// every other (colors split evenly), each game from its own opening-book
/// line; returns match points per organism (win 1, draw 0.5). Search is plain
/// alpha-beta: every selective feature off.
inline std::vector<double> round_robin_points(const std::vector<EvalOrganism>& pop,
                                              const GameControl& control,
                                              const OpeningBook& book, int games_per_pair = 4,
                                              int jobs = 1) {
    if (pop.size() < 2) throw std::invalid_argument("round_robin_points: need two organisms");
    if (games_per_pair < 2 || games_per_pair % 2 != 0)
        throw std::invalid_argument("round_robin_points: games_per_pair must be even");

    struct Pairing {
        std::size_t white, black, line;
    };
    std::vector<Pairing> schedule;
    for (std::size_t i = 0; i < pop.size(); ++i)
        for (std::size_t j = i + 1; j < pop.size(); ++j)
            for (int g = 0; g < games_per_pair; ++g) {
                std::size_t line = schedule.size();
                if (g % 2 == 0) schedule.push_back({i, j, line});
                else schedule.push_back({j, i, line});
            }
    if (schedule.size() > book.size())
        throw std::out_of_range("round_robin_points: " + std::to_string(schedule.size()) +
                                " games per generation need as many book lines, book has " +
                                std::to_string(book.size()));

    const SearchParams plain = SearchParams::all_off();
    std::vector<GameRecord> records(schedule.size());
    parallel_for(schedule.size(), jobs, [&](std::size_t g) {
        const Pairing& pairing = schedule[g];
        EngineConfig white{"org" + std::to_string(pairing.white), pop[pairing.white].decoded,
                           plain};
        EngineConfig black{"org" + std::to_string(pairing.black), pop[pairing.black].decoded,
                           plain};
        records[g] = play_game(white, black, control, book.line(pairing.line));
    });

    std::vector<double> points(pop.size(), 0.0);
    for (std::size_t g = 0; g < schedule.size(); ++g) {
        switch (records[g].game.result) {
            case GameResult::WhiteWin: points[schedule[g].white] += 1.0; break;
            case GameResult::BlackWin: points[schedule[g].black] += 1.0; break;
            default:
                points[schedule[g].white] += 0.5;
                points[schedule[g].black] += 0.5;
        }
    }
    return points;
}

/// Phase 2: coevolves the phase-1 run winners. Fitness is relational (match
/// points against the current population), so the best-fitness series may
/// fluctuate; elitism still carries the incumbent's chromosome forward
/// unchanged. `seeds` must match the configured population size.
inline EvalPhaseResult run_coevolution(const std::vector<EvalOrganism>& seeds,
                                       const GAConfig& cfg, const GameControl& control,
                                       const OpeningBook& book, Rng& rng, int games_per_pair = 4,
                                       int jobs = 1,
                                       const GenerationCallback<EvalParams>& on_generation = {}) {
    cfg.validate();
    control.validate();
    if (seeds.size() != static_cast<std::size_t>(cfg.population_size))
        throw std::invalid_argument("run_coevolution: " + std::to_string(seeds.size()) +
                                    " seed organisms for configured population of " +
                                    std::to_string(cfg.population_size));
    detail::StopWatch watch;

    auto score = [&](std::vector<EvalOrganism>& pop) {
        std::vector<double> points = round_robin_points(pop, control, book, games_per_pair, jobs);
        for (std::size_t i = 0; i < pop.size(); ++i) pop[i].fitness = points[i];
    };

    std::vector<EvalOrganism> pop = seeds;
    score(pop);

    PhaseReport report;
    detail::record_generation(report, pop);
    if (on_generation) on_generation(0, pop);

    for (int gen = 1; gen <= cfg.generations; ++gen) {
        // Fitness is relational: breed on current points, then re-score the
        // whole new population (the elite included) by round-robin.
        pop = next_generation(pop, cfg, [](const EvalOrganism&) { return 0.0; }, rng);
        score(pop);
        detail::record_generation(report, pop);
        if (on_generation) on_generation(gen, pop);
    }

    report.wall_seconds = watch.seconds();
    return EvalPhaseResult{std::move(report), detail::best_of(pop)};
}

/// Total search_nodes_to_solution over the suite: the phase-3 raw objective
/// (lower is better). Unsolved positions cost exactly `node_cap`.
inline std::uint64_t node_count_total(const SearchParams& params, const EvalParams& frozen_eval,
                                      const std::vector<TestCase>& suite, std::uint64_t node_cap,
                                      int jobs = 1) {
    if (suite.empty()) throw std::invalid_argument("node_count_total: empty suite");
    std::vector<std::uint64_t> counts(suite.size(), 0);
    parallel_for(suite.size(), jobs, [&](std::size_t i) {
        counts[i] = search_nodes_to_solution(suite[i], frozen_eval, params, node_cap);
    });
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) total += c;
    return total;
}

/// Phase-3 fitness: the node budget left unspent, |suite| * cap - total.
/// An affine reflection of the node count, so minimizing nodes maximizes
/// fitness and fitness-proportional selection stays meaningful.
inline double node_count_fitness(const SearchParams& params, const EvalParams& frozen_eval,
                                 const std::vector<TestCase>& suite, std::uint64_t node_cap,
                                 int jobs = 1) {
    std::uint64_t budget = static_cast<std::uint64_t>(suite.size()) * node_cap;
    return static_cast<double>(budget - node_count_total(params, frozen_eval, suite, node_cap, jobs));
}

/// Phase 3: evolves 70-bit search genomes over the tactical suite with the
/// evaluation weights frozen. The initial population has the all-features-off
/// organism in slot 0 (the plain alpha-beta baseline, which elitism then
/// forces every later generation to match or beat) and random genomes in the
/// rest. Deterministic for a given rng state.
inline SearchPhaseResult run_search_evolution(const std::vector<TestCase>& suite,
                                              const EvalParams& frozen_eval, const GAConfig& cfg,
                                              std::uint64_t node_cap, Rng& rng, int jobs = 1,
                                              const GenerationCallback<SearchParams>& on_generation = {}) {
    if (suite.empty()) throw std::invalid_argument("run_search_evolution: empty suite");
    if (node_cap == 0) throw std::invalid_argument("run_search_evolution: node_cap must be positive");
    cfg.validate();
    detail::StopWatch watch;

    auto fitness = [&](const SearchOrganism& o) {
        return node_count_fitness(o.decoded, frozen_eval, suite, node_cap, jobs);
    };

    std::vector<SearchOrganism> pop;
    pop.reserve(static_cast<std::size_t>(cfg.population_size));
    pop.push_back(make_organism<SearchParams>(encode_search(SearchParams::all_off())));
    for (int i = 1; i < cfg.population_size; ++i)
        pop.push_back(make_organism<SearchParams>(random_chromosome(GenomeKind::Search, rng)));
    for (auto& o : pop) o.fitness = fitness(o);

    const std::uint64_t budget = static_cast<std::uint64_t>(suite.size()) * node_cap;
    PhaseReport report;
    detail::record_generation(report, pop);
    if (on_generation) on_generation(0, pop);

    for (int gen = 1; gen <= cfg.generations; ++gen) {
        pop = next_generation(pop, cfg, fitness, rng);
        detail::record_generation(report, pop);
        if (on_generation) on_generation(gen, pop);
    }

    report.wall_seconds = watch.seconds();
    const SearchOrganism& best = detail::best_of(pop);
    return SearchPhaseResult{std::move(report), best,
                             budget - static_cast<std::uint64_t>(best.fitness), budget};
}

}  // namespace evochess
