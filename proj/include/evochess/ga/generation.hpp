#pragma once

#include <algorithm>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "evochess/ga/operators.hpp"
#include "evochess/util/text.hpp"

// Generation stepping with elitism, plus the text formats for GA settings and
// population checkpoints.

namespace evochess {

enum class SelectionKind { Proportional, Rank };

struct GAConfig {
    int population_size = 10;
    double crossover_rate = 0.75;
    double mutation_rate = 0.05;
    int generations = 50;
    SelectionKind selection = SelectionKind::Proportional;
    int elitism_count = 1;
    std::uint64_t random_seed = 1;

    bool operator==(const GAConfig&) const = default;

    void validate() const {
        if (population_size < 2) throw std::invalid_argument("GAConfig: population_size < 2");
        if (crossover_rate < 0.0 || crossover_rate > 1.0)
            throw std::invalid_argument("GAConfig: crossover_rate outside [0,1]");
        if (mutation_rate < 0.0 || mutation_rate > 1.0)
            throw std::invalid_argument("GAConfig: mutation_rate outside [0,1]");
        if (generations < 0) throw std::invalid_argument("GAConfig: negative generations");
        if (elitism_count < 1) throw std::invalid_argument("GAConfig: elitism_count < 1");
        if (elitism_count >= population_size)
            throw std::invalid_argument("GAConfig: elitism_count must leave room to breed");
    }
};

inline void save_ga_config(std::ostream& os, const GAConfig& cfg) {
    os << "population_size = " << cfg.population_size << '\n';
    os << "crossover_rate = " << cfg.crossover_rate << '\n';
    os << "mutation_rate = " << cfg.mutation_rate << '\n';
    os << "generations = " << cfg.generations << '\n';
    os << "selection = " << (cfg.selection == SelectionKind::Rank ? "rank" : "proportional")
       << '\n';
    os << "elitism_count = " << cfg.elitism_count << '\n';
    os << "random_seed = " << cfg.random_seed << '\n';
}

/// Reads `key = value` lines; # comments and blank lines are ignored. Keys
/// not present keep their defaults; unknown keys are rejected. The result is
/// validated before being returned.
inline GAConfig load_ga_config(std::istream& in) {
    GAConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = text::trim(line);
        if (sv.empty() || sv.front() == '#') continue;
        size_t eq = sv.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("ga config line " + std::to_string(line_no) +
                             ": expected `key = value`");
        std::string key{text::trim(sv.substr(0, eq))};
        std::string value{text::trim(sv.substr(eq + 1))};
        if (key == "population_size") cfg.population_size = text::parse_int<int>(value, key);
        else if (key == "crossover_rate") cfg.crossover_rate = text::parse_double(value, key);
        else if (key == "mutation_rate") cfg.mutation_rate = text::parse_double(value, key);
        else if (key == "generations") cfg.generations = text::parse_int<int>(value, key);
        else if (key == "elitism_count") cfg.elitism_count = text::parse_int<int>(value, key);
        else if (key == "random_seed") cfg.random_seed = text::parse_int<std::uint64_t>(value, key);
        else if (key == "selection") {
            if (value == "proportional") cfg.selection = SelectionKind::Proportional;
            else if (value == "rank") cfg.selection = SelectionKind::Rank;
            else
                throw ParseError("ga config line " + std::to_string(line_no) +
                                 ": selection must be proportional or rank");
        } else {
            throw ParseError("ga config line " + std::to_string(line_no) + ": unknown key " +
                             key);
        }
    }
    cfg.validate();
    return cfg;
}

/// Indices of `pop` ordered best-first (ties keep the earlier index first).
template <typename Params>
std::vector<size_t> fitness_order(const std::vector<Organism<Params>>& pop) {
    std::vector<size_t> order(pop.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return pop[a].fitness > pop[b].fitness; });
    return order;
}

/// One generation step: the elitism_count best organisms are copied verbatim
/// (fitness included); the rest of the next population is bred by
/// selection -> uniform crossover -> mutation, then scored with fitness_fn.
/// Population size is preserved.
template <typename Params, typename FitnessFn>
std::vector<Organism<Params>> next_generation(const std::vector<Organism<Params>>& pop,
                                              const GAConfig& cfg, FitnessFn&& fitness_fn,
                                              Rng& rng) {
    if (pop.empty()) throw std::invalid_argument("next_generation: empty population");
    cfg.validate();

    const std::vector<size_t> order = fitness_order(pop);
    std::vector<Organism<Params>> next;
    next.reserve(pop.size());
    const size_t elite = std::min(static_cast<size_t>(cfg.elitism_count), pop.size());
    for (size_t i = 0; i < elite; ++i) next.push_back(pop[order[i]]);

    auto select = [&](void) -> size_t {
        return cfg.selection == SelectionKind::Rank ? select_rank(pop, rng)
                                                    : select_proportional(pop, rng);
    };
    while (next.size() < pop.size()) {
        size_t ia = select();
        size_t ib = select();
        auto children = uniform_crossover(pop[ia].chromosome, pop[ib].chromosome,
                                          cfg.crossover_rate, rng);
        Chromosome first = mutate(std::move(children.first), cfg.mutation_rate, rng);
        Chromosome second = mutate(std::move(children.second), cfg.mutation_rate, rng);
        next.push_back(make_organism<Params>(std::move(first)));
        if (next.size() < pop.size()) next.push_back(make_organism<Params>(std::move(second)));
    }
    for (size_t i = elite; i < next.size(); ++i) next[i].fitness = fitness_fn(next[i]);
    return next;
}

// ---- Population checkpoints: one organism per line, chromosome as hex
// digits followed by the decimal fitness. ----

template <typename Params>
void save_population(std::ostream& os, const std::vector<Organism<Params>>& pop) {
    for (const auto& o : pop) {
        std::ostringstream fitness;
        fitness << std::setprecision(17) << o.fitness;
        os << chromosome_to_hex(o.chromosome) << ' ' << fitness.str() << '\n';
    }
}

template <typename Params>
std::vector<Organism<Params>> load_population(std::istream& in) {
    std::vector<Organism<Params>> pop;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = text::trim(line);
        if (sv.empty() || sv.front() == '#') continue;
        std::istringstream fields{std::string(sv)};
        std::string hex;
        double fitness = 0.0;
        if (!(fields >> hex >> fitness))
            throw ParseError("population line " + std::to_string(line_no) +
                             ": expected `hex fitness`");
        pop.push_back(make_organism<Params>(
            chromosome_from_hex(genome_kind_of<Params>(), hex), fitness));
    }
    return pop;
}

}  // namespace evochess
