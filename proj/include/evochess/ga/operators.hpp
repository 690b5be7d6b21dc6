#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "evochess/ga/codec.hpp"
#include "evochess/util/rng.hpp"

// Genetic operators. All randomness flows through the caller's Rng, and draws
// happen in a fixed order, so a seed pins the whole evolutionary trajectory.

namespace evochess {

template <typename Params>
struct Organism {
    Chromosome chromosome;
    Params decoded;
    double fitness = 0.0;
};

using EvalOrganism = Organism<EvalParams>;
using SearchOrganism = Organism<SearchParams>;

template <typename Params>
Params decode_params(const Chromosome& c);
template <>
inline EvalParams decode_params<EvalParams>(const Chromosome& c) { return decode_eval(c); }
template <>
inline SearchParams decode_params<SearchParams>(const Chromosome& c) { return decode_search(c); }

template <typename Params>
constexpr GenomeKind genome_kind_of();
template <>
constexpr GenomeKind genome_kind_of<EvalParams>() { return GenomeKind::Evaluation; }
template <>
constexpr GenomeKind genome_kind_of<SearchParams>() { return GenomeKind::Search; }

/// Builds an organism from a chromosome, keeping `decoded` in sync.
template <typename Params>
Organism<Params> make_organism(Chromosome c, double fitness = 0.0) {
    Params decoded = decode_params<Params>(c);
    return Organism<Params>{std::move(c), decoded, fitness};
}

/// Whole-pair uniform crossover: with probability `rate` every bit position
/// swaps between the children with probability 1/2; otherwise the children
/// are verbatim copies of the parents.
inline std::pair<Chromosome, Chromosome> uniform_crossover(const Chromosome& a,
                                                           const Chromosome& b, double rate,
                                                           Rng& rng) {
    if (a.kind != b.kind) throw std::invalid_argument("uniform_crossover: mismatched kinds");
    std::pair<Chromosome, Chromosome> children{a, b};
    if (!rng.bernoulli(rate)) return children;
    for (size_t i = 0; i < a.bits.size(); ++i)
        if (rng.coin_flip()) std::swap(children.first.bits[i], children.second.bits[i]);
    return children;
}

/// Flips each bit independently with probability `rate`.
inline Chromosome mutate(Chromosome c, double rate, Rng& rng) {
    for (auto& bit : c.bits)
        if (rng.bernoulli(rate)) bit ^= 1;
    return c;
}

/// Fitness-proportional selection; uniform when all fitness is zero.
/// Returns the index of the chosen organism.
template <typename Params>
size_t select_proportional(const std::vector<Organism<Params>>& pop, Rng& rng) {
    if (pop.empty()) throw std::invalid_argument("select_proportional: empty population");
    double total = 0.0;
    for (const auto& o : pop) {
        if (o.fitness < 0.0)
            throw std::invalid_argument("select_proportional: negative fitness");
        total += o.fitness;
    }
    if (total <= 0.0) return static_cast<size_t>(rng.below(pop.size()));
    double x = rng.uniform01() * total;
    double cumulative = 0.0;
    for (size_t i = 0; i < pop.size(); ++i) {
        cumulative += pop[i].fitness;
        if (x < cumulative) return i;
    }
    return pop.size() - 1;  // guard against rounding at the top end
}

/// Linear rank selection with pressure 1.5: the organism with rank r
/// (0 = worst) is chosen with probability ((2-s) + 2r(s-1)/(n-1)) / n,
/// so the worst of n gets 0.5/n and the best 1.5/n. Probabilities depend
/// only on fitness order; ties keep the earlier index at the lower rank.
/// Returns the index of the chosen organism.
template <typename Params>
size_t select_rank(const std::vector<Organism<Params>>& pop, Rng& rng) {
    if (pop.empty()) throw std::invalid_argument("select_rank: empty population");
    const size_t n = pop.size();
    if (n == 1) return 0;
    constexpr double pressure = 1.5;
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return pop[a].fitness < pop[b].fitness; });
    // Total weight over all ranks is exactly n.
    double x = rng.uniform01() * static_cast<double>(n);
    double cumulative = 0.0;
    for (size_t r = 0; r < n; ++r) {
        cumulative += (2.0 - pressure) + 2.0 * static_cast<double>(r) * (pressure - 1.0) /
                                             static_cast<double>(n - 1);
        if (x < cumulative) return order[r];
    }
    return order[n - 1];
}

}  // namespace evochess
