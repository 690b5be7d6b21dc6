#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "evochess/core/fen.hpp"
#include "evochess/core/movegen.hpp"
#include "evochess/core/pgn.hpp"
#include "evochess/eval/evaluate.hpp"
#include "evochess/ga/operators.hpp"
#include "evochess/util/parallel.hpp"
#include "evochess/util/rng.hpp"

// Training material for evaluation evolution: positions sampled from decisive
// games, the winner to move, paired with the move the winner actually played.
// Fitness is the squared count of positions where a 1-ply search with the
// organism's weights picks that same move.

namespace evochess {

struct TrainingPair {
    Position position;  ///< winner to move
    Move move;          ///< the move the winner played here
};

struct TrainingSet {
    std::vector<TrainingPair> pairs;
    std::string provenance;

    std::size_t size() const { return pairs.size(); }
};

namespace detail {

/// Candidate sampling plies of one game: the winner is to move, the opening
/// is skipped (first 12 plies), and at least 10 plies of play remain.
inline std::vector<std::size_t> training_candidates(const Game& game) {
    std::vector<std::size_t> out;
    if (game.result != GameResult::WhiteWin && game.result != GameResult::BlackWin) return out;
    const Color winner =
        game.result == GameResult::WhiteWin ? Color::White : Color::Black;
    const std::size_t total = game.moves.size();
    if (total < 22) return out;  // 12 skipped + 10 remaining
    Position pos = game.initial;
    for (std::size_t ply = 0; ply < total; ++ply) {
        if (ply >= 12 && total - ply >= 10 && pos.side_to_move() == winner) out.push_back(ply);
        pos = pos.apply(game.moves[ply]);
    }
    return out;
}

}  // namespace detail

/// Samples `n` (position, played move) pairs, one from each of `n` distinct
/// decisive games, uniformly at random. Throws when fewer than `n` decisive
/// games have a usable position. Deterministic for a given rng state.
inline TrainingSet build_training_set(const std::vector<Game>& games, std::size_t n, Rng& rng,
                                      const std::string& source = "") {
    std::vector<std::size_t> usable;
    for (std::size_t g = 0; g < games.size(); ++g)
        if (!detail::training_candidates(games[g]).empty()) usable.push_back(g);
    if (n > usable.size())
        throw std::invalid_argument("build_training_set: need " + std::to_string(n) +
                                    " decisive games with usable positions, corpus has " +
                                    std::to_string(usable.size()));

    // Partial Fisher-Yates: the first n entries become the chosen games.
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i + rng.below(usable.size() - i);
        std::swap(usable[i], usable[j]);
    }

    TrainingSet ts;
    ts.pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Game& game = games[usable[i]];
        std::vector<std::size_t> candidates = detail::training_candidates(game);
        std::size_t ply = candidates[rng.below(candidates.size())];
        Position pos = game.initial;
        for (std::size_t p = 0; p < ply; ++p) pos = pos.apply(game.moves[p]);
        ts.pairs.push_back({pos, game.moves[ply]});
    }
    ts.provenance = (source.empty() ? std::string("pgn corpus") : source) +
                    "; one position per decisive game, winner to move, first 12 plies skipped, "
                    ">= 10 plies remaining";
    return ts;
}

/// The move a 1-ply search picks: argmax over legal moves of the static
/// evaluation of the resulting position from the mover's perspective, ties
/// broken by move-generation order. Deliberately no quiescence: the fitness
/// target is the bare evaluation's own preference.
inline Move one_ply_choice(const Position& pos, const EvalParams& params) {
    std::vector<Move> legal = legal_moves(pos);
    if (legal.empty()) throw std::invalid_argument("one_ply_choice: no legal moves");
    Move best = legal.front();
    int best_score = std::numeric_limits<int>::min();
    for (const Move& m : legal) {
        int score = -evaluate(pos.apply(m), params);  // evaluate() is stm-relative
        if (score > best_score) {
            best_score = score;
            best = m;
        }
    }
    return best;
}

/// Number of training pairs whose stored move the 1-ply search reproduces.
inline std::size_t move_match_count(const EvalParams& params, const TrainingSet& ts,
                                    int jobs = 1) {
    std::vector<std::uint8_t> hit(ts.pairs.size(), 0);
    parallel_for(ts.pairs.size(), jobs, [&](std::size_t i) {
        hit[i] = one_ply_choice(ts.pairs[i].position, params) == ts.pairs[i].move ? 1 : 0;
    });
    return std::accumulate(hit.begin(), hit.end(), std::size_t{0});
}

/// Phase-1 fitness: the squared match count.
inline double move_match_fitness(const EvalParams& params, const TrainingSet& ts, int jobs = 1) {
    double c = static_cast<double>(move_match_count(params, ts, jobs));
    return c * c;
}

inline double move_match_fitness(const Chromosome& chromosome, const TrainingSet& ts,
                                 int jobs = 1) {
    return move_match_fitness(decode_eval(chromosome), ts, jobs);
}

/// Match rate on a holdout set guaranteed disjoint from the training set
/// (positions compared by FEN). Throws on overlap or an empty holdout.
inline double holdout_match_rate(const EvalParams& params, const TrainingSet& holdout,
                                 const TrainingSet& train, int jobs = 1) {
    if (holdout.pairs.empty()) throw std::invalid_argument("holdout_match_rate: empty holdout");
    std::unordered_set<std::string> seen;
    seen.reserve(train.pairs.size());
    for (const auto& pair : train.pairs) seen.insert(to_fen(pair.position));
    for (const auto& pair : holdout.pairs) {
        std::string fen = to_fen(pair.position);
        if (seen.count(fen))
            throw std::invalid_argument("holdout_match_rate: holdout position " + fen +
                                        " also appears in the training set");
    }
    return static_cast<double>(move_match_count(params, holdout, jobs)) /
           static_cast<double>(holdout.pairs.size());
}

}  // namespace evochess
