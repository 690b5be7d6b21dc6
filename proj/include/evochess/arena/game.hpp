#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "evochess/core/movegen.hpp"
#include "evochess/core/pgn.hpp"
#include "evochess/core/position.hpp"
#include "evochess/eval/params.hpp"
#include "evochess/search/params.hpp"
#include "evochess/search/search.hpp"

// Engine-versus-engine game execution. A game runs an opening line, then
// alternates searches under either a wall-clock time control or fixed
// per-move node/depth budgets (the reproducible mode), and adjudicates every
// standard termination: checkmate, stalemate, threefold repetition, the
// fifty-move rule, insufficient mating material, time forfeit, and the
// defensive illegal-move forfeit.

namespace evochess {

struct TimeControl {
    int base_ms = 0;       ///< clock per side for the whole game
    int increment_ms = 0;  ///< added after each completed move

    void validate() const {
        if (base_ms <= 0) throw std::invalid_argument("TimeControl: base must be positive");
        if (increment_ms < 0) throw std::invalid_argument("TimeControl: negative increment");
    }
};

/// Per-game search budget: a time control, or fixed per-move node/depth
/// limits. Node- and depth-limited games are bit-reproducible; time-limited
/// games are not (and are the only mode with clocks and forfeits).
struct GameControl {
    std::optional<TimeControl> time;
    std::optional<std::uint64_t> nodes_per_move;
    std::optional<int> depth_per_move;

    void validate() const {
        if (!time && !nodes_per_move && !depth_per_move)
            throw std::invalid_argument("GameControl: no budget set");
        if (time) time->validate();
        if (nodes_per_move && *nodes_per_move == 0)
            throw std::invalid_argument("GameControl: nodes_per_move must be positive");
        if (depth_per_move && *depth_per_move <= 0)
            throw std::invalid_argument("GameControl: depth_per_move must be positive");
    }
};

struct EngineConfig {
    std::string name = "engine";
    EvalParams eval;
    SearchParams search;
};

enum class TerminationReason : std::uint8_t {
    Checkmate,
    Stalemate,
    ThreefoldRepetition,
    FiftyMoveRule,
    InsufficientMaterial,
    TimeForfeit,
    IllegalMove,
};

inline const char* termination_text(TerminationReason r) {
    switch (r) {
        case TerminationReason::Checkmate: return "checkmate";
        case TerminationReason::Stalemate: return "stalemate";
        case TerminationReason::ThreefoldRepetition: return "threefold repetition";
        case TerminationReason::FiftyMoveRule: return "fifty-move rule";
        case TerminationReason::InsufficientMaterial: return "insufficient material";
        case TerminationReason::TimeForfeit: return "flag";
        case TerminationReason::IllegalMove: return "illegal move";
    }
    return "?";
}

struct GameRecord {
    Game game;  ///< initial position, full move list (opening included), result, tags
    TerminationReason termination = TerminationReason::Stalemate;
    std::string diagnostic;  ///< non-empty only for illegal-move forfeits
    std::uint64_t nodes_white = 0;
    std::uint64_t nodes_black = 0;
    int book_plies = 0;
};

/// Neither side can possibly deliver mate: bare kings, a single minor piece,
/// or same-colored lone bishops. KNN vs K is not included (mate is possible,
/// if not forceable).
inline bool insufficient_material(const Position& pos) {
    if (pos.pieces(PieceKind::Pawn) | pos.pieces(PieceKind::Rook) | pos.pieces(PieceKind::Queen))
        return false;
    Bitboard knights = pos.pieces(PieceKind::Knight);
    Bitboard bishops = pos.pieces(PieceKind::Bishop);
    int minors = popcount(knights | bishops);
    if (minors <= 1) return true;
    if (knights == 0 && minors == 2 && popcount(pos.pieces(Color::White, PieceKind::Bishop)) == 1) {
        Square wb = lsb(pos.pieces(Color::White, PieceKind::Bishop));
        Square bb = lsb(pos.pieces(Color::Black, PieceKind::Bishop));
        return ((file_of(wb) + rank_of(wb)) & 1) == ((file_of(bb) + rank_of(bb)) & 1);
    }
    return false;
}

/// Plays one game: `white` and `black` search under `control`, starting from
/// `initial` (the standard starting position unless a test or endgame harness
/// says otherwise) after `opening` (which must be legal there). Deterministic
/// whenever the control is node/depth-limited.
inline GameRecord play_game(const EngineConfig& white, const EngineConfig& black,
                            const GameControl& control, const std::vector<Move>& opening = {},
                            const Position& initial = Position::initial()) {
    control.validate();

    GameRecord rec;
    rec.game.initial = initial;
    rec.game.tags["White"] = white.name;
    rec.game.tags["Black"] = black.name;
    rec.book_plies = static_cast<int>(opening.size());

    Position pos = initial;
    std::unordered_map<std::uint64_t, int> seen;
    ++seen[pos.hash()];

    for (const Move& m : opening) {
        std::vector<Move> legal = legal_moves(pos);
        if (std::find(legal.begin(), legal.end(), m) == legal.end())
            throw std::invalid_argument("play_game: illegal move in opening line");
        rec.game.moves.push_back(m);
        pos = pos.apply(m);
        ++seen[pos.hash()];
    }

    std::array<double, 2> clock_ms{0.0, 0.0};
    if (control.time) clock_ms = {static_cast<double>(control.time->base_ms),
                                  static_cast<double>(control.time->base_ms)};

    auto lose = [&](Color side, TerminationReason why) {
        rec.game.result = side == Color::White ? GameResult::BlackWin : GameResult::WhiteWin;
        rec.termination = why;
    };
    auto draw = [&](TerminationReason why) {
        rec.game.result = GameResult::Draw;
        rec.termination = why;
    };

    while (true) {
        const Color stm = pos.side_to_move();
        std::vector<Move> legal = legal_moves(pos);
        if (legal.empty()) {
            if (pos.in_check()) lose(stm, TerminationReason::Checkmate);
            else draw(TerminationReason::Stalemate);
            break;
        }
        if (insufficient_material(pos)) {
            draw(TerminationReason::InsufficientMaterial);
            break;
        }
        if (pos.halfmove_clock() >= 100) {
            draw(TerminationReason::FiftyMoveRule);
            break;
        }
        if (seen[pos.hash()] >= 3) {
            draw(TerminationReason::ThreefoldRepetition);
            break;
        }

        const EngineConfig& engine = stm == Color::White ? white : black;
        SearchLimits limits;
        if (control.nodes_per_move) limits.max_nodes = *control.nodes_per_move;
        if (control.depth_per_move) limits.max_depth = *control.depth_per_move;
        if (control.time) {
            double& remaining = clock_ms[static_cast<size_t>(stm)];
            double budget = remaining / 30.0 + control.time->increment_ms;
            budget = std::min(budget, remaining / 4.0);
            limits.max_time_ms = std::max(1, static_cast<int>(budget));
        }

        auto t0 = std::chrono::steady_clock::now();
        SearchResult found = search(pos, engine.eval, engine.search, limits);
        double elapsed =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        (stm == Color::White ? rec.nodes_white : rec.nodes_black) += found.nodes;

        if (control.time) {
            double& remaining = clock_ms[static_cast<size_t>(stm)];
            remaining -= elapsed;
            if (remaining < 0.0) {
                lose(stm, TerminationReason::TimeForfeit);
                break;
            }
            remaining += control.time->increment_ms;
        }

        if (std::find(legal.begin(), legal.end(), found.best_move) == legal.end()) {
            rec.diagnostic = engine.name + " proposed illegal move " +
                             move_to_uci(found.best_move) + " in " + to_fen(pos);
            lose(stm, TerminationReason::IllegalMove);
            break;
        }

        rec.game.moves.push_back(found.best_move);
        pos = pos.apply(found.best_move);
        ++seen[pos.hash()];
    }

    rec.game.tags["Result"] = result_text(rec.game.result);
    rec.game.tags["Termination"] = termination_text(rec.termination);
    return rec;
}

}  // namespace evochess
