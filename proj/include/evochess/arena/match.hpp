#pragma once

#include <cmath>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "evochess/arena/book.hpp"
#include "evochess/arena/elo.hpp"
#include "evochess/arena/game.hpp"
#include "evochess/util/parallel.hpp"

// Match execution: a series of games with alternating colors, a distinct
// opening-book line per game, aggregate points, and a one-line summary
// line `points_A - points_B W% RD` from side A's perspective.

namespace evochess {

struct MatchGame {
    GameRecord record;
    bool a_played_white = false;
    std::size_t book_line = 0;
};

struct MatchRecord {
    std::vector<MatchGame> games;
    double points_a = 0.0;
    double points_b = 0.0;

    std::size_t size() const { return games.size(); }
};

namespace detail {

inline double points_for_a(const MatchGame& g) {
    switch (g.record.game.result) {
        case GameResult::WhiteWin: return g.a_played_white ? 1.0 : 0.0;
        case GameResult::BlackWin: return g.a_played_white ? 0.0 : 1.0;
        default: return 0.5;  // all adjudicated draws
    }
}

}  // namespace detail

/// Plays `games` games between A and B under `control`. Colors alternate
/// (A is white in game 0); game k starts from book line `first_line + k`,
/// so every game of the match opens differently. `jobs` bounds game-level
/// parallelism; aggregation is order-independent, so node/depth-limited
/// matches are reproducible at any job count.
inline MatchRecord play_match(const EngineConfig& a, const EngineConfig& b, std::size_t games,
                              const GameControl& control, const OpeningBook& book,
                              std::size_t first_line = 0, int jobs = 1) {
    if (games == 0) throw std::invalid_argument("play_match: zero games");
    control.validate();
    if (first_line + games > book.size())
        throw std::out_of_range("opening book exhausted: match needs lines " +
                                std::to_string(first_line + 1) + ".." +
                                std::to_string(first_line + games) + " but the book has " +
                                std::to_string(book.size()));

    MatchRecord match;
    match.games.resize(games);
    parallel_for(games, jobs, [&](std::size_t g) {
        MatchGame& slot = match.games[g];
        slot.a_played_white = g % 2 == 0;
        slot.book_line = first_line + g;
        const EngineConfig& white = slot.a_played_white ? a : b;
        const EngineConfig& black = slot.a_played_white ? b : a;
        slot.record = play_game(white, black, control, book.line(slot.book_line));
        slot.record.game.tags["Round"] = std::to_string(g + 1);
    });
    for (const MatchGame& g : match.games) {
        double pa = detail::points_for_a(g);
        match.points_a += pa;
        match.points_b += 1.0 - pa;
    }
    return match;
}

/// One-line summary in the usual engine-match table style:
/// `points_A - points_B W% RD`, W% from A's points and RD the Elo difference
/// that winning rate implies (unbounded at 0% or 100%).
inline std::string match_summary(const MatchRecord& match) {
    const double games = static_cast<double>(match.size());
    const double w = match.points_a / games;
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << match.points_a << " - " << match.points_b << ' ' << w * 100.0 << "% ";
    if (w <= 0.0) {
        os << "-inf";
    } else if (w >= 1.0) {
        os << "+inf";
    } else {
        double rd = rating_difference(w);
        if (rd == 0.0) rd = 0.0;  // flush negative zero at exactly 50%
        os << (rd >= 0.0 ? "+" : "") << rd;
    }
    return os.str();
}

/// Writes every game of the match as PGN, replayable by parse_pgn.
inline void write_match_pgn(std::ostream& os, const MatchRecord& match,
                            const std::string& event = "match") {
    for (const MatchGame& g : match.games) {
        Game game = g.record.game;
        game.tags["Event"] = event;
        write_pgn(os, game);
    }
}

}  // namespace evochess
