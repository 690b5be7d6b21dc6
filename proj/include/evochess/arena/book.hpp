#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "evochess/core/movegen.hpp"
#include "evochess/core/position.hpp"
#include "evochess/core/san.hpp"

// Opening book: a text file with one opening line per row, each a
// whitespace-separated move sequence from the standard initial position.
// Moves may be written in coordinate form (e2e4) or SAN (e4, Nf3); lines are
// resolved to Move lists at load time so illegal books fail fast. `#` starts
// a comment, blank lines are skipped. Line k of the book seeds game k of a
// match, a fixed pairing that keeps match replays deterministic.

namespace evochess {

struct OpeningBook {
    std::vector<std::vector<Move>> lines;

    std::size_t size() const { return lines.size(); }

    const std::vector<Move>& line(std::size_t index) const {
        if (index >= lines.size())
            throw std::out_of_range("opening book exhausted: game " + std::to_string(index + 1) +
                                    " needs line " + std::to_string(index + 1) + " but the book has " +
                                    std::to_string(lines.size()));
        return lines[index];
    }
};

namespace detail {

inline Move book_token_to_move(const Position& pos, const std::string& token) {
    // Coordinate form first (never valid SAN), then SAN.
    if (token.size() >= 4 && token.size() <= 5 && token[0] >= 'a' && token[0] <= 'h' &&
        token[1] >= '1' && token[1] <= '8' && token[2] >= 'a' && token[2] <= 'h' &&
        token[3] >= '1' && token[3] <= '8')
        return move_from_uci(pos, token);
    return san_to_move(pos, token);
}

}  // namespace detail

inline OpeningBook load_opening_book(std::istream& in) {
    OpeningBook book;
    std::string row;
    int line_no = 0;
    while (std::getline(in, row)) {
        ++line_no;
        std::string_view sv = text::trim(row);
        if (sv.empty() || sv.front() == '#') continue;
        std::vector<Move> moves;
        Position pos = Position::initial();
        std::istringstream tokens{std::string(sv)};
        std::string token;
        try {
            while (tokens >> token) {
                Move m = detail::book_token_to_move(pos, token);
                moves.push_back(m);
                pos = pos.apply(m);
            }
        } catch (const ParseError& e) {
            throw ParseError("opening book line " + std::to_string(line_no) + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw ParseError("opening book line " + std::to_string(line_no) + ": " + e.what());
        }
        book.lines.push_back(std::move(moves));
    }
    return book;
}

inline OpeningBook load_opening_book(const std::string& s) {
    std::istringstream in(s);
    return load_opening_book(in);
}

inline void save_opening_book(std::ostream& os, const OpeningBook& book) {
    for (const auto& line : book.lines) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) os << ' ';
            os << move_to_uci(line[i]);
        }
        os << '\n';
    }
}

}  // namespace evochess
