#pragma once

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "evochess/core/fen.hpp"
#include "evochess/core/san.hpp"

namespace evochess {

struct Game {
    Position initial = Position::initial();
    std::vector<Move> moves;
    GameResult result = GameResult::Unknown;
    std::map<std::string, std::string> tags;

    Position final_position() const {
        Position p = initial;
        for (const Move& m : moves) p = p.apply(m);
        return p;
    }
};

struct PgnReadResult {
    std::vector<Game> games;
    std::vector<std::string> diagnostics;  // one entry per skipped game
};

namespace detail {

struct RawPgnGame {
    std::map<std::string, std::string> tags;
    std::string movetext;
    int first_line = 0;
};

/// Splits a PGN stream into raw games on tag-section boundaries.
inline std::vector<RawPgnGame> split_pgn_stream(std::istream& in) {
    std::vector<RawPgnGame> raw;
    std::string line;
    RawPgnGame current;
    bool in_game = false, in_moves = false;
    int line_no = 0;

    auto finish = [&] {
        if (in_game && (!current.tags.empty() || !current.movetext.empty())) raw.push_back(current);
        current = RawPgnGame{};
        in_game = in_moves = false;
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view t = text::trim(line);
        if (t.empty()) {
            if (in_moves) finish();
            continue;
        }
        if (t[0] == '[' && !in_moves) {
            if (!in_game) {
                in_game = true;
                current.first_line = line_no;
            }
            size_t sp = t.find(' ');
            size_t q1 = t.find('"');
            size_t q2 = t.rfind('"');
            if (sp != std::string_view::npos && q1 != std::string_view::npos && q2 > q1) {
                std::string key(text::trim(t.substr(1, sp - 1)));
                std::string value(t.substr(q1 + 1, q2 - q1 - 1));
                current.tags[key] = value;
            }
            continue;
        }
        if (!in_game) {
            in_game = true;
            current.first_line = line_no;
        }
        in_moves = true;
        current.movetext += ' ';
        current.movetext += t;
    }
    finish();
    return raw;
}

/// Strips comments, variations, and NAGs; returns bare movetext tokens.
inline std::vector<std::string> movetext_tokens(const std::string& movetext) {
    std::vector<std::string> tokens;
    std::string cur;
    int variation_depth = 0;
    bool in_comment = false;
    for (char c : movetext) {
        if (in_comment) {
            if (c == '}') in_comment = false;
            continue;
        }
        if (c == '{') {
            in_comment = true;
            continue;
        }
        if (c == '(') {
            ++variation_depth;
            continue;
        }
        if (c == ')') {
            if (variation_depth > 0) --variation_depth;
            continue;
        }
        if (variation_depth > 0) continue;
        if (c == ' ' || c == '\t') {
            if (!cur.empty()) tokens.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    return tokens;
}

inline std::optional<GameResult> result_from_token(std::string_view t) {
    if (t == "1-0") return GameResult::WhiteWin;
    if (t == "0-1") return GameResult::BlackWin;
    if (t == "1/2-1/2") return GameResult::Draw;
    if (t == "*") return GameResult::Unknown;
    return std::nullopt;
}

}  // namespace detail

/// Reads PGN export-format games. A game that fails to parse (bad movetext,
/// illegal move) is skipped and reported in diagnostics; the rest still load.
inline PgnReadResult parse_pgn(std::istream& in) {
    PgnReadResult out;
    for (const auto& raw : detail::split_pgn_stream(in)) {
        try {
            Game game;
            game.tags = raw.tags;
            if (auto it = raw.tags.find("FEN"); it != raw.tags.end()) game.initial = parse_fen(it->second);
            if (auto it = raw.tags.find("Result"); it != raw.tags.end()) {
                auto r = detail::result_from_token(it->second);
                game.result = r.value_or(GameResult::Unknown);
            }

            Position pos = game.initial;
            for (const std::string& token : detail::movetext_tokens(raw.movetext)) {
                if (auto r = detail::result_from_token(token)) {
                    if (game.result == GameResult::Unknown) game.result = *r;
                    break;
                }
                if (token[0] == '$') continue;                       // NAG
                if (token.find("...") != std::string::npos) continue;  // black move number
                if (token[0] >= '0' && token[0] <= '9') {
                    // Move numbers like "12." or glued "12.e4".
                    size_t dot = token.find('.');
                    if (dot == std::string::npos) throw ParseError("unexpected token '" + token + "'");
                    std::string rest = token.substr(dot + 1);
                    while (!rest.empty() && rest[0] == '.') rest.erase(0, 1);
                    if (rest.empty()) continue;
                    Move m = san_to_move(pos, rest);
                    game.moves.push_back(m);
                    pos = pos.apply(m);
                    continue;
                }
                Move m = san_to_move(pos, token);
                game.moves.push_back(m);
                pos = pos.apply(m);
            }
            out.games.push_back(std::move(game));
        } catch (const ParseError& e) {
            out.diagnostics.push_back("game at line " + std::to_string(raw.first_line) + " skipped: " +
                                      e.what());
        }
    }
    return out;
}

inline PgnReadResult parse_pgn(const std::string& s) {
    std::istringstream in(s);
    return parse_pgn(in);
}

/// Writes one game in PGN export format (80-column movetext wrapping).
inline void write_pgn(std::ostream& os, const Game& game) {
    auto tag = [&](const std::string& key, const std::string& fallback) {
        auto it = game.tags.find(key);
        os << '[' << key << " \"" << (it != game.tags.end() ? it->second : fallback) << "\"]\n";
    };
    tag("Event", "?");
    tag("Site", "?");
    tag("Date", "????.??.??");
    tag("Round", "?");
    tag("White", "?");
    tag("Black", "?");
    tag("Result", result_text(game.result));
    if (!(game.initial == Position::initial())) {
        os << "[SetUp \"1\"]\n";
        os << "[FEN \"" << to_fen(game.initial) << "\"]\n";
    }
    os << '\n';

    std::string line;
    auto emit = [&](const std::string& token) {
        if (line.empty()) {
            line = token;
        } else if (line.size() + 1 + token.size() > 79) {
            os << line << '\n';
            line = token;
        } else {
            line += ' ';
            line += token;
        }
    };

    Position pos = game.initial;
    for (const Move& m : game.moves) {
        std::string token;
        if (pos.side_to_move() == Color::White)
            token = std::to_string(pos.fullmove_number()) + ". " + move_to_san(pos, m);
        else if (pos == game.initial)
            token = std::to_string(pos.fullmove_number()) + "... " + move_to_san(pos, m);
        else
            token = move_to_san(pos, m);
        emit(token);
        pos = pos.apply(m);
    }
    emit(result_text(game.result));
    if (!line.empty()) os << line << '\n';
    os << '\n';
}

}  // namespace evochess
