#pragma once

#include <string>
#include <string_view>

#include "evochess/core/movegen.hpp"
#include "evochess/core/position.hpp"
#include "evochess/util/text.hpp"

namespace evochess {

namespace detail {

inline char piece_letter(PieceKind k) { return "PNBRQK"[static_cast<int>(k)]; }

}  // namespace detail

/// Standard algebraic notation with minimal disambiguation and +/# suffixes.
inline std::string move_to_san(const Position& pos, const Move& m) {
    std::string san;
    const Piece moving = pos.piece_at(m.from);

    if (m.is_castle()) {
        san = file_of(m.to) == 6 ? "O-O" : "O-O-O";
    } else if (moving.kind() == PieceKind::Pawn) {
        if (m.is_capture()) {
            san += static_cast<char>('a' + file_of(m.from));
            san += 'x';
        }
        san += square_name(m.to);
        if (m.is_promotion()) {
            san += '=';
            san += detail::piece_letter(m.promotion);
        }
    } else {
        san += detail::piece_letter(moving.kind());
        // Disambiguate against other same-kind pieces that can legally reach
        // the target: file first, then rank, then both.
        bool need_file = false, need_rank = false, ambiguous = false;
        for (const Move& other : legal_moves(pos)) {
            if (other.to != m.to || other.from == m.from) continue;
            if (pos.piece_at(other.from).kind() != moving.kind()) continue;
            ambiguous = true;
            if (file_of(other.from) == file_of(m.from)) need_rank = true;
            if (rank_of(other.from) == rank_of(m.from)) need_file = true;
        }
        if (ambiguous && !need_file && !need_rank) need_file = true;
        if (need_file) san += static_cast<char>('a' + file_of(m.from));
        if (need_rank) san += static_cast<char>('1' + rank_of(m.from));
        if (m.is_capture()) san += 'x';
        san += square_name(m.to);
    }

    Position next = pos.apply(m);
    if (next.in_check()) san += legal_moves(next).empty() ? '#' : '+';
    return san;
}

/// Resolves SAN text against the legal moves of `pos`. Accepts check/mate
/// marks, annotation glyphs, and "0-0" style castling. Throws ParseError on
/// unknown, illegal, or ambiguous input.
inline Move san_to_move(const Position& pos, std::string_view san) {
    std::string_view s = san;
    while (!s.empty() && (s.back() == '+' || s.back() == '#' || s.back() == '!' || s.back() == '?'))
        s.remove_suffix(1);
    if (s.size() > 4 && s.substr(s.size() - 4) == "e.p.") s.remove_suffix(4);
    s = text::trim(s);
    if (s.empty()) throw ParseError("empty SAN token");

    const MoveList legal = legal_moves(pos);

    if (s == "O-O" || s == "0-0" || s == "O-O-O" || s == "0-0-0") {
        bool kingside = s.size() == 3;
        for (const Move& m : legal)
            if (m.is_castle() && (file_of(m.to) == 6) == kingside) return m;
        throw ParseError("illegal castling move '" + std::string(san) + "'");
    }

    PieceKind kind = PieceKind::Pawn;
    size_t i = 0;
    if (s[0] >= 'A' && s[0] <= 'Z') {
        kind = piece_kind_from_char(s[0]);
        if (kind == PieceKind::None) throw ParseError("bad SAN piece letter in '" + std::string(san) + "'");
        i = 1;
    }

    PieceKind promo = PieceKind::None;
    if (kind == PieceKind::Pawn) {
        size_t eq = s.find('=');
        if (eq != std::string_view::npos) {
            if (eq + 1 >= s.size()) throw ParseError("bad SAN promotion in '" + std::string(san) + "'");
            promo = piece_kind_from_char(s[eq + 1]);
            if (promo == PieceKind::None || promo == PieceKind::Pawn || promo == PieceKind::King)
                throw ParseError("bad SAN promotion piece in '" + std::string(san) + "'");
            s = s.substr(0, eq);
        }
    }

    // Remainder: optional disambiguation, optional 'x', destination square.
    std::string_view body = s.substr(i);
    if (body.size() < 2) throw ParseError("bad SAN move '" + std::string(san) + "'");
    Square to = parse_square(body[body.size() - 2], body[body.size() - 1]);
    if (to == NO_SQUARE) throw ParseError("bad SAN target square in '" + std::string(san) + "'");
    body.remove_suffix(2);

    bool capture = false;
    if (!body.empty() && body.back() == 'x') {
        capture = true;
        body.remove_suffix(1);
    }
    int from_file = -1, from_rank = -1;
    for (char c : body) {
        if (c >= 'a' && c <= 'h')
            from_file = c - 'a';
        else if (c >= '1' && c <= '8')
            from_rank = c - '1';
        else
            throw ParseError("bad SAN disambiguation in '" + std::string(san) + "'");
    }

    Move found{};
    int matches = 0;
    for (const Move& m : legal) {
        if (m.to != to || m.is_castle()) continue;
        if (pos.piece_at(m.from).kind() != kind) continue;
        if (m.promotion != promo) continue;
        if (capture && !m.is_capture()) continue;
        if (kind == PieceKind::Pawn && !capture && m.is_capture()) continue;
        if (from_file >= 0 && file_of(m.from) != from_file) continue;
        if (from_rank >= 0 && rank_of(m.from) != from_rank) continue;
        found = m;
        ++matches;
    }
    if (matches == 0) throw ParseError("SAN move '" + std::string(san) + "' is not legal here");
    if (matches > 1) throw ParseError("SAN move '" + std::string(san) + "' is ambiguous");
    return found;
}

}  // namespace evochess
