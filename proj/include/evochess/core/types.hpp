#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "evochess/util/text.hpp"

namespace evochess {

enum class Color : std::uint8_t { White = 0, Black = 1 };

constexpr Color operator~(Color c) { return static_cast<Color>(static_cast<int>(c) ^ 1); }

enum class PieceKind : std::uint8_t { Pawn = 0, Knight, Bishop, Rook, Queen, King, None };

/// Square index: a1 = 0, b1 = 1, ..., h8 = 63 (rank-major).
using Square = int;
constexpr Square NO_SQUARE = -1;

constexpr int file_of(Square sq) { return sq & 7; }
constexpr int rank_of(Square sq) { return sq >> 3; }  // 0-based
constexpr Square make_square(int file, int rank) { return rank * 8 + file; }

/// Rank as seen from `c`'s side: 0 = home rank, 7 = promotion rank.
constexpr int relative_rank(Color c, Square sq) {
    return c == Color::White ? rank_of(sq) : 7 - rank_of(sq);
}

constexpr Square mirror_vertical(Square sq) { return sq ^ 56; }

inline std::string square_name(Square sq) {
    std::string s(2, '?');
    s[0] = static_cast<char>('a' + file_of(sq));
    s[1] = static_cast<char>('1' + rank_of(sq));
    return s;
}

inline Square parse_square(char file_ch, char rank_ch) {
    if (file_ch < 'a' || file_ch > 'h' || rank_ch < '1' || rank_ch > '8') return NO_SQUARE;
    return make_square(file_ch - 'a', rank_ch - '1');
}

inline Square parse_square(std::string_view name) {
    Square sq = name.size() == 2 ? parse_square(name[0], name[1]) : NO_SQUARE;
    if (sq == NO_SQUARE) throw ParseError("bad square name: " + std::string(name));
    return sq;
}

/// Piece = kind + color packed into one byte; 0 means empty.
struct Piece {
    std::uint8_t raw = 0;

    Piece() = default;
    Piece(PieceKind k, Color c)
        : raw(static_cast<std::uint8_t>(1 + static_cast<int>(k) + 6 * static_cast<int>(c))) {}

    bool empty() const { return raw == 0; }
    PieceKind kind() const { return static_cast<PieceKind>((raw - 1) % 6); }
    Color color() const { return static_cast<Color>((raw - 1) / 6); }

    bool operator==(const Piece&) const = default;
};

inline char piece_char(Piece p) {
    static const char* white = "PNBRQK";
    static const char* black = "pnbrqk";
    if (p.empty()) return '.';
    return (p.color() == Color::White ? white : black)[static_cast<int>(p.kind())];
}

inline PieceKind piece_kind_from_char(char c) {
    switch (c) {
        case 'P': case 'p': return PieceKind::Pawn;
        case 'N': case 'n': return PieceKind::Knight;
        case 'B': case 'b': return PieceKind::Bishop;
        case 'R': case 'r': return PieceKind::Rook;
        case 'Q': case 'q': return PieceKind::Queen;
        case 'K': case 'k': return PieceKind::King;
        default: return PieceKind::None;
    }
}

struct Move {
    std::uint8_t from = 0;
    std::uint8_t to = 0;
    PieceKind promotion = PieceKind::None;
    std::uint8_t flags = 0;

    static constexpr std::uint8_t FlagCapture = 1;
    static constexpr std::uint8_t FlagEnPassant = 2;
    static constexpr std::uint8_t FlagCastle = 4;
    static constexpr std::uint8_t FlagDoublePush = 8;

    Move() = default;
    Move(Square f, Square t, PieceKind promo = PieceKind::None, std::uint8_t fl = 0)
        : from(static_cast<std::uint8_t>(f)),
          to(static_cast<std::uint8_t>(t)),
          promotion(promo),
          flags(fl) {}

    bool is_capture() const { return flags & (FlagCapture | FlagEnPassant); }
    bool is_en_passant() const { return flags & FlagEnPassant; }
    bool is_castle() const { return flags & FlagCastle; }
    bool is_double_push() const { return flags & FlagDoublePush; }
    bool is_promotion() const { return promotion != PieceKind::None; }
    bool is_null() const { return from == to; }

    bool operator==(const Move&) const = default;
};

/// Long algebraic form, e.g. "e2e4", "e7e8q".
inline std::string move_to_uci(const Move& m) {
    std::string s = square_name(m.from) + square_name(m.to);
    if (m.is_promotion()) s += "pnbrqk"[static_cast<int>(m.promotion)];
    return s;
}

enum class GameResult : std::uint8_t { WhiteWin, BlackWin, Draw, Unknown };

inline const char* result_text(GameResult r) {
    switch (r) {
        case GameResult::WhiteWin: return "1-0";
        case GameResult::BlackWin: return "0-1";
        case GameResult::Draw: return "1/2-1/2";
        default: return "*";
    }
}

}  // namespace evochess
