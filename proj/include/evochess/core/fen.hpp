#pragma once

#include <string>
#include <string_view>

#include "evochess/core/position.hpp"
#include "evochess/util/text.hpp"

namespace evochess {

inline const char* START_FEN = "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1";

/// Parses a six-field FEN string. Placement must satisfy the Position
/// invariants: one king per side, no pawns on back ranks, side not to move
/// not in check. Castling rights and the en-passant target are normalized
/// against the placement (impossible entries are dropped).
inline Position parse_fen(std::string_view fen) {
    auto fields = text::split_ws(fen);
    if (fields.size() != 6) throw ParseError("FEN must have 6 fields, got " + std::to_string(fields.size()));

    PositionBuilder b;

    // Field 1: piece placement, ranks 8 down to 1.
    {
        auto ranks = text::split(fields[0], '/');
        if (ranks.size() != 8) throw ParseError("FEN placement must have 8 ranks");
        int king_count[2] = {0, 0};
        for (int r = 0; r < 8; ++r) {
            int rank = 7 - r;
            int file = 0;
            for (char c : ranks[static_cast<size_t>(r)]) {
                if (c >= '1' && c <= '8') {
                    file += c - '0';
                } else {
                    PieceKind kind = piece_kind_from_char(c);
                    if (kind == PieceKind::None || file > 7)
                        throw ParseError(std::string("bad FEN placement char '") + c + "'");
                    Color color = (c >= 'a' && c <= 'z') ? Color::Black : Color::White;
                    if (kind == PieceKind::Pawn && (rank == 0 || rank == 7))
                        throw ParseError("FEN: pawn on back rank");
                    if (kind == PieceKind::King) ++king_count[static_cast<int>(color)];
                    b.put(make_square(file, rank), Piece(kind, color));
                    ++file;
                }
            }
            if (file != 8) throw ParseError("FEN rank does not span 8 files");
        }
        if (king_count[0] != 1 || king_count[1] != 1)
            throw ParseError("FEN must place exactly one king per side");
    }

    // Field 2: side to move.
    if (fields[1] == "w")
        b.side_to_move(Color::White);
    else if (fields[1] == "b")
        b.side_to_move(Color::Black);
    else
        throw ParseError("FEN side-to-move must be 'w' or 'b'");

    // Field 3: castling rights, normalized against piece placement.
    {
        std::uint8_t rights = 0;
        if (fields[2] != "-") {
            for (char c : fields[2]) {
                switch (c) {
                    case 'K': rights |= CASTLE_WK; break;
                    case 'Q': rights |= CASTLE_WQ; break;
                    case 'k': rights |= CASTLE_BK; break;
                    case 'q': rights |= CASTLE_BQ; break;
                    default: throw ParseError(std::string("bad FEN castling char '") + c + "'");
                }
            }
        }
        const Position& p = b.get();
        auto has = [&](Square sq, PieceKind k, Color c) { return p.piece_at(sq) == Piece(k, c); };
        if (!has(make_square(4, 0), PieceKind::King, Color::White)) rights &= ~(CASTLE_WK | CASTLE_WQ);
        if (!has(make_square(7, 0), PieceKind::Rook, Color::White)) rights &= static_cast<std::uint8_t>(~CASTLE_WK);
        if (!has(make_square(0, 0), PieceKind::Rook, Color::White)) rights &= static_cast<std::uint8_t>(~CASTLE_WQ);
        if (!has(make_square(4, 7), PieceKind::King, Color::Black)) rights &= ~(CASTLE_BK | CASTLE_BQ);
        if (!has(make_square(7, 7), PieceKind::Rook, Color::Black)) rights &= static_cast<std::uint8_t>(~CASTLE_BK);
        if (!has(make_square(0, 7), PieceKind::Rook, Color::Black)) rights &= static_cast<std::uint8_t>(~CASTLE_BQ);
        b.castling(rights);
    }

    // Field 4: en-passant target. Kept only when the placement shows a pawn
    // that has just double-pushed over the given square.
    if (fields[3] != "-") {
        if (fields[3].size() != 2) throw ParseError("bad FEN en-passant field");
        Square ep = parse_square(fields[3][0], fields[3][1]);
        if (ep == NO_SQUARE) throw ParseError("bad FEN en-passant square");
        const Position& p = b.get();
        Color mover = ~p.side_to_move();  // side that would have just pushed
        int expected_rank = mover == Color::White ? 2 : 5;
        bool plausible = false;
        if (rank_of(ep) == expected_rank) {
            Square pawn_sq = mover == Color::White ? ep + 8 : ep - 8;
            Square origin = mover == Color::White ? ep - 8 : ep + 8;
            plausible = p.piece_at(pawn_sq) == Piece(PieceKind::Pawn, mover) &&
                        p.piece_at(ep).empty() && p.piece_at(origin).empty();
        }
        if (plausible) b.en_passant(ep);
    }

    b.clocks(text::parse_int<int>(fields[4], "FEN halfmove clock"),
             text::parse_int<int>(fields[5], "FEN fullmove number"));
    if (b.get().halfmove_clock() < 0 || b.get().fullmove_number() < 1)
        throw ParseError("FEN clock fields out of range");

    const Position& pos = b.get();
    if (pos.in_check(~pos.side_to_move())) throw ParseError("FEN: side not to move is in check");
    return pos;
}

inline std::string to_fen(const Position& pos) {
    std::string out;
    for (int rank = 7; rank >= 0; --rank) {
        int run = 0;
        for (int file = 0; file < 8; ++file) {
            Piece p = pos.piece_at(make_square(file, rank));
            if (p.empty()) {
                ++run;
            } else {
                if (run) out += static_cast<char>('0' + run);
                run = 0;
                out += piece_char(p);
            }
        }
        if (run) out += static_cast<char>('0' + run);
        if (rank) out += '/';
    }
    out += pos.side_to_move() == Color::White ? " w " : " b ";
    if (pos.castling_rights() == 0) {
        out += '-';
    } else {
        if (pos.can_castle(CASTLE_WK)) out += 'K';
        if (pos.can_castle(CASTLE_WQ)) out += 'Q';
        if (pos.can_castle(CASTLE_BK)) out += 'k';
        if (pos.can_castle(CASTLE_BQ)) out += 'q';
    }
    out += ' ';
    out += pos.en_passant_target() == NO_SQUARE ? "-" : square_name(pos.en_passant_target());
    out += ' ';
    out += std::to_string(pos.halfmove_clock());
    out += ' ';
    out += std::to_string(pos.fullmove_number());
    return out;
}

}  // namespace evochess
