#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "evochess/core/position.hpp"

namespace evochess {

using MoveList = std::vector<Move>;

namespace detail {

/// Per-from-square scratch buffer. Moves are sorted by (to-square, promotion
/// order Q,R,B,N) before being appended, which pins the documented generation
/// order: from-square ascending, then to-square ascending, then promotion kind.
class FromSquareMoves {
  public:
    void add(const Move& m) { moves_[count_++] = m; }

    void flush_into(MoveList& out) {
        auto key = [](const Move& m) {
            int promo_rank = 0;
            switch (m.promotion) {
                case PieceKind::Queen: promo_rank = 0; break;
                case PieceKind::Rook: promo_rank = 1; break;
                case PieceKind::Bishop: promo_rank = 2; break;
                case PieceKind::Knight: promo_rank = 3; break;
                default: break;
            }
            return static_cast<int>(m.to) * 4 + promo_rank;
        };
        std::sort(moves_.begin(), moves_.begin() + count_,
                  [&](const Move& a, const Move& b) { return key(a) < key(b); });
        out.insert(out.end(), moves_.begin(), moves_.begin() + count_);
        count_ = 0;
    }

  private:
    std::array<Move, 32> moves_{};
    size_t count_ = 0;
};

inline void add_pawn_move(FromSquareMoves& buf, Square from, Square to, std::uint8_t flags, bool promoting) {
    if (promoting) {
        for (PieceKind k : {PieceKind::Queen, PieceKind::Rook, PieceKind::Bishop, PieceKind::Knight})
            buf.add(Move(from, to, k, flags));
    } else {
        buf.add(Move(from, to, PieceKind::None, flags));
    }
}

inline void pseudo_moves_from(const Position& pos, Square from, FromSquareMoves& buf) {
    const Color us = pos.side_to_move();
    const Color them = ~us;
    const Piece p = pos.piece_at(from);
    const Bitboard occ = pos.occupied();
    const Bitboard own = pos.pieces(us);
    const Bitboard enemy = pos.pieces(them);

    if (p.kind() == PieceKind::Pawn) {
        const int forward = us == Color::White ? 8 : -8;
        const int start_rank = us == Color::White ? 1 : 6;
        const int promo_rank = us == Color::White ? 7 : 0;

        Square one = from + forward;
        if (!(occ & bb(one))) {
            add_pawn_move(buf, from, one, 0, rank_of(one) == promo_rank);
            if (rank_of(from) == start_rank) {
                Square two = one + forward;
                if (!(occ & bb(two))) buf.add(Move(from, two, PieceKind::None, Move::FlagDoublePush));
            }
        }
        Bitboard caps = pawn_attacks(us, from);
        Bitboard normal_caps = caps & enemy;
        while (normal_caps) {
            Square to = pop_lsb(normal_caps);
            add_pawn_move(buf, from, to, Move::FlagCapture, rank_of(to) == promo_rank);
        }
        if (pos.en_passant_target() != NO_SQUARE && (caps & bb(pos.en_passant_target())))
            buf.add(Move(from, pos.en_passant_target(), PieceKind::None, Move::FlagEnPassant));
        return;
    }

    Bitboard targets = piece_attacks(p.kind(), us, from, occ) & ~own;
    while (targets) {
        Square to = pop_lsb(targets);
        buf.add(Move(from, to, PieceKind::None, (enemy & bb(to)) ? Move::FlagCapture : 0));
    }

    if (p.kind() == PieceKind::King) {
        // Castling emitted fully legal: path empty, king not in, through, or
        // into check. Rights already imply king/rook on origin squares.
        const int rank = us == Color::White ? 0 : 7;
        if (from == make_square(4, rank) && !pos.in_check(us)) {
            const CastlingRight kside = us == Color::White ? CASTLE_WK : CASTLE_BK;
            const CastlingRight qside = us == Color::White ? CASTLE_WQ : CASTLE_BQ;
            if (pos.can_castle(kside)) {
                Square f1 = make_square(5, rank), g1 = make_square(6, rank);
                if (!(occ & (bb(f1) | bb(g1))) && !pos.square_attacked(f1, them) &&
                    !pos.square_attacked(g1, them))
                    buf.add(Move(from, g1, PieceKind::None, Move::FlagCastle));
            }
            if (pos.can_castle(qside)) {
                Square d1 = make_square(3, rank), c1 = make_square(2, rank), b1 = make_square(1, rank);
                if (!(occ & (bb(d1) | bb(c1) | bb(b1))) && !pos.square_attacked(d1, them) &&
                    !pos.square_attacked(c1, them))
                    buf.add(Move(from, c1, PieceKind::None, Move::FlagCastle));
            }
        }
    }
}

}  // namespace detail

/// All legal moves in the documented deterministic order.
inline MoveList legal_moves(const Position& pos) {
    MoveList out;
    out.reserve(48);
    const Color us = pos.side_to_move();
    detail::FromSquareMoves buf;
    MoveList pseudo;
    pseudo.reserve(32);

    Bitboard from_bb = pos.pieces(us);
    while (from_bb) {
        Square from = pop_lsb(from_bb);
        detail::pseudo_moves_from(pos, from, buf);
        pseudo.clear();
        buf.flush_into(pseudo);
        for (const Move& m : pseudo) {
            Position next = pos.apply(m);
            if (!next.in_check(us)) out.push_back(m);
        }
    }
    return out;
}

/// Validating move application: the spec-level contract. Hot paths generate
/// legal moves once and call Position::apply directly instead.
inline Position make_move(const Position& pos, const Move& m) {
    MoveList legal = legal_moves(pos);
    if (std::find(legal.begin(), legal.end(), m) == legal.end())
        throw std::invalid_argument("make_move: illegal move " + move_to_uci(m));
    return pos.apply(m);
}

/// Resolves long algebraic notation ("e2e4", "e7e8q") to the legal move.
inline Move move_from_uci(const Position& pos, std::string_view uci) {
    for (const Move& m : legal_moves(pos))
        if (move_to_uci(m) == uci) return m;
    throw std::invalid_argument("move_from_uci: not legal here: " + std::string(uci));
}

inline bool is_checkmate(const Position& pos) { return pos.in_check() && legal_moves(pos).empty(); }
inline bool is_stalemate(const Position& pos) { return !pos.in_check() && legal_moves(pos).empty(); }

/// Leaf count of the full legal-move tree; the standard move generator audit.
inline std::uint64_t perft(const Position& pos, int depth) {
    if (depth <= 0) return 1;
    MoveList moves = legal_moves(pos);
    if (depth == 1) return moves.size();
    std::uint64_t nodes = 0;
    for (const Move& m : moves) nodes += perft(pos.apply(m), depth - 1);
    return nodes;
}

}  // namespace evochess
