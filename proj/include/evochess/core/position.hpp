#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "evochess/core/bitboard.hpp"
#include "evochess/core/types.hpp"
#include "evochess/core/zobrist.hpp"

namespace evochess {

/// Castling right bits.
enum CastlingRight : std::uint8_t {
    CASTLE_WK = 1,
    CASTLE_WQ = 2,
    CASTLE_BK = 4,
    CASTLE_BQ = 8,
};

/// Complete game state. Immutable after construction: make_move returns a new
/// value, which makes every operation on Position pure and thread-safe.
class Position {
  public:
    Position() = default;

    static Position initial();

    Piece piece_at(Square sq) const { return board_[static_cast<size_t>(sq)]; }
    Color side_to_move() const { return stm_; }
    int castling_rights() const { return castling_; }
    bool can_castle(CastlingRight r) const { return castling_ & r; }
    Square en_passant_target() const { return ep_; }  // NO_SQUARE when absent
    int halfmove_clock() const { return halfmove_clock_; }
    int fullmove_number() const { return fullmove_number_; }
    std::uint64_t hash() const { return hash_; }

    Bitboard pieces(Color c) const { return by_color_[static_cast<size_t>(c)]; }
    Bitboard pieces(PieceKind k) const { return by_kind_[static_cast<size_t>(k)]; }
    Bitboard pieces(Color c, PieceKind k) const {
        return by_color_[static_cast<size_t>(c)] & by_kind_[static_cast<size_t>(k)];
    }
    Bitboard occupied() const { return by_color_[0] | by_color_[1]; }

    Square king_square(Color c) const { return lsb(pieces(c, PieceKind::King)); }

    bool square_attacked(Square sq, Color by) const {
        Bitboard occ = occupied();
        if (pawn_attacks(~by, sq) & pieces(by, PieceKind::Pawn)) return true;
        if (knight_attacks(sq) & pieces(by, PieceKind::Knight)) return true;
        if (king_attacks(sq) & pieces(by, PieceKind::King)) return true;
        Bitboard diag = bishop_attacks(sq, occ);
        if (diag & (pieces(by, PieceKind::Bishop) | pieces(by, PieceKind::Queen))) return true;
        Bitboard orth = rook_attacks(sq, occ);
        if (orth & (pieces(by, PieceKind::Rook) | pieces(by, PieceKind::Queen))) return true;
        return false;
    }

    bool in_check(Color c) const { return square_attacked(king_square(c), ~c); }
    bool in_check() const { return in_check(stm_); }

    /// Applies a move assumed pseudo-legal for the side to move; full legality
    /// (own king left in check) is the move generator's responsibility.
    Position apply(const Move& m) const {
        Position next = *this;
        next.apply_in_place(m);
        return next;
    }

    /// Applies a "null move": the side to move passes. Not a legal chess move;
    /// exists for the search's null-move pruning. Clears any en-passant right.
    Position apply_null() const {
        Position next = *this;
        next.hash_ ^= next.ep_hash_component();
        next.ep_ = NO_SQUARE;
        ++next.halfmove_clock_;
        if (next.stm_ == Color::Black) ++next.fullmove_number_;
        next.stm_ = ~next.stm_;
        next.hash_ ^= zobrist::side_key();
        return next;
    }

    bool operator==(const Position& other) const {
        return board_ == other.board_ && stm_ == other.stm_ && castling_ == other.castling_ &&
               ep_ == other.ep_ && halfmove_clock_ == other.halfmove_clock_ &&
               fullmove_number_ == other.fullmove_number_;
    }

  private:
    friend class PositionBuilder;

    std::array<Piece, 64> board_{};
    std::array<Bitboard, 2> by_color_{};
    std::array<Bitboard, 6> by_kind_{};
    Color stm_ = Color::White;
    std::uint8_t castling_ = 0;
    Square ep_ = NO_SQUARE;
    int halfmove_clock_ = 0;
    int fullmove_number_ = 1;
    std::uint64_t hash_ = 0;

    void put_piece(Square sq, Piece p) {
        board_[static_cast<size_t>(sq)] = p;
        by_color_[static_cast<size_t>(p.color())] |= bb(sq);
        by_kind_[static_cast<size_t>(p.kind())] |= bb(sq);
        hash_ ^= zobrist::piece_key(p.color(), p.kind(), sq);
    }

    void remove_piece(Square sq) {
        Piece p = board_[static_cast<size_t>(sq)];
        board_[static_cast<size_t>(sq)] = Piece{};
        by_color_[static_cast<size_t>(p.color())] &= ~bb(sq);
        by_kind_[static_cast<size_t>(p.kind())] &= ~bb(sq);
        hash_ ^= zobrist::piece_key(p.color(), p.kind(), sq);
    }

    /// En passant is hashed only when a capture is actually available, so
    /// repetition detection follows the FIDE notion of "same position".
    std::uint64_t ep_hash_component() const {
        if (ep_ == NO_SQUARE) return 0;
        if (pawn_attacks(~stm_, ep_) & pieces(stm_, PieceKind::Pawn))
            return zobrist::ep_file_key(file_of(ep_));
        return 0;
    }

    void apply_in_place(const Move& m) {
        const Color us = stm_;
        const Color them = ~us;
        const Square from = m.from;
        const Square to = m.to;
        const Piece moving = piece_at(from);
        if (moving.empty() || moving.color() != us)
            throw std::invalid_argument("apply: no piece of the side to move on " + square_name(from));

        hash_ ^= ep_hash_component();
        hash_ ^= zobrist::castling_key(castling_);

        bool resets_clock = moving.kind() == PieceKind::Pawn || m.is_capture();

        if (m.is_en_passant()) {
            Square victim = make_square(file_of(to), rank_of(from));
            remove_piece(victim);
        } else if (m.is_capture()) {
            remove_piece(to);
        }

        remove_piece(from);
        put_piece(to, m.is_promotion() ? Piece(m.promotion, us) : moving);

        if (m.is_castle()) {
            // Rook hop: king has already been moved to its destination.
            Square rook_from, rook_to;
            if (file_of(to) == 6) {  // king side
                rook_from = make_square(7, rank_of(to));
                rook_to = make_square(5, rank_of(to));
            } else {  // queen side
                rook_from = make_square(0, rank_of(to));
                rook_to = make_square(3, rank_of(to));
            }
            Piece rook = piece_at(rook_from);
            remove_piece(rook_from);
            put_piece(rook_to, rook);
        }

        // Castling rights decay when king or rooks leave/lose their squares.
        auto clear_right = [&](Square sq, std::uint8_t right) {
            if (from == sq || to == sq) castling_ &= static_cast<std::uint8_t>(~right);
        };
        if (moving.kind() == PieceKind::King)
            castling_ &= static_cast<std::uint8_t>(us == Color::White ? ~(CASTLE_WK | CASTLE_WQ)
                                                                      : ~(CASTLE_BK | CASTLE_BQ));
        clear_right(make_square(7, 0), CASTLE_WK);
        clear_right(make_square(0, 0), CASTLE_WQ);
        clear_right(make_square(7, 7), CASTLE_BK);
        clear_right(make_square(0, 7), CASTLE_BQ);

        ep_ = NO_SQUARE;
        if (m.is_double_push()) ep_ = make_square(file_of(from), (rank_of(from) + rank_of(to)) / 2);

        halfmove_clock_ = resets_clock ? 0 : halfmove_clock_ + 1;
        if (us == Color::Black) ++fullmove_number_;
        stm_ = them;

        hash_ ^= zobrist::castling_key(castling_);
        hash_ ^= zobrist::side_key();
        hash_ ^= ep_hash_component();
    }
};

/// Assembles Positions square by square; used by the FEN parser.
class PositionBuilder {
  public:
    void put(Square sq, Piece p) { pos_.put_piece(sq, p); }
    void side_to_move(Color c) {
        if (c == Color::Black && pos_.stm_ == Color::White) pos_.hash_ ^= zobrist::side_key();
        pos_.stm_ = c;
    }
    void castling(std::uint8_t rights) {
        pos_.hash_ ^= zobrist::castling_key(pos_.castling_);
        pos_.castling_ = rights;
        pos_.hash_ ^= zobrist::castling_key(rights);
    }
    void en_passant(Square sq) {
        pos_.hash_ ^= pos_.ep_hash_component();
        pos_.ep_ = sq;
        pos_.hash_ ^= pos_.ep_hash_component();
    }
    void clocks(int halfmove, int fullmove) {
        pos_.halfmove_clock_ = halfmove;
        pos_.fullmove_number_ = fullmove;
    }
    const Position& get() const { return pos_; }

  private:
    Position pos_;
};

inline Position Position::initial() {
    PositionBuilder b;
    const PieceKind back[8] = {PieceKind::Rook, PieceKind::Knight, PieceKind::Bishop, PieceKind::Queen,
                               PieceKind::King, PieceKind::Bishop, PieceKind::Knight, PieceKind::Rook};
    for (int f = 0; f < 8; ++f) {
        b.put(make_square(f, 0), Piece(back[f], Color::White));
        b.put(make_square(f, 1), Piece(PieceKind::Pawn, Color::White));
        b.put(make_square(f, 6), Piece(PieceKind::Pawn, Color::Black));
        b.put(make_square(f, 7), Piece(back[f], Color::Black));
    }
    b.castling(CASTLE_WK | CASTLE_WQ | CASTLE_BK | CASTLE_BQ);
    return b.get();
}

}  // namespace evochess
