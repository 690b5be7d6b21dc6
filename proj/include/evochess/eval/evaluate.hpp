#pragma once

#include <cstdlib>

#include "evochess/core/bitboard.hpp"
#include "evochess/core/position.hpp"
#include "evochess/eval/params.hpp"

// Static evaluation under the 35 EvalParams weights. The feature definitions
// follow standard chess-programming conventions (the weight names fix only
// the vocabulary); each is documented at its implementation site. Integer
// arithmetic throughout — scores are bit-exact across platforms.

namespace evochess {

namespace detail {

/// Center-heavy knight-square table, values 0–4 by distance from the edge
/// (edge ring 0, then 1, 3, and 4 for the four center squares).
constexpr std::array<int, 64> make_knight_square_table() {
    std::array<int, 64> t{};
    constexpr int ring_value[4] = {0, 1, 3, 4};
    for (Square sq = 0; sq < 64; ++sq) {
        int f = file_of(sq), r = rank_of(sq);
        int ring = f < 4 ? f : 7 - f;
        int rr = r < 4 ? r : 7 - r;
        t[static_cast<size_t>(sq)] = ring_value[ring < rr ? ring : rr];
    }
    return t;
}

inline constexpr std::array<int, 64> KNIGHT_SQUARE_TABLE = make_knight_square_table();

inline int chebyshev(Square a, Square b) {
    int df = std::abs(file_of(a) - file_of(b));
    int dr = std::abs(rank_of(a) - rank_of(b));
    return df > dr ? df : dr;
}

/// All non-material evaluation terms for one side, positive = good for `us`.
inline int side_terms(const Position& pos, const EvalParams& w, Color us) {
    const Color them = ~us;
    const Bitboard own_pawns = pos.pieces(us, PieceKind::Pawn);
    const Bitboard foe_pawns = pos.pieces(them, PieceKind::Pawn);
    const Bitboard occ = pos.occupied();
    const Square own_king = pos.king_square(us);
    const Square foe_king = pos.king_square(them);
    int score = 0;

    // Squares our pawns currently attack (outpost support test).
    Bitboard own_pawn_attacks = 0;
    for (Bitboard b = own_pawns; b;) own_pawn_attacks |= pawn_attacks(us, pop_lsb(b));

    // ---- Pawns ----
    for (Bitboard b = own_pawns; b;) {
        Square sq = pop_lsb(b);
        int rr = relative_rank(us, sq);  // 1 = starting rank, 6 = seventh
        int f = file_of(sq);

        // Advance bonus x squares advanced; A = wing files, B = center files.
        int advance = rr - 1;
        score += (f == 3 || f == 4 ? w.PAWN_ADVANCE_B : w.PAWN_ADVANCE_A) * advance;

        bool passed = (front_span(us, sq) & foe_pawns) == 0;
        if (passed) {
            score += w.PASSED_PAWN_MULT * advance;
            score += w.PASSED_PAWN_ENEMY_KING_DIST * chebyshev(foe_king, sq);
            // Rook support from behind on the same file, no piece between.
            Bitboard behind = rook_attacks(sq, occ) & file_bb(f) & ~front_span(us, sq);
            if (behind & pos.pieces(us, PieceKind::Rook)) score += w.ROOK_BEHIND_PASSED_PAWN;
        }
        if (front_span(us, sq) & file_bb(f) & own_pawns) score -= w.DOUBLED_PAWN_PENALTY;
        bool guardable = (pawn_guard_span(us, sq) & own_pawns) != 0;
        if ((adjacent_files_bb(f) & own_pawns) == 0) score -= w.ISOLATED_PAWN_PENALTY;
        // Backward: no own pawn can ever guard it, none guards its stop
        // square, and an enemy pawn covers that stop square.
        Square stop = us == Color::White ? sq + 8 : sq - 8;
        if (!guardable && (pawn_attacks(them, stop) & own_pawns) == 0 &&
            (pawn_attacks(us, stop) & foe_pawns) != 0)
            score -= w.BACKWARD_PAWN_PENALTY;
    }

    // ---- Weak squares: ranks 4–6 (our view) that none of our pawns can
    // ever guard; holes an enemy piece could occupy unmolested. ----
    for (int rr = 3; rr <= 5; ++rr) {
        int board_rank = us == Color::White ? rr : 7 - rr;
        for (int f = 0; f < 8; ++f) {
            Square sq = make_square(f, board_rank);
            if ((pawn_guard_span(us, sq) & own_pawns) == 0) score -= w.WEAK_SQUARE_PENALTY;
        }
    }

    // ---- Knights ----
    for (Bitboard b = pos.pieces(us, PieceKind::Knight); b;) {
        Square sq = pop_lsb(b);
        score += w.KNIGHT_SQ_MULT * detail::KNIGHT_SQUARE_TABLE[static_cast<size_t>(sq)];
        int rr = relative_rank(us, sq);
        bool on_hole = (pawn_guard_span(them, sq) & foe_pawns) == 0;  // enemy pawns can never hit it
        if (rr >= 3 && rr <= 5 && on_hole && (own_pawn_attacks & bb(sq)))
            score += w.KNIGHT_OUTPOST_MULT;
    }

    // ---- Bishops ----
    {
        Bitboard bishops = pos.pieces(us, PieceKind::Bishop);
        if (popcount(bishops) >= 2) score += w.BISHOP_PAIR;
        for (Bitboard b = bishops; b;) {
            Square sq = pop_lsb(b);
            score += w.BISHOP_MOBILITY * popcount(bishop_attacks(sq, occ) & ~pos.pieces(us));
        }
    }

    // ---- Rooks ----
    for (Bitboard b = pos.pieces(us, PieceKind::Rook); b;) {
        Square sq = pop_lsb(b);
        int f = file_of(sq);
        Bitboard file = file_bb(f);
        Bitboard attacks = rook_attacks(sq, occ);

        score += w.ROOK_MOBILITY * popcount(attacks & ~pos.pieces(us));
        int foe_king_file = file_of(foe_king);
        if (f == foe_king_file) score += w.ROOK_ATTACK_KING_FILE;
        if (std::abs(f - foe_king_file) == 1) {
            score += w.ROOK_ATTACK_KING_ADJ_FILE;
            if (foe_king_file <= 1 || foe_king_file >= 6) score += w.ROOK_ATTACK_KING_ADJ_FILE_ABGH;
        }
        score += w.ROOK_COLUMN_MULT * (7 - std::abs(f - foe_king_file));
        if (relative_rank(us, sq) == 6) score += w.ROOK_7TH_RANK;
        if (attacks & pos.pieces(us, PieceKind::Rook)) score += w.ROOK_CONNECTED;
        if ((file & (own_pawns | foe_pawns)) == 0) {
            score += w.ROOK_OPEN_FILE;
        } else if ((file & own_pawns) == 0) {
            score += w.ROOK_SEMI_OPEN_FILE;
            // Enemy pawn on this half-open file that its own pawns can never
            // defend: a fixed target on an open column.
            for (Bitboard t = file & foe_pawns; t;) {
                Square p = pop_lsb(t);
                if ((pawn_guard_span(them, p) & foe_pawns) == 0) {
                    score += w.ROOK_ATCK_WEAK_PAWN_OPEN_COLUMN;
                    break;
                }
            }
        }
    }

    // ---- Queens ----
    for (Bitboard b = pos.pieces(us, PieceKind::Queen); b;) {
        Square sq = pop_lsb(b);
        score += w.QUEEN_MOBILITY * popcount(queen_attacks(sq, occ) & ~pos.pieces(us));
    }

    // ---- King shelter: the three files around the king. ----
    {
        int kf = file_of(own_king);
        int krr = relative_rank(us, own_king);
        for (int f = kf - 1; f <= kf + 1; ++f) {
            if (f < 0 || f > 7) continue;
            bool king_file = f == kf;
            // Friendly shield pawn: nearest own pawn in front of the king on
            // this file. Absent -> full penalty; advanced exactly one square
            // past the shield rank -> the reduced penalty.
            int shield_rr = 0;  // 0 = none found
            for (Bitboard b = own_pawns & file_bb(f); b;) {
                Square p = pop_lsb(b);
                int prr = relative_rank(us, p);
                if (prr > krr && (shield_rr == 0 || prr < shield_rr)) shield_rr = prr;
            }
            if (shield_rr == 0 || shield_rr > krr + 2)
                score -= king_file ? w.KING_NO_FRIENDLY_PAWN : w.KING_NO_FRIENDLY_PAWN_ADJ;
            else if (shield_rr == krr + 2)
                score -= w.KING_FRIENDLY_PAWN_ADVANCED1;
            // Absent enemy pawn = no storm threat on this file.
            if ((file_bb(f) & foe_pawns) == 0)
                score += king_file ? w.KING_NO_ENEMY_PAWN : w.KING_NO_ENEMY_PAWN_ADJ;
        }

        // Enemy piece pressure on the 3x3 king zone.
        Bitboard zone = king_attacks(own_king) | bb(own_king);
        int pressure = 0;
        for (Bitboard b = pos.pieces(them) & ~foe_pawns & ~pos.pieces(them, PieceKind::King); b;) {
            Square sq = pop_lsb(b);
            pressure += popcount(piece_attacks(pos.piece_at(sq).kind(), them, sq, occ) & zone);
        }
        score -= w.KING_PRESSURE_MULT * pressure;
    }

    return score;
}

}  // namespace detail

/// Material balance, white perspective: sum of piece values, white - black.
inline int material_count(const Position& pos, const EvalParams& w) {
    auto value = [&](PieceKind k) {
        switch (k) {
            case PieceKind::Pawn: return w.PAWN_VALUE;
            case PieceKind::Knight: return w.KNIGHT_VALUE;
            case PieceKind::Bishop: return w.BISHOP_VALUE;
            case PieceKind::Rook: return w.ROOK_VALUE;
            case PieceKind::Queen: return w.QUEEN_VALUE;
            default: return 0;
        }
    };
    int score = 0;
    for (int k = 0; k < 5; ++k) {
        PieceKind kind = static_cast<PieceKind>(k);
        score += value(kind) * (popcount(pos.pieces(Color::White, kind)) -
                                popcount(pos.pieces(Color::Black, kind)));
    }
    return score;
}

/// Full static evaluation in centipawns from the side-to-move perspective.
inline int evaluate(const Position& pos, const EvalParams& w) {
    int white = material_count(pos, w) + detail::side_terms(pos, w, Color::White) -
                detail::side_terms(pos, w, Color::Black);
    return pos.side_to_move() == Color::White ? white : -white;
}

}  // namespace evochess
