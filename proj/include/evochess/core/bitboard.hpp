#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "evochess/core/types.hpp"

namespace evochess {

using Bitboard = std::uint64_t;

constexpr Bitboard bb(Square sq) { return Bitboard{1} << sq; }

inline int popcount(Bitboard b) { return std::popcount(b); }
inline Square lsb(Bitboard b) { return std::countr_zero(b); }

/// Pops the lowest set bit; iteration order is a1..h8, which fixes the
/// documented deterministic move generation order.
inline Square pop_lsb(Bitboard& b) {
    Square sq = lsb(b);
    b &= b - 1;
    return sq;
}

constexpr Bitboard FILE_A_BB = 0x0101010101010101ULL;
constexpr Bitboard RANK_1_BB = 0xffULL;

constexpr Bitboard file_bb(int file) { return FILE_A_BB << file; }
constexpr Bitboard rank_bb(int rank) { return RANK_1_BB << (8 * rank); }

constexpr Bitboard adjacent_files_bb(int file) {
    Bitboard b = 0;
    if (file > 0) b |= file_bb(file - 1);
    if (file < 7) b |= file_bb(file + 1);
    return b;
}

namespace detail {

constexpr bool on_board(int file, int rank) { return file >= 0 && file < 8 && rank >= 0 && rank < 8; }

constexpr std::array<Bitboard, 64> make_leaper_table(const int (*deltas)[2], int n) {
    std::array<Bitboard, 64> table{};
    for (Square sq = 0; sq < 64; ++sq) {
        Bitboard b = 0;
        for (int i = 0; i < n; ++i) {
            int f = file_of(sq) + deltas[i][0];
            int r = rank_of(sq) + deltas[i][1];
            if (on_board(f, r)) b |= bb(make_square(f, r));
        }
        table[static_cast<size_t>(sq)] = b;
    }
    return table;
}

constexpr int KNIGHT_DELTAS[8][2] = {{1, 2}, {2, 1}, {2, -1}, {1, -2}, {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}};
constexpr int KING_DELTAS[8][2] = {{0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}};

inline constexpr std::array<Bitboard, 64> KNIGHT_ATTACKS = make_leaper_table(KNIGHT_DELTAS, 8);
inline constexpr std::array<Bitboard, 64> KING_ATTACKS = make_leaper_table(KING_DELTAS, 8);

/// Rays indexed [direction][square]; directions 0..3 point "up" in square
/// index order (E, N, NE, NW), 4..7 point "down" (W, S, SW, SE).
constexpr int RAY_DELTAS[8][2] = {{1, 0}, {0, 1}, {1, 1}, {-1, 1}, {-1, 0}, {0, -1}, {-1, -1}, {1, -1}};

constexpr std::array<std::array<Bitboard, 64>, 8> make_rays() {
    std::array<std::array<Bitboard, 64>, 8> rays{};
    for (int d = 0; d < 8; ++d) {
        for (Square sq = 0; sq < 64; ++sq) {
            Bitboard b = 0;
            int f = file_of(sq) + RAY_DELTAS[d][0];
            int r = rank_of(sq) + RAY_DELTAS[d][1];
            while (on_board(f, r)) {
                b |= bb(make_square(f, r));
                f += RAY_DELTAS[d][0];
                r += RAY_DELTAS[d][1];
            }
            rays[static_cast<size_t>(d)][static_cast<size_t>(sq)] = b;
        }
    }
    return rays;
}

inline constexpr std::array<std::array<Bitboard, 64>, 8> RAYS = make_rays();

inline Bitboard ray_attack(int dir, Square sq, Bitboard occupied) {
    Bitboard ray = RAYS[static_cast<size_t>(dir)][static_cast<size_t>(sq)];
    Bitboard blockers = ray & occupied;
    if (blockers == 0) return ray;
    // Up-rays stop at the lowest blocker, down-rays at the highest.
    Square stop = dir < 4 ? std::countr_zero(blockers) : 63 - std::countl_zero(blockers);
    return ray & ~RAYS[static_cast<size_t>(dir)][static_cast<size_t>(stop)];
}

}  // namespace detail

inline Bitboard knight_attacks(Square sq) { return detail::KNIGHT_ATTACKS[static_cast<size_t>(sq)]; }
inline Bitboard king_attacks(Square sq) { return detail::KING_ATTACKS[static_cast<size_t>(sq)]; }

inline Bitboard pawn_attacks(Color c, Square sq) {
    Bitboard b = bb(sq);
    Bitboard pushed = c == Color::White ? b << 8 : b >> 8;
    return ((pushed << 1) & ~FILE_A_BB) | ((pushed >> 1) & ~file_bb(7));
}

inline Bitboard bishop_attacks(Square sq, Bitboard occupied) {
    return detail::ray_attack(2, sq, occupied) | detail::ray_attack(3, sq, occupied) |
           detail::ray_attack(6, sq, occupied) | detail::ray_attack(7, sq, occupied);
}

inline Bitboard rook_attacks(Square sq, Bitboard occupied) {
    return detail::ray_attack(0, sq, occupied) | detail::ray_attack(1, sq, occupied) |
           detail::ray_attack(4, sq, occupied) | detail::ray_attack(5, sq, occupied);
}

inline Bitboard queen_attacks(Square sq, Bitboard occupied) {
    return bishop_attacks(sq, occupied) | rook_attacks(sq, occupied);
}

inline Bitboard piece_attacks(PieceKind kind, Color c, Square sq, Bitboard occupied) {
    switch (kind) {
        case PieceKind::Pawn: return pawn_attacks(c, sq);
        case PieceKind::Knight: return knight_attacks(sq);
        case PieceKind::Bishop: return bishop_attacks(sq, occupied);
        case PieceKind::Rook: return rook_attacks(sq, occupied);
        case PieceKind::Queen: return queen_attacks(sq, occupied);
        case PieceKind::King: return king_attacks(sq);
        default: return 0;
    }
}

namespace detail {

/// All squares strictly ahead of `sq` (from `c`'s view) on the same and
/// adjacent files. Empty intersection with enemy pawns = passed pawn.
constexpr std::array<std::array<Bitboard, 64>, 2> make_front_spans() {
    std::array<std::array<Bitboard, 64>, 2> spans{};
    for (int c = 0; c < 2; ++c) {
        for (Square sq = 0; sq < 64; ++sq) {
            Bitboard files = file_bb(file_of(sq)) | adjacent_files_bb(file_of(sq));
            Bitboard ahead = 0;
            for (int r = 0; r < 8; ++r) {
                bool in_front = c == 0 ? r > rank_of(sq) : r < rank_of(sq);
                if (in_front) ahead |= rank_bb(r);
            }
            spans[static_cast<size_t>(c)][static_cast<size_t>(sq)] = files & ahead;
        }
    }
    return spans;
}

inline constexpr std::array<std::array<Bitboard, 64>, 2> FRONT_SPANS = make_front_spans();

/// Squares from which a pawn of color `c` could, now or after advancing,
/// defend `sq`: adjacent files, any rank behind the square (from `c`'s view).
constexpr std::array<std::array<Bitboard, 64>, 2> make_guard_spans() {
    std::array<std::array<Bitboard, 64>, 2> spans{};
    for (int c = 0; c < 2; ++c) {
        for (Square sq = 0; sq < 64; ++sq) {
            Bitboard files = adjacent_files_bb(file_of(sq));
            Bitboard behind = 0;
            for (int r = 0; r < 8; ++r) {
                bool is_behind = c == 0 ? r < rank_of(sq) : r > rank_of(sq);
                if (is_behind) behind |= rank_bb(r);
            }
            spans[static_cast<size_t>(c)][static_cast<size_t>(sq)] = files & behind;
        }
    }
    return spans;
}

inline constexpr std::array<std::array<Bitboard, 64>, 2> GUARD_SPANS = make_guard_spans();

}  // namespace detail

inline Bitboard front_span(Color c, Square sq) {
    return detail::FRONT_SPANS[static_cast<size_t>(c)][static_cast<size_t>(sq)];
}

inline Bitboard pawn_guard_span(Color c, Square sq) {
    return detail::GUARD_SPANS[static_cast<size_t>(c)][static_cast<size_t>(sq)];
}

}  // namespace evochess
