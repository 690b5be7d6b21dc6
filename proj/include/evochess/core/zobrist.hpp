#pragma once

#include <array>
#include <cstdint>

#include "evochess/core/types.hpp"

namespace evochess {
namespace zobrist {

namespace detail {

/// splitmix64 with a fixed seed keeps the keys identical on every platform.
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct Keys {
    std::array<std::array<std::uint64_t, 64>, 12> piece{};  // [color*6+kind][square]
    std::array<std::uint64_t, 16> castling{};
    std::array<std::uint64_t, 8> ep_file{};
    std::uint64_t black_to_move = 0;
};

constexpr Keys make_keys() {
    Keys k{};
    std::uint64_t state = 0x5eed5eed5eed5eedULL;
    for (auto& per_piece : k.piece)
        for (auto& v : per_piece) v = splitmix64(state);
    for (auto& v : k.castling) v = splitmix64(state);
    for (auto& v : k.ep_file) v = splitmix64(state);
    k.black_to_move = splitmix64(state);
    return k;
}

inline constexpr Keys KEYS = make_keys();

}  // namespace detail

inline std::uint64_t piece_key(Color c, PieceKind kind, Square sq) {
    return detail::KEYS.piece[static_cast<size_t>(static_cast<int>(c) * 6 + static_cast<int>(kind))]
                             [static_cast<size_t>(sq)];
}

inline std::uint64_t castling_key(int rights) { return detail::KEYS.castling[static_cast<size_t>(rights)]; }
inline std::uint64_t ep_file_key(int file) { return detail::KEYS.ep_file[static_cast<size_t>(file)]; }
inline std::uint64_t side_key() { return detail::KEYS.black_to_move; }

}  // namespace zobrist
}  // namespace evochess
