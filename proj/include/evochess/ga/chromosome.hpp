#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "evochess/util/rng.hpp"
#include "evochess/util/text.hpp"

// Fixed-length bit-string genomes: 224 bits for evaluation parameters,
// 70 bits for search parameters.

namespace evochess {

enum class GenomeKind { Evaluation, Search };

constexpr int genome_bits(GenomeKind kind) {
    return kind == GenomeKind::Evaluation ? 224 : 70;
}

struct Chromosome {
    GenomeKind kind;
    std::vector<std::uint8_t> bits;  // one element per bit, each 0 or 1

    explicit Chromosome(GenomeKind k) : kind(k), bits(static_cast<size_t>(genome_bits(k)), 0) {}

    int size() const { return static_cast<int>(bits.size()); }
    bool operator==(const Chromosome&) const = default;
};

inline Chromosome random_chromosome(GenomeKind kind, Rng& rng) {
    Chromosome c(kind);
    for (auto& b : c.bits) b = rng.coin_flip() ? 1 : 0;
    return c;
}

/// Hex text form: bits packed four per digit, first bit = high bit of the
/// first digit. A final partial digit (the 70-bit genome) is padded with
/// zeros in its low bits.
inline std::string chromosome_to_hex(const Chromosome& c) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve((c.bits.size() + 3) / 4);
    for (size_t i = 0; i < c.bits.size(); i += 4) {
        int nibble = 0;
        for (size_t j = 0; j < 4; ++j) {
            nibble <<= 1;
            if (i + j < c.bits.size()) nibble |= c.bits[i + j];
        }
        out += digits[nibble];
    }
    return out;
}

inline Chromosome chromosome_from_hex(GenomeKind kind, std::string_view hex) {
    Chromosome c(kind);
    const size_t want = (c.bits.size() + 3) / 4;
    if (hex.size() != want)
        throw ParseError("chromosome hex: expected " + std::to_string(want) + " digits, got " +
                         std::to_string(hex.size()));
    for (size_t i = 0; i < hex.size(); ++i) {
        char ch = hex[i];
        int nibble;
        if (ch >= '0' && ch <= '9') nibble = ch - '0';
        else if (ch >= 'a' && ch <= 'f') nibble = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') nibble = ch - 'A' + 10;
        else throw ParseError(std::string("chromosome hex: bad digit '") + ch + "'");
        for (int j = 0; j < 4; ++j) {
            size_t at = i * 4 + static_cast<size_t>(j);
            int bit = (nibble >> (3 - j)) & 1;
            if (at < c.bits.size()) {
                c.bits[at] = static_cast<std::uint8_t>(bit);
            } else if (bit) {
                throw ParseError("chromosome hex: nonzero padding bits");
            }
        }
    }
    return c;
}

}  // namespace evochess
