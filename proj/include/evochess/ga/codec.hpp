#pragma once

#include <stdexcept>
#include <string>

#include "evochess/eval/params.hpp"
#include "evochess/ga/chromosome.hpp"
#include "evochess/search/params.hpp"

// Gray-coded field packing. Each parameter occupies a contiguous run of bits,
// most significant first, holding the reflected-binary Gray code of its
// value: adjacent integers differ in exactly one bit, so single-bit mutations
// tend to make small value steps.

namespace evochess {

constexpr unsigned to_gray(unsigned value) { return value ^ (value >> 1); }

constexpr unsigned from_gray(unsigned gray) {
    unsigned value = gray;
    while (gray >>= 1) value ^= gray;
    return value;
}

/// Writes `value` as a Gray-coded `width`-bit field at `c.bits[at...]`.
inline void write_gray_field(Chromosome& c, int at, int value, int width) {
    if (value < 0 || value >= (1 << width))
        throw std::out_of_range("gray field: value " + std::to_string(value) +
                                " does not fit in " + std::to_string(width) + " bits");
    unsigned gray = to_gray(static_cast<unsigned>(value));
    for (int j = 0; j < width; ++j)
        c.bits[static_cast<size_t>(at + j)] =
            static_cast<std::uint8_t>((gray >> (width - 1 - j)) & 1);
}

/// Reads the Gray-coded `width`-bit field at `c.bits[at...]`.
inline int read_gray_field(const Chromosome& c, int at, int width) {
    unsigned gray = 0;
    for (int j = 0; j < width; ++j) gray = (gray << 1) | c.bits[static_cast<size_t>(at + j)];
    return static_cast<int>(from_gray(gray));
}

// ---- Evaluation genome: 4 x 11-bit material fields + 30 x 6-bit fields in
// registry order; PAWN_VALUE is the fixed reference and is not encoded. ----

inline Chromosome encode_eval(const EvalParams& p) {
    Chromosome c(GenomeKind::Evaluation);
    int at = 0;
    for (const auto& f : eval_fields()) {
        if (f.bits == 0) continue;
        int v = p.*(f.field);
        if (v < 0 || v >= (1 << f.bits))
            throw std::out_of_range(std::string("encode_eval: ") + f.name + " value " +
                                    std::to_string(v) + " out of range");
        write_gray_field(c, at, v, f.bits);
        at += f.bits;
    }
    return c;
}

inline EvalParams decode_eval(const Chromosome& c) {
    if (c.kind != GenomeKind::Evaluation)
        throw std::invalid_argument("decode_eval: not an evaluation chromosome");
    EvalParams p;  // PAWN_VALUE = 100
    int at = 0;
    for (const auto& f : eval_fields()) {
        if (f.bits == 0) continue;
        p.*(f.field) = read_gray_field(c, at, f.bits);
        at += f.bits;
    }
    return p;
}

// ---- Search genome: 18 fields in registry order, 70 bits. Extension fields
// occupy 3 bits (0-7) but their declared range is 0-4, so decoding clamps to
// the range maximum; encode accepts only in-range values. ----

inline Chromosome encode_search(const SearchParams& p) {
    Chromosome c(GenomeKind::Search);
    int at = 0;
    for (const auto& f : search_fields()) {
        int v = p.*(f.field);
        if (v < 0 || v > f.max)
            throw std::out_of_range(std::string("encode_search: ") + f.name + " value " +
                                    std::to_string(v) + " out of range 0-" +
                                    std::to_string(f.max));
        write_gray_field(c, at, v, f.bits);
        at += f.bits;
    }
    return c;
}

inline SearchParams decode_search(const Chromosome& c) {
    if (c.kind != GenomeKind::Search)
        throw std::invalid_argument("decode_search: not a search chromosome");
    SearchParams p;
    int at = 0;
    for (const auto& f : search_fields()) {
        int v = read_gray_field(c, at, f.bits);
        p.*(f.field) = v > f.max ? f.max : v;
        at += f.bits;
    }
    return p;
}

}  // namespace evochess
