#pragma once

#include <array>
#include <istream>
#include <ostream>
#include <string>

#include "evochess/util/text.hpp"

namespace evochess {

/// The 35 evaluation weights. All centipawn units or centipawn
/// multipliers, all non-negative. PAWN_VALUE is the fixed 100-centipawn
/// reference and is never encoded in a chromosome.
struct EvalParams {
    int PAWN_VALUE = 100;
    int KNIGHT_VALUE = 0;
    int BISHOP_VALUE = 0;
    int ROOK_VALUE = 0;
    int QUEEN_VALUE = 0;
    int PAWN_ADVANCE_A = 0;
    int PAWN_ADVANCE_B = 0;
    int PASSED_PAWN_MULT = 0;
    int DOUBLED_PAWN_PENALTY = 0;
    int ISOLATED_PAWN_PENALTY = 0;
    int BACKWARD_PAWN_PENALTY = 0;
    int WEAK_SQUARE_PENALTY = 0;
    int PASSED_PAWN_ENEMY_KING_DIST = 0;
    int KNIGHT_SQ_MULT = 0;
    int KNIGHT_OUTPOST_MULT = 0;
    int BISHOP_MOBILITY = 0;
    int BISHOP_PAIR = 0;
    int ROOK_ATTACK_KING_FILE = 0;
    int ROOK_ATTACK_KING_ADJ_FILE = 0;
    int ROOK_ATTACK_KING_ADJ_FILE_ABGH = 0;
    int ROOK_7TH_RANK = 0;
    int ROOK_CONNECTED = 0;
    int ROOK_MOBILITY = 0;
    int ROOK_BEHIND_PASSED_PAWN = 0;
    int ROOK_OPEN_FILE = 0;
    int ROOK_SEMI_OPEN_FILE = 0;
    int ROOK_ATCK_WEAK_PAWN_OPEN_COLUMN = 0;
    int ROOK_COLUMN_MULT = 0;
    int QUEEN_MOBILITY = 0;
    int KING_NO_FRIENDLY_PAWN = 0;
    int KING_NO_FRIENDLY_PAWN_ADJ = 0;
    int KING_FRIENDLY_PAWN_ADVANCED1 = 0;
    int KING_NO_ENEMY_PAWN = 0;
    int KING_NO_ENEMY_PAWN_ADJ = 0;
    int KING_PRESSURE_MULT = 0;

    bool operator==(const EvalParams&) const = default;

    /// Evolved reference weights: the average of ten run winners, rounded.
    static EvalParams reference() {
        EvalParams p;
        p.KNIGHT_VALUE = 521;
        p.BISHOP_VALUE = 572;
        p.ROOK_VALUE = 824;
        p.QUEEN_VALUE = 1710;
        p.PAWN_ADVANCE_A = 3;
        p.PAWN_ADVANCE_B = 6;
        p.PASSED_PAWN_MULT = 10;
        p.DOUBLED_PAWN_PENALTY = 14;
        p.ISOLATED_PAWN_PENALTY = 8;
        p.BACKWARD_PAWN_PENALTY = 3;
        p.WEAK_SQUARE_PENALTY = 5;
        p.PASSED_PAWN_ENEMY_KING_DIST = 7;
        p.KNIGHT_SQ_MULT = 6;
        p.KNIGHT_OUTPOST_MULT = 9;
        p.BISHOP_MOBILITY = 4;
        p.BISHOP_PAIR = 28;
        p.ROOK_ATTACK_KING_FILE = 51;
        p.ROOK_ATTACK_KING_ADJ_FILE = 8;
        p.ROOK_ATTACK_KING_ADJ_FILE_ABGH = 26;
        p.ROOK_7TH_RANK = 30;
        p.ROOK_CONNECTED = 6;
        p.ROOK_MOBILITY = 4;
        p.ROOK_BEHIND_PASSED_PAWN = 40;
        p.ROOK_OPEN_FILE = 27;
        p.ROOK_SEMI_OPEN_FILE = 11;
        p.ROOK_ATCK_WEAK_PAWN_OPEN_COLUMN = 15;
        p.ROOK_COLUMN_MULT = 6;
        p.QUEEN_MOBILITY = 2;
        p.KING_NO_FRIENDLY_PAWN = 35;
        p.KING_NO_FRIENDLY_PAWN_ADJ = 10;
        p.KING_FRIENDLY_PAWN_ADVANCED1 = 6;
        p.KING_NO_ENEMY_PAWN = 17;
        p.KING_NO_ENEMY_PAWN_ADJ = 9;
        p.KING_PRESSURE_MULT = 4;
        return p;
    }
};

struct EvalFieldDesc {
    const char* name;
    int EvalParams::* field;
    int bits;  // chromosome field width; 0 = not encoded (PAWN_VALUE)
};

/// Field registry in canonical order; the single source of truth for the text
/// format and the chromosome layout.
inline const std::array<EvalFieldDesc, 35>& eval_fields() {
    static const std::array<EvalFieldDesc, 35> fields = {{
        {"PAWN_VALUE", &EvalParams::PAWN_VALUE, 0},
        {"KNIGHT_VALUE", &EvalParams::KNIGHT_VALUE, 11},
        {"BISHOP_VALUE", &EvalParams::BISHOP_VALUE, 11},
        {"ROOK_VALUE", &EvalParams::ROOK_VALUE, 11},
        {"QUEEN_VALUE", &EvalParams::QUEEN_VALUE, 11},
        {"PAWN_ADVANCE_A", &EvalParams::PAWN_ADVANCE_A, 6},
        {"PAWN_ADVANCE_B", &EvalParams::PAWN_ADVANCE_B, 6},
        {"PASSED_PAWN_MULT", &EvalParams::PASSED_PAWN_MULT, 6},
        {"DOUBLED_PAWN_PENALTY", &EvalParams::DOUBLED_PAWN_PENALTY, 6},
        {"ISOLATED_PAWN_PENALTY", &EvalParams::ISOLATED_PAWN_PENALTY, 6},
        {"BACKWARD_PAWN_PENALTY", &EvalParams::BACKWARD_PAWN_PENALTY, 6},
        {"WEAK_SQUARE_PENALTY", &EvalParams::WEAK_SQUARE_PENALTY, 6},
        {"PASSED_PAWN_ENEMY_KING_DIST", &EvalParams::PASSED_PAWN_ENEMY_KING_DIST, 6},
        {"KNIGHT_SQ_MULT", &EvalParams::KNIGHT_SQ_MULT, 6},
        {"KNIGHT_OUTPOST_MULT", &EvalParams::KNIGHT_OUTPOST_MULT, 6},
        {"BISHOP_MOBILITY", &EvalParams::BISHOP_MOBILITY, 6},
        {"BISHOP_PAIR", &EvalParams::BISHOP_PAIR, 6},
        {"ROOK_ATTACK_KING_FILE", &EvalParams::ROOK_ATTACK_KING_FILE, 6},
        {"ROOK_ATTACK_KING_ADJ_FILE", &EvalParams::ROOK_ATTACK_KING_ADJ_FILE, 6},
        {"ROOK_ATTACK_KING_ADJ_FILE_ABGH", &EvalParams::ROOK_ATTACK_KING_ADJ_FILE_ABGH, 6},
        {"ROOK_7TH_RANK", &EvalParams::ROOK_7TH_RANK, 6},
        {"ROOK_CONNECTED", &EvalParams::ROOK_CONNECTED, 6},
        {"ROOK_MOBILITY", &EvalParams::ROOK_MOBILITY, 6},
        {"ROOK_BEHIND_PASSED_PAWN", &EvalParams::ROOK_BEHIND_PASSED_PAWN, 6},
        {"ROOK_OPEN_FILE", &EvalParams::ROOK_OPEN_FILE, 6},
        {"ROOK_SEMI_OPEN_FILE", &EvalParams::ROOK_SEMI_OPEN_FILE, 6},
        {"ROOK_ATCK_WEAK_PAWN_OPEN_COLUMN", &EvalParams::ROOK_ATCK_WEAK_PAWN_OPEN_COLUMN, 6},
        {"ROOK_COLUMN_MULT", &EvalParams::ROOK_COLUMN_MULT, 6},
        {"QUEEN_MOBILITY", &EvalParams::QUEEN_MOBILITY, 6},
        {"KING_NO_FRIENDLY_PAWN", &EvalParams::KING_NO_FRIENDLY_PAWN, 6},
        {"KING_NO_FRIENDLY_PAWN_ADJ", &EvalParams::KING_NO_FRIENDLY_PAWN_ADJ, 6},
        {"KING_FRIENDLY_PAWN_ADVANCED1", &EvalParams::KING_FRIENDLY_PAWN_ADVANCED1, 6},
        {"KING_NO_ENEMY_PAWN", &EvalParams::KING_NO_ENEMY_PAWN, 6},
        {"KING_NO_ENEMY_PAWN_ADJ", &EvalParams::KING_NO_ENEMY_PAWN_ADJ, 6},
        {"KING_PRESSURE_MULT", &EvalParams::KING_PRESSURE_MULT, 6},
    }};
    return fields;
}

/// Ordered `NAME value` lines; the save of any parameter set loads back exactly.
inline void save_eval_params(std::ostream& os, const EvalParams& p) {
    for (const auto& f : eval_fields()) os << f.name << ' ' << p.*(f.field) << '\n';
}

inline EvalParams load_eval_params(std::istream& in) {
    EvalParams p;
    bool seen[35] = {};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view t = text::trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto words = text::split_ws(t);
        if (words.size() != 2)
            throw ParseError("eval params line " + std::to_string(line_no) + ": expected NAME value");
        bool known = false;
        const auto& fields = eval_fields();
        for (size_t i = 0; i < fields.size(); ++i) {
            if (words[0] == fields[i].name) {
                p.*(fields[i].field) = text::parse_int<int>(words[1], fields[i].name);
                seen[i] = true;
                known = true;
                break;
            }
        }
        if (!known)
            throw ParseError("eval params line " + std::to_string(line_no) + ": unknown parameter '" +
                             std::string(words[0]) + "'");
    }
    const auto& fields = eval_fields();
    for (size_t i = 0; i < fields.size(); ++i)
        if (!seen[i]) throw ParseError(std::string("eval params: missing ") + fields[i].name);
    if (p.PAWN_VALUE != 100) throw ParseError("eval params: PAWN_VALUE is fixed at 100");
    for (const auto& f : fields)
        if (p.*(f.field) < 0) throw ParseError(std::string("eval params: negative ") + f.name);
    return p;
}

}  // namespace evochess
