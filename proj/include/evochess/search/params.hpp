#pragma once

#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "evochess/util/text.hpp"

// The 18 selective-search parameters. All zeros disables every selective
// mechanism, leaving plain alpha-beta with quiescence.

namespace evochess {

struct SearchParams {
    int null_move_use = 0;             // 0-1
    int null_move_reduction = 0;       // 0-7
    int null_move_adaptivity_use = 0;  // 0-1
    int null_move_adaptivity_depth = 0;// 0-7
    int futility_depth = 0;            // 0-3
    int futility_threshold_d1 = 0;     // 0-1023 centipawns
    int futility_threshold_d2 = 0;     // 0-1023
    int futility_threshold_d3 = 0;     // 0-1023
    int multi_cut_use = 0;             // 0-1
    int multi_cut_reduction = 0;       // 0-7
    int multi_cut_depth = 0;           // 0-7
    int multi_cut_move_num = 0;        // 0-31
    int multi_cut_cut_num = 0;         // 0-7
    int check_ext = 0;                 // 0-4 fractional-ply units (4 = 1 ply)
    int one_reply_ext = 0;             // 0-4
    int recapture_ext = 0;             // 0-4
    int passed_pawn_ext = 0;           // 0-4
    int mate_threat_ext = 0;           // 0-4

    bool operator==(const SearchParams&) const = default;

    /// Plain alpha-beta: every selective mechanism disabled.
    static SearchParams all_off() { return SearchParams{}; }

    /// The evolved reference values shipped with the library.
    static SearchParams reference() {
        SearchParams p;
        p.null_move_use = 1;
        p.null_move_reduction = 4;
        p.null_move_adaptivity_use = 1;
        p.null_move_adaptivity_depth = 6;
        p.futility_depth = 3;
        p.futility_threshold_d1 = 112;
        p.futility_threshold_d2 = 227;
        p.futility_threshold_d3 = 506;
        p.multi_cut_use = 1;
        p.multi_cut_reduction = 4;
        p.multi_cut_depth = 6;
        p.multi_cut_move_num = 15;
        p.multi_cut_cut_num = 3;
        p.check_ext = 4;
        p.one_reply_ext = 4;
        p.recapture_ext = 2;
        p.passed_pawn_ext = 3;
        p.mate_threat_ext = 2;
        return p;
    }
};

struct SearchFieldDesc {
    const char* name;
    int SearchParams::* field;
    int bits;  // chromosome field width
    int max;   // inclusive upper bound of the declared range
};

/// The 18 fields in chromosome order with their bit widths (sum = 70) and
/// declared ranges. Extension fields occupy 3 bits but cap at 4 units.
inline const std::array<SearchFieldDesc, 18>& search_fields() {
    static const std::array<SearchFieldDesc, 18> fields = {{
        {"null_move_use", &SearchParams::null_move_use, 1, 1},
        {"null_move_reduction", &SearchParams::null_move_reduction, 3, 7},
        {"null_move_adaptivity_use", &SearchParams::null_move_adaptivity_use, 1, 1},
        {"null_move_adaptivity_depth", &SearchParams::null_move_adaptivity_depth, 3, 7},
        {"futility_depth", &SearchParams::futility_depth, 2, 3},
        {"futility_threshold_d1", &SearchParams::futility_threshold_d1, 10, 1023},
        {"futility_threshold_d2", &SearchParams::futility_threshold_d2, 10, 1023},
        {"futility_threshold_d3", &SearchParams::futility_threshold_d3, 10, 1023},
        {"multi_cut_use", &SearchParams::multi_cut_use, 1, 1},
        {"multi_cut_reduction", &SearchParams::multi_cut_reduction, 3, 7},
        {"multi_cut_depth", &SearchParams::multi_cut_depth, 3, 7},
        {"multi_cut_move_num", &SearchParams::multi_cut_move_num, 5, 31},
        {"multi_cut_cut_num", &SearchParams::multi_cut_cut_num, 3, 7},
        {"check_ext", &SearchParams::check_ext, 3, 4},
        {"one_reply_ext", &SearchParams::one_reply_ext, 3, 4},
        {"recapture_ext", &SearchParams::recapture_ext, 3, 4},
        {"passed_pawn_ext", &SearchParams::passed_pawn_ext, 3, 4},
        {"mate_threat_ext", &SearchParams::mate_threat_ext, 3, 4},
    }};
    return fields;
}

inline void save_search_params(std::ostream& os, const SearchParams& p) {
    for (const auto& f : search_fields()) os << f.name << ' ' << p.*(f.field) << '\n';
}

/// Reads `name value` lines (# comments and blank lines ignored). All 18
/// parameters must appear; values must lie in their declared ranges.
inline SearchParams load_search_params(std::istream& in) {
    SearchParams p;
    std::array<bool, 18> seen{};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = text::trim(line);
        if (sv.empty() || sv.front() == '#') continue;
        std::istringstream fields{std::string(sv)};
        std::string name;
        long long value = 0;
        if (!(fields >> name >> value))
            throw ParseError("search params line " + std::to_string(line_no) +
                             ": expected `name value`");
        bool known = false;
        for (size_t i = 0; i < search_fields().size(); ++i) {
            const auto& f = search_fields()[i];
            if (name != f.name) continue;
            if (value < 0 || value > f.max)
                throw ParseError("search params line " + std::to_string(line_no) + ": " + name +
                                 " out of range 0-" + std::to_string(f.max));
            p.*(f.field) = static_cast<int>(value);
            seen[i] = true;
            known = true;
            break;
        }
        if (!known)
            throw ParseError("search params line " + std::to_string(line_no) +
                             ": unknown parameter " + name);
    }
    for (size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw ParseError(std::string("search params: missing ") + search_fields()[i].name);
    return p;
}

}  // namespace evochess
