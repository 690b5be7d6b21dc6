#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "evochess/core/fen.hpp"
#include "evochess/core/san.hpp"

namespace evochess {

/// One EPD test position: the position, the accepted best moves, and an id.
struct TestCase {
    Position position;
    std::vector<Move> best_moves;
    std::string id;
};

namespace detail {

/// Splits an EPD operation section on semicolons, respecting quoted strings.
inline std::vector<std::string> epd_operations(std::string_view ops) {
    std::vector<std::string> parts;
    std::string cur;
    bool quoted = false;
    for (char c : ops) {
        if (c == '"') quoted = !quoted;
        if (c == ';' && !quoted) {
            std::string t(text::trim(cur));
            if (!t.empty()) parts.push_back(t);
            cur.clear();
        } else {
            cur += c;
        }
    }
    std::string t(text::trim(cur));
    if (!t.empty()) parts.push_back(t);
    return parts;
}

}  // namespace detail

/// Parses a single EPD record. Requires the `bm` opcode; honors `id`.
inline TestCase parse_epd_line(std::string_view line) {
    // The first four fields are the FEN board/side/castling/ep fields.
    std::vector<std::string_view> fields = text::split_ws(line);
    if (fields.size() < 4) throw ParseError("EPD record needs 4 position fields");
    std::string fen;
    for (int i = 0; i < 4; ++i) {
        if (i) fen += ' ';
        fen += std::string(fields[i]);
    }
    fen += " 0 1";

    TestCase tc;
    tc.position = parse_fen(fen);

    size_t ops_begin = static_cast<size_t>(fields[3].data() + fields[3].size() - line.data());
    bool saw_bm = false;
    for (const std::string& op : detail::epd_operations(line.substr(ops_begin))) {
        std::vector<std::string_view> words = text::split_ws(op);
        if (words.empty()) continue;
        if (words[0] == "bm") {
            if (words.size() < 2) throw ParseError("bm opcode without a move");
            for (size_t i = 1; i < words.size(); ++i)
                tc.best_moves.push_back(san_to_move(tc.position, words[i]));
            saw_bm = true;
        } else if (words[0] == "id") {
            size_t q1 = op.find('"');
            size_t q2 = op.rfind('"');
            if (q1 != std::string::npos && q2 > q1)
                tc.id = op.substr(q1 + 1, q2 - q1 - 1);
            else if (words.size() > 1)
                tc.id = std::string(words[1]);
        }
        // Other opcodes (ce, pm, ...) are tolerated and ignored.
    }
    if (!saw_bm) throw ParseError("EPD record has no bm opcode");
    return tc;
}

/// Loads every record of an EPD file. Blank lines and '#' comments skipped.
inline std::vector<TestCase> parse_epd(std::istream& in) {
    std::vector<TestCase> cases;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view t = text::trim(line);
        if (t.empty() || t[0] == '#') continue;
        try {
            cases.push_back(parse_epd_line(t));
        } catch (const ParseError& e) {
            throw ParseError("EPD line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return cases;
}

inline std::vector<TestCase> load_epd_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open EPD file: " + path);
    return parse_epd(in);
}

/// Writes one test case as an EPD record.
inline void write_epd_line(std::ostream& os, const TestCase& tc) {
    std::string fen = to_fen(tc.position);
    // Drop the two clock fields.
    std::vector<std::string_view> fields = text::split_ws(fen);
    os << fields[0] << ' ' << fields[1] << ' ' << fields[2] << ' ' << fields[3];
    os << " bm";
    for (const Move& m : tc.best_moves) os << ' ' << move_to_san(tc.position, m);
    os << ';';
    if (!tc.id.empty()) os << " id \"" << tc.id << "\";";
    os << '\n';
}

}  // namespace evochess
