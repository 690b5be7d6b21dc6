#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "evochess/core/epd.hpp"
#include "evochess/core/pgn.hpp"
#include "evochess/util/rng.hpp"

using namespace evochess;

TEST_CASE("SAN writer produces standard notation") {
    Position p = Position::initial();
    CHECK(move_to_san(p, move_from_uci(p, "e2e4")) == "e4");
    CHECK(move_to_san(p, move_from_uci(p, "g1f3")) == "Nf3");

    Position caps = parse_fen("4k3/8/3p4/4p3/3P4/8/8/4K3 w - - 0 1");
    CHECK(move_to_san(caps, move_from_uci(caps, "d4e5")) == "dxe5");

    Position castle = parse_fen("4k3/8/8/8/8/8/8/R3K2R w KQ - 0 1");
    CHECK(move_to_san(castle, move_from_uci(castle, "e1g1")) == "O-O");
    CHECK(move_to_san(castle, move_from_uci(castle, "e1c1")) == "O-O-O");

    Position promo = parse_fen("3n1n2/4P3/8/8/8/8/8/k3K3 w - - 0 1");
    CHECK(move_to_san(promo, move_from_uci(promo, "e7f8q")) == "exf8=Q");
    CHECK(move_to_san(promo, move_from_uci(promo, "e7e8r")) == "e8=R");
    CHECK(move_to_san(promo, move_from_uci(promo, "e7d8n")) == "exd8=N");

    Position promo_check = parse_fen("7k/4P3/8/8/8/8/8/4K3 w - - 0 1");
    CHECK(move_to_san(promo_check, move_from_uci(promo_check, "e7e8q")) == "e8=Q+");

    Position mate = parse_fen("6k1/5ppp/8/8/8/8/8/R5K1 w - - 0 1");
    CHECK(move_to_san(mate, move_from_uci(mate, "a1a8")) == "Ra8#");

    Position ep = parse_fen("4k3/8/8/3pP3/8/8/8/4K3 w - d6 0 2");
    CHECK(move_to_san(ep, move_from_uci(ep, "e5d6")) == "exd6");
}

TEST_CASE("SAN disambiguation is minimal") {
    // Two knights reach d2 from different files: file letter suffices.
    Position p = parse_fen("4k3/8/8/8/8/5N2/8/1N2K3 w - - 0 1");
    CHECK(move_to_san(p, move_from_uci(p, "b1d2")) == "Nbd2");
    CHECK(move_to_san(p, move_from_uci(p, "f3d2")) == "Nfd2");
    // Two rooks on one file: rank is needed.
    Position q = parse_fen("4k3/8/8/8/R7/8/8/R3K3 w - - 0 1");
    CHECK(move_to_san(q, move_from_uci(q, "a1a2")) == "R1a2");
    CHECK(move_to_san(q, move_from_uci(q, "a4a2")) == "R4a2");
    // Three queens: one needs rank, one needs file, one needs both.
    Position r = parse_fen("2k5/8/8/8/Q2Q4/8/8/Q3K3 w - - 0 1");
    CHECK(move_to_san(r, move_from_uci(r, "a1d1")) == "Q1d1");
    CHECK(move_to_san(r, move_from_uci(r, "a4d1")) == "Qa4d1");
    CHECK(move_to_san(r, move_from_uci(r, "d4d1")) == "Qdd1");
    // No disambiguation when only one piece can reach the target.
    Position s = parse_fen("4k3/8/8/8/8/5N2/8/1N2K3 w - - 0 1");
    CHECK(move_to_san(s, move_from_uci(s, "f3e5")) == "Ne5");
}

TEST_CASE("SAN reader accepts suffixes and rejects garbage") {
    Position p = Position::initial();
    CHECK(move_to_uci(san_to_move(p, "e4")) == "e2e4");
    CHECK(move_to_uci(san_to_move(p, "Nf3!?")) == "g1f3");
    CHECK(move_to_uci(san_to_move(p, "e4+")) == "e2e4");  // spurious check mark tolerated
    CHECK_THROWS_AS(san_to_move(p, "e5"), ParseError);    // not legal here
    CHECK_THROWS_AS(san_to_move(p, "Ke2"), ParseError);
    CHECK_THROWS_AS(san_to_move(p, "xyzzy"), ParseError);
    CHECK_THROWS_AS(san_to_move(p, ""), ParseError);

    Position amb = parse_fen("4k3/8/8/8/8/5N2/8/1N2K3 w - - 0 1");
    CHECK_THROWS_AS(san_to_move(amb, "Nd2"), ParseError);  // ambiguous
    CHECK(move_to_uci(san_to_move(amb, "Nbd2")) == "b1d2");

    Position castle = parse_fen("4k3/8/8/8/8/8/8/R3K2R w KQ - 0 1");
    CHECK(move_to_uci(san_to_move(castle, "O-O")) == "e1g1");
    CHECK(move_to_uci(san_to_move(castle, "0-0-0")) == "e1c1");

    Position ep = parse_fen("4k3/8/8/3pP3/8/8/8/4K3 w - d6 0 2");
    CHECK(move_to_uci(san_to_move(ep, "exd6 e.p.")) == "e5d6");
}

TEST_CASE("SAN round-trips along random playouts") {
    Rng rng(0xC0FFEEu);
    for (int playout = 0; playout < 20; ++playout) {
        Position p = Position::initial();
        for (int ply = 0; ply < 120; ++ply) {
            MoveList moves = legal_moves(p);
            if (moves.empty() || p.halfmove_clock() >= 100) break;
            for (const Move& m : moves) {
                std::string san = move_to_san(p, m);
                INFO("fen " << to_fen(p) << " san " << san);
                Move back = san_to_move(p, san);
                REQUIRE(move_to_uci(back) == move_to_uci(m));
            }
            p = p.apply(moves[rng.below(moves.size())]);
        }
    }
}

TEST_CASE("PGN parser reads tags comments variations and results") {
    const std::string pgn = R"([Event "Test Match"]
[Site "?"]
[Date "2024.01.01"]
[Round "1"]
[White "Alpha"]
[Black "Beta"]
[Result "1-0"]

1. e4 {king pawn} e5 2. Nf3 $1 Nc6 (2... d6 {Philidor} 3. d4) 3. Bb5 a6
4. Ba4 Nf6 5. O-O 1-0

[Event "Second"]
[Result "1/2-1/2"]

1. d4 d5 2. c4 {queen's gambit} dxc4 1/2-1/2
)";
    PgnReadResult r = parse_pgn(pgn);
    REQUIRE(r.games.size() == 2);
    CHECK(r.diagnostics.empty());
    CHECK(r.games[0].tags.at("White") == "Alpha");
    CHECK(r.games[0].result == GameResult::WhiteWin);
    REQUIRE(r.games[0].moves.size() == 9);
    CHECK(move_to_uci(r.games[0].moves.back()) == "e1g1");
    CHECK(r.games[1].result == GameResult::Draw);
    CHECK(r.games[1].moves.size() == 4);
}

TEST_CASE("PGN parser honors FEN setup tags") {
    const std::string pgn = R"([Event "?"]
[SetUp "1"]
[FEN "4k3/8/8/8/8/8/8/R3K2R w KQ - 0 1"]
[Result "*"]

1. O-O-O+ Kf8 *
)";
    PgnReadResult r = parse_pgn(pgn);
    REQUIRE(r.games.size() == 1);
    CHECK(r.games[0].moves.size() == 2);
    CHECK(move_to_uci(r.games[0].moves[0]) == "e1c1");
}

TEST_CASE("PGN parser skips a corrupt game but keeps the rest") {
    const std::string pgn = R"([Event "good"]
[Result "1-0"]

1. e4 e5 2. Qh5 Nc6 3. Bc4 Nf6 4. Qxf7# 1-0

[Event "bad"]
[Result "*"]

1. e4 e5 2. Ke3 *

[Event "also good"]
[Result "0-1"]

1. f3 e5 2. g4 Qh4# 0-1
)";
    PgnReadResult r = parse_pgn(pgn);
    REQUIRE(r.games.size() == 2);
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].find("skipped") != std::string::npos);
    CHECK(r.games[0].tags.at("Event") == "good");
    CHECK(r.games[1].tags.at("Event") == "also good");
    CHECK(is_checkmate(r.games[1].final_position()));
}

TEST_CASE("PGN writer output re-parses to the same game") {
    Game g;
    g.tags["Event"] = "Round Trip";
    g.tags["White"] = "engine-a";
    g.tags["Black"] = "engine-b";
    g.result = GameResult::BlackWin;
    Position p = Position::initial();
    for (const char* u : {"f2f3", "e7e5", "g2g4", "d8h4"}) {
        Move m = move_from_uci(p, u);
        g.moves.push_back(m);
        p = p.apply(m);
    }
    g.tags["Result"] = result_text(g.result);

    std::ostringstream os;
    write_pgn(os, g);
    PgnReadResult r = parse_pgn(os.str());
    REQUIRE(r.games.size() == 1);
    REQUIRE(r.games[0].moves.size() == 4);
    for (size_t i = 0; i < 4; ++i)
        CHECK(move_to_uci(r.games[0].moves[i]) == move_to_uci(g.moves[i]));
    CHECK(r.games[0].result == GameResult::BlackWin);
    CHECK(r.games[0].tags.at("Event") == "Round Trip");
}

TEST_CASE("PGN writer emits FEN tags for non-initial games") {
    Game g;
    g.initial = parse_fen("4k3/8/8/8/8/8/8/R3K2R w KQ - 0 1");
    Move m = move_from_uci(g.initial, "e1g1");
    g.moves.push_back(m);
    g.result = GameResult::Unknown;
    std::ostringstream os;
    write_pgn(os, g);
    CHECK(os.str().find("[FEN \"4k3/8/8/8/8/8/8/R3K2R w KQ - 0 1\"]") != std::string::npos);
    PgnReadResult r = parse_pgn(os.str());
    REQUIRE(r.games.size() == 1);
    CHECK(r.games[0].initial == g.initial);
}

TEST_CASE("EPD records parse with bm and id") {
    TestCase tc = parse_epd_line(
        R"(1k1r4/pp1b1R2/3q2pp/4p3/2B5/4Q3/PPP2B2/2K5 b - - bm Qd1+; id "BK.01";)");
    CHECK(tc.id == "BK.01");
    REQUIRE(tc.best_moves.size() == 1);
    CHECK(move_to_uci(tc.best_moves[0]) == "d6d1");

    TestCase two = parse_epd_line("4k3/8/8/8/8/8/8/R3K2R w KQ - bm O-O O-O-O; id \"both\";");
    CHECK(two.best_moves.size() == 2);

    CHECK_THROWS_AS(parse_epd_line("4k3/8/8/8/8/8/8/R3K2R w KQ - id \"nobm\";"), ParseError);
    CHECK_THROWS_AS(parse_epd_line("not a fen at all"), ParseError);
}

TEST_CASE("EPD files load and round-trip") {
    std::string text =
        "# tactical suite\n"
        "\n"
        "6k1/5ppp/8/8/8/8/8/R5K1 w - - bm Ra8+; id \"t1\";\n"
        "4k3/8/8/3pP3/8/8/8/4K3 w - d6 bm exd6; id \"t2\"; c0 \"comment op ignored\";\n";
    std::istringstream in(text);
    std::vector<TestCase> cases = parse_epd(in);
    REQUIRE(cases.size() == 2);
    CHECK(cases[0].id == "t1");
    CHECK(move_to_uci(cases[1].best_moves[0]) == "e5d6");

    std::ostringstream os;
    for (const TestCase& tc : cases) write_epd_line(os, tc);
    std::istringstream in2(os.str());
    std::vector<TestCase> again = parse_epd(in2);
    REQUIRE(again.size() == 2);
    CHECK(again[0].id == "t1");
    CHECK(again[1].position == cases[1].position);
    CHECK(move_to_uci(again[0].best_moves[0]) == "a1a8");

    std::istringstream bad("6k1/5ppp/8/8/8/8/8/R5K1 w - - bm Rb8; id \"illegal-bm\";\n");
    CHECK_THROWS_AS(parse_epd(bad), ParseError);
}
