#include <catch2/catch_amalgamated.hpp>

#include "evochess/core/fen.hpp"
#include "evochess/core/movegen.hpp"

using namespace evochess;

TEST_CASE("initial position basics") {
    Position p = Position::initial();
    CHECK(p.side_to_move() == Color::White);
    CHECK(p.castling_rights() == (CASTLE_WK | CASTLE_WQ | CASTLE_BK | CASTLE_BQ));
    CHECK(p.en_passant_target() == NO_SQUARE);
    CHECK(p.halfmove_clock() == 0);
    CHECK(p.fullmove_number() == 1);
    CHECK(p.piece_at(parse_square("e1")) == Piece(PieceKind::King, Color::White));
    CHECK(p.piece_at(parse_square("d8")) == Piece(PieceKind::Queen, Color::Black));
    CHECK(p.piece_at(parse_square("e4")).empty());
    CHECK(p.king_square(Color::White) == parse_square("e1"));
    CHECK(p.king_square(Color::Black) == parse_square("e8"));
    CHECK_FALSE(p.in_check());
}

TEST_CASE("FEN round trip on canonical strings") {
    const char* fens[] = {
        START_FEN,
        "r3k2r/p1ppqpb1/bn2pnp1/3PN3/1p2P3/2N2Q1p/PPPBBPPP/R3K2R w KQkq - 0 1",
        "8/2p5/3p4/KP5r/1R3p1k/8/4P1P1/8 w - - 0 1",
        "r3k2r/Pppp1ppp/1b3nbN/nP6/BBP1P3/q4N2/Pp1P2PP/R2Q1RK1 w kq - 0 1",
        "rnbq1k1r/pp1Pbppp/2p5/8/2B5/8/PPP1NnPP/RNBQK2R w KQ - 1 8",
        "r4rk1/1pp1qppp/p1np1n2/2b1p1B1/2B1P1b1/P1NP1N2/1PP1QPPP/R4RK1 w - - 0 10",
        "4k3/8/8/8/8/8/8/4K2R w K - 0 1",
        "8/8/8/8/8/8/8/k6K w - - 99 500",
    };
    for (const char* fen : fens) {
        INFO(fen);
        CHECK(to_fen(parse_fen(fen)) == fen);
    }
}

TEST_CASE("FEN parser normalizes ep and castling fields") {
    // ep square behind a freshly double-pushed pawn is kept.
    Position p = parse_fen("rnbqkbnr/pppppppp/8/8/4P3/8/PPPP1PPP/RNBQKBNR b KQkq e3 0 1");
    CHECK(p.en_passant_target() == parse_square("e3"));
    // ep square with no pawn behind it is dropped.
    Position q = parse_fen("rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR b KQkq e3 0 1");
    CHECK(q.en_passant_target() == NO_SQUARE);
    // ep square on a nonsense rank is dropped.
    Position s = parse_fen("rnbqkbnr/pppppppp/8/8/4P3/8/PPPP1PPP/RNBQKBNR b KQkq e4 0 1");
    CHECK(s.en_passant_target() == NO_SQUARE);
    // Castling rights without the matching rook/king are dropped.
    Position r = parse_fen("4k3/8/8/8/8/8/8/R3K3 w KQkq - 0 1");
    CHECK(r.castling_rights() == CASTLE_WQ);
}

TEST_CASE("FEN parser rejects malformed input") {
    const char* bad[] = {
        "",
        "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR",        // missing fields
        "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP w KQkq - 0 1",    // 7 ranks
        "rnbqkbnr/pppppppp/9/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1",
        "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR x KQkq - 0 1",
        "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - -1 1",
        "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 0",
        "k7/8/8/8/8/8/8/8 w - - 0 1",                          // white king missing
        "kK6/8/8/8/8/8/8/8 w K - 0 1 extra",                   // trailing junk
        "k6K/P7/8/8/8/8/8/8 w - - 0 1 P",                      // 7 fields
        "k6K/8/8/8/8/8/8/P7 w - - 0 1x",                       // bad clock
        "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNP w - - 0 1",  // pawn on rank 1
        "4k3/8/8/8/8/8/8/4K3 w - e9 0 1",
    };
    for (const char* fen : bad) {
        INFO(fen);
        CHECK_THROWS_AS(parse_fen(fen), ParseError);
    }
    // Side not to move in check is rejected; side to move in check is fine.
    CHECK_THROWS_AS(parse_fen("4k3/8/8/8/8/8/4R3/4K3 w - - 0 1"), ParseError);
    CHECK_THROWS_AS(parse_fen("4k3/4r3/8/8/8/8/8/4K3 b - - 0 1"), ParseError);
    CHECK_NOTHROW(parse_fen("4k3/8/8/8/8/8/4R3/4K3 b - - 0 1"));
    CHECK_NOTHROW(parse_fen("4k3/4r3/8/8/8/8/8/4K3 w - - 0 1"));
}

TEST_CASE("apply plays standard moves") {
    Position p = Position::initial();
    Position q = p.apply(move_from_uci(p, "e2e4"));
    CHECK(to_fen(q) == "rnbqkbnr/pppppppp/8/8/4P3/8/PPPP1PPP/RNBQKBNR b KQkq e3 0 1");
    q = q.apply(move_from_uci(q, "c7c5"));
    CHECK(to_fen(q) == "rnbqkbnr/pp1ppppp/8/2p5/4P3/8/PPPP1PPP/RNBQKBNR w KQkq c6 0 2");
    q = q.apply(move_from_uci(q, "g1f3"));
    CHECK(to_fen(q) == "rnbqkbnr/pp1ppppp/8/2p5/4P3/5N2/PPPP1PPP/RNBQKB1R b KQkq - 1 2");
}

TEST_CASE("apply handles special moves") {
    SECTION("en passant") {
        Position p = parse_fen("4k3/8/8/3pP3/8/8/8/4K3 w - d6 0 2");
        Move m = move_from_uci(p, "e5d6");
        CHECK((m.flags & Move::FlagEnPassant));
        Position q = p.apply(m);
        CHECK(to_fen(q) == "4k3/8/3P4/8/8/8/8/4K3 b - - 0 2");
    }
    SECTION("castling short") {
        Position p = parse_fen("4k3/8/8/8/8/8/8/4K2R w K - 0 1");
        Position q = p.apply(move_from_uci(p, "e1g1"));
        CHECK(to_fen(q) == "4k3/8/8/8/8/8/8/5RK1 b - - 1 1");
    }
    SECTION("castling long") {
        Position p = parse_fen("r3k3/8/8/8/8/8/8/4K3 b q - 0 1");
        Position q = p.apply(move_from_uci(p, "e8c8"));
        CHECK(to_fen(q) == "2kr4/8/8/8/8/8/8/4K3 w - - 1 2");
    }
    SECTION("promotion with capture") {
        Position p = parse_fen("rn2k3/1P6/8/8/8/8/8/4K3 w - - 0 1");
        Position q = p.apply(move_from_uci(p, "b7a8q"));
        CHECK(to_fen(q) == "Qn2k3/8/8/8/8/8/8/4K3 b - - 0 1");
    }
    SECTION("rook capture removes castling right") {
        Position p = parse_fen("r3k2r/8/8/8/8/8/6B1/R3K2R w KQkq - 0 1");
        Position q = p.apply(move_from_uci(p, "g2a8"));
        CHECK((q.castling_rights() & CASTLE_BQ) == 0);
        CHECK((q.castling_rights() & CASTLE_BK) != 0);
    }
}

TEST_CASE("apply rejects a move with no mover") {
    Position p = Position::initial();
    Move bogus;
    bogus.from = static_cast<std::uint8_t>(parse_square("e5"));
    bogus.to = static_cast<std::uint8_t>(parse_square("e6"));
    CHECK_THROWS_AS(p.apply(bogus), std::invalid_argument);
    CHECK_THROWS_AS(move_from_uci(p, "e2e5"), std::invalid_argument);
}

TEST_CASE("zobrist hash is incremental and transposition-stable") {
    // Hash recomputed from scratch must equal the incrementally maintained one.
    Position p = Position::initial();
    const char* line[] = {"e2e4", "e7e5", "g1f3", "b8c6", "f1b5", "g8f6", "e1g1"};
    for (const char* u : line) {
        p = p.apply(move_from_uci(p, u));
        CHECK(p.hash() == parse_fen(to_fen(p)).hash());
    }
    // Transpositions produce the same hash even when the raw ep square differs.
    Position a = Position::initial();
    for (const char* u : {"e2e4", "d7d6", "d2d4"}) a = a.apply(move_from_uci(a, u));
    Position b = Position::initial();
    for (const char* u : {"d2d4", "d7d6", "e2e4"}) b = b.apply(move_from_uci(b, u));
    CHECK(a.hash() == b.hash());
    // But a capturable ep square distinguishes positions.
    Position c = Position::initial();
    for (const char* u : {"e2e4", "g8f6", "e4e5", "d7d5"}) c = c.apply(move_from_uci(c, u));
    Position d = parse_fen("rnbqkb1r/ppp1pppp/5n2/3pP3/8/8/PPPP1PPP/RNBQKBNR w KQkq - 0 3");
    CHECK(c.hash() != d.hash());
}

TEST_CASE("square helpers") {
    CHECK(parse_square("a1") == 0);
    CHECK(parse_square("h8") == 63);
    CHECK(square_name(parse_square("c7")) == "c7");
    CHECK(mirror_vertical(parse_square("e2")) == parse_square("e7"));
    CHECK(relative_rank(Color::White, parse_square("e2")) == 1);
    CHECK(relative_rank(Color::Black, parse_square("e2")) == 6);
    CHECK_THROWS_AS(parse_square("i9"), ParseError);
}
