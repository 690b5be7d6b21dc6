#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "evochess/core/fen.hpp"
#include "evochess/evolve/phases.hpp"
#include "evochess/evolve/training.hpp"
#include "evochess/util/rng.hpp"

using namespace evochess;

namespace {

Position fen(const std::string& s) { return parse_fen(s); }

/// A deterministic pseudo-game: random legal moves with an assigned result.
Game playout(int plies, std::uint64_t seed, GameResult result) {
    Rng rng(seed);
    Game g;
    g.result = result;
    Position pos = Position::initial();
    for (int p = 0; p < plies; ++p) {
        std::vector<Move> legal = legal_moves(pos);
        if (legal.empty()) break;
        Move m = legal[rng.below(legal.size())];
        g.moves.push_back(m);
        pos = pos.apply(m);
    }
    return g;
}

std::vector<Game> playout_corpus(int games, int plies, std::uint64_t seed) {
    std::vector<Game> corpus;
    for (int i = 0; i < games; ++i)
        corpus.push_back(playout(plies, seed + static_cast<std::uint64_t>(i),
                                 i % 2 ? GameResult::WhiteWin : GameResult::BlackWin));
    return corpus;
}

/// Distinct two-ply opening lines, enough for a small round-robin.
OpeningBook synthetic_book(std::size_t n) {
    OpeningBook book;
    Position initial = Position::initial();
    std::vector<Move> firsts = legal_moves(initial);
    for (std::size_t i = 0; book.size() < n; ++i) {
        Move first = firsts[i % firsts.size()];
        std::vector<Move> replies = legal_moves(initial.apply(first));
        book.lines.push_back({first, replies[(i / firsts.size()) % replies.size()]});
    }
    return book;
}

GameControl depth_control(int d) {
    GameControl c;
    c.depth_per_move = d;
    return c;
}

GAConfig small_config(int pop, int gens, std::uint64_t seed) {
    GAConfig cfg;
    cfg.population_size = pop;
    cfg.generations = gens;
    cfg.crossover_rate = 0.75;
    cfg.mutation_rate = 0.02;
    cfg.elitism_count = 1;
    cfg.selection = SelectionKind::Proportional;
    cfg.random_seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("training candidates keep winner-to-move plies away from both ends", "[evolve]") {
    // 30 plies, White wins: even plies from 12 with at least 10 left.
    Game g = playout(30, 7, GameResult::WhiteWin);
    CHECK(detail::training_candidates(g) == std::vector<std::size_t>{12, 14, 16, 18, 20});
    g.result = GameResult::BlackWin;
    CHECK(detail::training_candidates(g) == std::vector<std::size_t>{13, 15, 17, 19});
    g.result = GameResult::Draw;
    CHECK(detail::training_candidates(g).empty());

    // The shortest usable game has exactly one candidate; one ply less has none.
    Game short_win = playout(22, 9, GameResult::WhiteWin);
    CHECK(detail::training_candidates(short_win) == std::vector<std::size_t>{12});
    Game too_short = playout(21, 9, GameResult::WhiteWin);
    CHECK(detail::training_candidates(too_short).empty());
}

TEST_CASE("training sets sample real winner moves one game apiece", "[evolve]") {
    std::vector<Game> corpus = playout_corpus(10, 40, 100);
    corpus.push_back(playout(18, 999, GameResult::WhiteWin));  // too short to use
    Game drawn = playout(40, 998, GameResult::Draw);
    corpus.push_back(drawn);  // drawn games contribute nothing

    Rng rng(42);
    TrainingSet ts = build_training_set(corpus, 10, rng, "seeded playouts");
    REQUIRE(ts.size() == 10);
    CHECK(ts.provenance.find("seeded playouts") == 0);
    CHECK(ts.provenance.find("winner to move") != std::string::npos);

    for (const TrainingPair& pair : ts.pairs) {
        // Every sampled pair must be a position some usable game actually
        // reached at ply >= 12 with >= 10 plies left, and the stored move the
        // one its winner played there.
        bool found = false;
        for (const Game& g : corpus) {
            if (g.result == GameResult::Draw || g.moves.size() < 22) continue;
            Color winner =
                g.result == GameResult::WhiteWin ? Color::White : Color::Black;
            Position pos = Position::initial();
            for (std::size_t p = 0; p < g.moves.size(); ++p) {
                if (p >= 12 && g.moves.size() - p >= 10 &&
                    pos.side_to_move() == winner && to_fen(pos) == to_fen(pair.position) &&
                    g.moves[p] == pair.move)
                    found = true;
                pos = pos.apply(g.moves[p]);
            }
        }
        CHECK(found);
        // Winner to move, comfortably out of the opening.
        CHECK(pair.position.fullmove_number() >= 7);
    }

    // Same seed, same sample.
    Rng rng2(42);
    TrainingSet ts2 = build_training_set(corpus, 10, rng2, "seeded playouts");
    REQUIRE(ts2.size() == ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        CHECK(to_fen(ts2.pairs[i].position) == to_fen(ts.pairs[i].position));
        CHECK(ts2.pairs[i].move == ts.pairs[i].move);
    }

    // Eleven distinct usable games do not exist in this corpus.
    Rng rng3(1);
    CHECK_THROWS_AS(build_training_set(corpus, 11, rng3), std::invalid_argument);
}

TEST_CASE("the one-ply choice maximizes the evaluation after its own move", "[evolve]") {
    // A queen is hanging; any sane weight set takes it.
    CHECK(move_to_uci(one_ply_choice(fen("k7/8/8/3q4/4P3/8/8/K7 w - - 0 1"),
                                     EvalParams::reference())) == "e4d5");
    CHECK(move_to_uci(one_ply_choice(fen("k7/8/4p3/3Q4/8/8/8/K7 b - - 0 1"),
                                     EvalParams::reference())) == "e6d5");

    // All-zero weights score every move identically, so the tie breaks to
    // the first move in generation order.
    EvalParams zero{};
    Position pos = fen("k7/8/8/3q4/4P3/8/8/K7 w - - 0 1");
    CHECK(one_ply_choice(pos, zero) == legal_moves(pos).front());
}

TEST_CASE("move match fitness squares the hit count", "[evolve]") {
    TrainingSet ts;
    Position p1 = fen("k7/8/8/3q4/4P3/8/8/K7 w - - 0 1");
    ts.pairs.push_back({p1, move_from_uci(p1, "e4d5")});  // hit
    Position p2 = fen("k7/8/4p3/3Q4/8/8/8/K7 b - - 0 1");
    ts.pairs.push_back({p2, move_from_uci(p2, "e6d5")});  // hit
    Position p3 = fen("k7/8/8/3q4/4P3/8/8/K7 w - - 0 2");
    ts.pairs.push_back({p3, move_from_uci(p3, "a1b1")});  // never the choice

    CHECK(move_match_count(EvalParams::reference(), ts) == 2);
    CHECK(move_match_count(EvalParams::reference(), ts, 2) == 2);
    CHECK(move_match_fitness(EvalParams::reference(), ts) == Catch::Approx(4.0));
    CHECK(move_match_fitness(encode_eval(EvalParams::reference()), ts) == Catch::Approx(4.0));
}

TEST_CASE("holdout scoring insists on disjoint position sets", "[evolve]") {
    TrainingSet train;
    Position p1 = fen("k7/8/8/3q4/4P3/8/8/K7 w - - 0 1");
    train.pairs.push_back({p1, move_from_uci(p1, "e4d5")});

    TrainingSet holdout;
    Position p2 = fen("k7/8/8/8/3q4/4P3/8/K7 w - - 0 1");
    holdout.pairs.push_back({p2, move_from_uci(p2, "e3d4")});

    CHECK(holdout_match_rate(EvalParams::reference(), holdout, train) == Catch::Approx(1.0));

    CHECK_THROWS_AS(holdout_match_rate(EvalParams::reference(), train, train),
                    std::invalid_argument);
    TrainingSet empty;
    CHECK_THROWS_AS(holdout_match_rate(EvalParams::reference(), empty, train),
                    std::invalid_argument);
}

TEST_CASE("evaluation evolution reports every generation and never backslides",
          "[evolve]") {
    std::vector<Game> corpus = playout_corpus(12, 40, 100);
    Rng trng(5);
    TrainingSet ts = build_training_set(corpus, 12, trng, "seeded playouts");

    GAConfig cfg = small_config(8, 4, 11);
    int calls = 0;
    Rng rng(cfg.random_seed);
    EvalPhaseResult res = run_eval_evolution(
        ts, cfg, rng, 1, [&](int gen, const std::vector<EvalOrganism>& pop) {
            CHECK(gen == calls);
            CHECK(pop.size() == 8);
            ++calls;
        });
    CHECK(calls == 5);
    REQUIRE(res.report.best_fitness.size() == 5);
    REQUIRE(res.report.mean_fitness.size() == 5);
    CHECK(res.report.wall_seconds >= 0.0);
    for (std::size_t g = 1; g < res.report.best_fitness.size(); ++g) {
        // Elitism makes the best-fitness series non-decreasing.
        CHECK(res.report.best_fitness[g] >= res.report.best_fitness[g - 1]);
        CHECK(res.report.mean_fitness[g] <= res.report.best_fitness[g]);
    }
    CHECK(res.best.fitness == res.report.best_fitness.back());

    // Same seed, same run, bit for bit.
    Rng rng2(cfg.random_seed);
    EvalPhaseResult res2 = run_eval_evolution(ts, cfg, rng2);
    CHECK(res2.best.fitness == res.best.fitness);
    CHECK(chromosome_to_hex(res2.best.chromosome) == chromosome_to_hex(res.best.chromosome));
    CHECK(res2.report.best_fitness == res.report.best_fitness);

    TrainingSet empty;
    Rng rng3(1);
    CHECK_THROWS_AS(run_eval_evolution(empty, cfg, rng3), std::invalid_argument);
}

TEST_CASE("round-robin points hand out exactly one point per game", "[evolve]") {
    Rng orng(3);
    std::vector<EvalOrganism> pop;
    for (int i = 0; i < 4; ++i)
        pop.push_back(make_organism<EvalParams>(random_chromosome(GenomeKind::Evaluation, orng)));

    // C(4,2) pairs x 2 games = 12 games, one book line each.
    OpeningBook book = synthetic_book(12);
    std::vector<double> points = round_robin_points(pop, depth_control(1), book, 2);
    REQUIRE(points.size() == 4);
    double sum = 0.0;
    for (double p : points) sum += p;
    CHECK(sum == Catch::Approx(12.0));

    CHECK(round_robin_points(pop, depth_control(1), book, 2, 2) == points);

    CHECK_THROWS_AS(round_robin_points(pop, depth_control(1), book, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(round_robin_points(pop, depth_control(1), synthetic_book(11), 2),
                    std::out_of_range);
    std::vector<EvalOrganism> lone(pop.begin(), pop.begin() + 1);
    CHECK_THROWS_AS(round_robin_points(lone, depth_control(1), book, 2),
                    std::invalid_argument);
}

TEST_CASE("coevolution re-scores each generation and keeps the incumbent", "[evolve]") {
    Rng orng(3);
    std::vector<EvalOrganism> seeds;
    for (int i = 0; i < 4; ++i)
        seeds.push_back(make_organism<EvalParams>(random_chromosome(GenomeKind::Evaluation, orng)));

    GAConfig cfg = small_config(4, 2, 17);
    OpeningBook book = synthetic_book(12);

    std::vector<std::string> best_hex;
    std::vector<std::vector<std::string>> pop_hex;
    Rng rng(cfg.random_seed);
    EvalPhaseResult res = run_coevolution(
        seeds, cfg, depth_control(1), book, rng, 2, 1,
        [&](int, const std::vector<EvalOrganism>& pop) {
            std::vector<std::string> hexes;
            std::size_t best = 0;
            for (std::size_t i = 0; i < pop.size(); ++i) {
                hexes.push_back(chromosome_to_hex(pop[i].chromosome));
                if (pop[i].fitness > pop[best].fitness) best = i;
            }
            best_hex.push_back(hexes[best]);
            pop_hex.push_back(std::move(hexes));
        });

    // 12 games per generation, one point each, split over 4 organisms.
    REQUIRE(res.report.mean_fitness.size() == 3);
    for (double mean : res.report.mean_fitness) CHECK(mean == Catch::Approx(3.0));

    // Elitism carries each generation's winner into the next, unchanged.
    REQUIRE(pop_hex.size() == 3);
    for (std::size_t g = 0; g + 1 < pop_hex.size(); ++g) {
        bool present = false;
        for (const std::string& hex : pop_hex[g + 1]) present = present || hex == best_hex[g];
        CHECK(present);
    }

    std::vector<EvalOrganism> three(seeds.begin(), seeds.begin() + 3);
    Rng rng2(1);
    CHECK_THROWS_AS(run_coevolution(three, cfg, depth_control(1), book, rng2, 2),
                    std::invalid_argument);
}

TEST_CASE("node count totals charge unsolved positions the full cap", "[evolve]") {
    EvalParams reference_weights = EvalParams::reference();
    SearchParams plain = SearchParams::all_off();

    // A target move from a foreign position can never be returned here, so
    // each of these positions burns its whole budget.
    Position other = fen("k7/8/8/3q4/4P3/8/8/K7 w - - 0 1");
    Move foreign = move_from_uci(other, "e4d5");
    std::vector<TestCase> unsolvable = {
        TestCase{fen("6k1/5ppp/8/8/8/8/8/R6K w - - 0 1"), {foreign}, "u1"},
        TestCase{fen("8/8/8/8/2k5/8/8/KQ6 w - - 0 1"), {foreign}, "u2"},
    };
    const std::uint64_t cap = 2000;
    CHECK(node_count_total(plain, reference_weights, unsolvable, cap) == 2 * cap);
    CHECK(node_count_fitness(plain, reference_weights, unsolvable, cap) == Catch::Approx(0.0));

    // A solvable position adds strictly less than the cap, additively.
    Position mate = fen("7k/8/8/5K2/8/8/8/5R2 w - - 0 1");
    std::vector<TestCase> solvable = {
        TestCase{mate, {move_from_uci(mate, "f5g6")}, "s1"}};
    std::uint64_t alone = node_count_total(plain, reference_weights, solvable, 30000);
    CHECK(alone > 0);
    CHECK(alone < 30000);
    std::vector<TestCase> mixed = unsolvable;
    mixed.push_back(solvable[0]);
    CHECK(node_count_total(plain, reference_weights, mixed, 30000) ==
          2 * 30000 + alone);
    CHECK(node_count_total(plain, reference_weights, mixed, 30000, 2) ==
          node_count_total(plain, reference_weights, mixed, 30000));

    CHECK_THROWS_AS(node_count_total(plain, reference_weights, {}, cap), std::invalid_argument);
}

TEST_CASE("search evolution starts from the plain baseline and only improves",
          "[evolve]") {
    EvalParams reference_weights = EvalParams::reference();
    std::vector<TestCase> suite;
    for (const char* f : {"7k/8/8/5K2/8/8/8/5R2 w - - 0 1", "6k1/5ppp/8/8/8/8/8/R6K w - - 0 1",
                          "k7/8/8/3q4/8/8/8/K2R4 w - - 0 1", "8/8/8/8/2k5/8/8/KQ6 w - - 0 1"}) {
        // Target: whatever plain alpha-beta prefers at depth 4, so every
        // organism chases a fixed, solvable goal.
        Position pos = fen(f);
        SearchLimits limits;
        limits.max_depth = 4;
        SearchResult r = search(pos, reference_weights, SearchParams::all_off(), limits);
        suite.push_back(TestCase{pos, {r.best_move}, f});
    }

    const std::uint64_t cap = 3000;
    std::uint64_t baseline = node_count_total(SearchParams::all_off(), reference_weights, suite, cap);

    GAConfig cfg = small_config(6, 3, 23);
    std::string first_hex;
    Rng rng(cfg.random_seed);
    SearchPhaseResult res = run_search_evolution(
        suite, reference_weights, cfg, cap, rng, 1, [&](int gen, const std::vector<SearchOrganism>& pop) {
            if (gen == 0) first_hex = chromosome_to_hex(pop.front().chromosome);
        });

    // Slot 0 of the initial population is the all-features-off organism.
    CHECK(first_hex == chromosome_to_hex(encode_search(SearchParams::all_off())));

    CHECK(res.node_budget == cap * suite.size());
    CHECK(res.best_total_nodes ==
          res.node_budget - static_cast<std::uint64_t>(res.best.fitness));
    // Elitism from the seeded baseline: the winner never needs more nodes
    // than plain alpha-beta.
    CHECK(res.best_total_nodes <= baseline);
    for (std::size_t g = 1; g < res.report.best_fitness.size(); ++g)
        CHECK(res.report.best_fitness[g] >= res.report.best_fitness[g - 1]);

    Rng rng2(cfg.random_seed);
    SearchPhaseResult res2 = run_search_evolution(suite, reference_weights, cfg, cap, rng2);
    CHECK(chromosome_to_hex(res2.best.chromosome) == chromosome_to_hex(res.best.chromosome));
    CHECK(res2.best_total_nodes == res.best_total_nodes);

    Rng rng3(1);
    CHECK_THROWS_AS(run_search_evolution({}, reference_weights, cfg, cap, rng3), std::invalid_argument);
    CHECK_THROWS_AS(run_search_evolution(suite, reference_weights, cfg, 0, rng3), std::invalid_argument);
}
