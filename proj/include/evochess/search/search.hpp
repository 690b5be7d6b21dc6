#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "evochess/core/epd.hpp"
#include "evochess/core/movegen.hpp"
#include "evochess/core/position.hpp"
#include "evochess/eval/evaluate.hpp"
#include "evochess/search/params.hpp"

namespace evochess {

// Iterative-deepening alpha-beta search. Every selective mechanism --
// null-move pruning with adaptive reduction, futility pruning, multi-cut,
// and fractional-ply extensions -- is controlled by a SearchParams record,
// and with all of them at their "off" values the search is node-for-node
// identical to plain fail-soft alpha-beta with the same move ordering and
// quiescence. There is no transposition table: node counts are exact and
// bit-reproducible whenever the limits are expressed in nodes or depth.
//
// Move ordering (fixed, for determinism): the previous iteration's PV move
// first while still on that path, then captures by MVV-LVA (most valuable
// victim first, least valuable attacker breaking ties, generation order
// after that), then quiet moves in generation order.
//
// Extensions are applied when making a move -- check, one-reply (the moving
// side had exactly one legal move), recapture (capture on the square of the
// immediately preceding capture), passed-pawn (non-capture pawn move to the
// seventh relative rank) -- and accumulate in a fractional counter at four
// units per ply. The mate-threat extension deepens the current node when the
// null-move reply comes back as a mate against the side to move. All grants
// stop once the projected path length (ply plus remaining depth) reaches
// twice the iteration's root depth: without a budget a single check
// extension of four units lets perpetual-check lines keep full depth
// forever, and with no transposition table such subtrees blow up.

constexpr int MATE_SCORE = 1'000'000;
constexpr int SCORE_INF = MATE_SCORE + 1;
constexpr int MAX_SEARCH_PLY = 128;

/// True for scores that announce a forced mate for either side.
constexpr bool is_mate_score(int score) {
    return score >= MATE_SCORE - MAX_SEARCH_PLY || score <= -(MATE_SCORE - MAX_SEARCH_PLY);
}

struct SearchLimits {
    std::optional<std::uint64_t> max_nodes;
    std::optional<int> max_depth;
    std::optional<int> max_time_ms;
    const std::atomic<bool>* stop = nullptr;  ///< external stop signal, polled every node

    void validate() const {
        if (!max_nodes && !max_depth && !max_time_ms && stop == nullptr)
            throw std::invalid_argument("SearchLimits: at least one limit must be set");
        if (max_depth && *max_depth < 0)
            throw std::invalid_argument("SearchLimits: max_depth must be non-negative");
    }
};

struct SearchResult {
    Move best_move{};
    int score = 0;
    std::uint64_t nodes = 0;
    int depth_completed = 0;
    std::vector<Move> principal_variation;
};

namespace detail {

/// MVV-LVA piece weight for capture ordering.
inline int mvv_lva_weight(PieceKind k) {
    switch (k) {
        case PieceKind::Pawn: return 1;
        case PieceKind::Knight: return 2;
        case PieceKind::Bishop: return 3;
        case PieceKind::Rook: return 4;
        case PieceKind::Queen: return 5;
        case PieceKind::King: return 6;
        default: return 0;
    }
}

/// Ordering key: captures sort above quiets, bigger victims first, smaller
/// attackers first among equal victims. Quiet moves all share key 0, so a
/// stable sort keeps them in generation order.
inline int order_key(const Position& pos, const Move& m) {
    if (!m.is_capture()) return 0;
    int victim = m.is_en_passant() ? mvv_lva_weight(PieceKind::Pawn)
                                   : mvv_lva_weight(pos.piece_at(m.to).kind());
    int attacker = mvv_lva_weight(pos.piece_at(m.from).kind());
    return 64 + victim * 8 - attacker;
}

/// Hoists `first` (when present) to the front, then stable-sorts the rest by
/// descending order key.
inline void order_moves(const Position& pos, std::vector<Move>& moves, const Move* first) {
    auto begin = moves.begin();
    if (first != nullptr) {
        auto it = std::find(moves.begin(), moves.end(), *first);
        if (it != moves.end()) {
            std::rotate(moves.begin(), it, it + 1);
            ++begin;
        }
    }
    std::stable_sort(begin, moves.end(), [&pos](const Move& a, const Move& b) {
        return order_key(pos, a) > order_key(pos, b);
    });
}

}  // namespace detail

class Searcher {
  public:
    Searcher(const EvalParams& eval, const SearchParams& params) : eval_(eval), sp_(params) {}

    /// Runs iterative deepening from depth 1 under `limits`. `on_iteration`
    /// (optional) is called after every fully completed iteration with the
    /// running result; returning true ends the search early. The returned
    /// best move is that of the deepest fully completed iteration.
    SearchResult run(const Position& root, const SearchLimits& limits,
                     const std::function<bool(const SearchResult&)>& on_iteration = {}) {
        limits.validate();
        std::vector<Move> root_moves = legal_moves(root);
        if (root_moves.empty()) throw std::invalid_argument("search: position has no legal moves");

        nodes_ = 0;
        stopped_ = false;
        max_nodes_ = limits.max_nodes.value_or(std::numeric_limits<std::uint64_t>::max());
        external_stop_ = limits.stop;
        has_deadline_ = limits.max_time_ms.has_value();
        if (has_deadline_)
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(*limits.max_time_ms);
        int max_depth = std::min(limits.max_depth.value_or(MAX_SEARCH_PLY - 1), MAX_SEARCH_PLY - 1);

        SearchResult result;
        detail::order_moves(root, root_moves, nullptr);
        result.best_move = root_moves.front();
        result.principal_variation = {root_moves.front()};
        prev_pv_.clear();

        for (int depth = 1; depth <= max_depth; ++depth) {
            root_depth_ = depth;
            root_best_set_ = false;
            std::vector<Move> pv;
            int score = negamax(root, depth, 0, -SCORE_INF, SCORE_INF, 0, true, true,
                                NO_SQUARE, pv);
            if (stopped_) {
                // An aborted iteration is discarded; its partial root best is
                // used only when no iteration ever completed.
                if (result.depth_completed == 0 && root_best_set_) {
                    result.best_move = root_best_;
                    result.principal_variation = {root_best_};
                }
                break;
            }
            result.best_move = pv.front();
            result.score = score;
            result.depth_completed = depth;
            result.principal_variation = pv;
            result.nodes = nodes_;
            prev_pv_ = pv;
            if (on_iteration && on_iteration(result)) break;
        }
        result.nodes = nodes_;
        return result;
    }

    std::uint64_t nodes() const { return nodes_; }

  private:
    void note_node() {
        ++nodes_;
        if (nodes_ > max_nodes_) {
            stopped_ = true;
            return;
        }
        if (external_stop_ != nullptr && external_stop_->load(std::memory_order_relaxed)) {
            stopped_ = true;
            return;
        }
        if (has_deadline_ && (nodes_ & 1023) == 0 &&
            std::chrono::steady_clock::now() >= deadline_)
            stopped_ = true;
    }

    int dispatch(const Position& pos, int depth, int frac, int alpha, int beta, int ply,
                 bool is_pv, bool follow, Square prev_capture, std::vector<Move>& pv_out) {
        if (depth <= 0) {
            pv_out.clear();
            return qsearch(pos, alpha, beta, ply);
        }
        return negamax(pos, depth, frac, alpha, beta, ply, is_pv, follow, prev_capture, pv_out);
    }

    int negamax(const Position& pos, int depth, int frac, int alpha, int beta, int ply,
                bool is_pv, bool follow, Square prev_capture, std::vector<Move>& pv_out) {
        note_node();
        if (stopped_) return 0;
        pv_out.clear();
        if (ply >= MAX_SEARCH_PLY) return evaluate(pos, eval_);

        std::vector<Move> moves = legal_moves(pos);
        if (moves.empty()) return pos.in_check() ? -(MATE_SCORE - ply) : 0;

        const bool in_check = pos.in_check();
        int cached_eval = 0;
        bool have_eval = false;
        auto static_eval = [&] {
            if (!have_eval) {
                cached_eval = evaluate(pos, eval_);
                have_eval = true;
            }
            return cached_eval;
        };

        // Null-move pruning; a mate-against reply triggers the mate-threat
        // extension on this node instead of a cutoff.
        if (sp_.null_move_use == 1 && ply > 0 && !in_check &&
            depth >= sp_.null_move_reduction && static_eval() >= beta) {
            int reduction = (sp_.null_move_adaptivity_use == 1 &&
                             depth > sp_.null_move_adaptivity_depth)
                                ? sp_.null_move_reduction
                                : std::max(1, sp_.null_move_reduction - 1);
            std::vector<Move> ignore;
            int null_score = -dispatch(pos.apply_null(), depth - 1 - reduction, frac, -beta,
                                       -beta + 1, ply + 1, false, false, NO_SQUARE, ignore);
            if (stopped_) return 0;
            if (null_score >= beta) return beta;
            if (null_score <= -(MATE_SCORE - MAX_SEARCH_PLY) && ply + depth < 2 * root_depth_) {
                int units = frac + sp_.mate_threat_ext;
                depth += units / 4;
                frac = units % 4;
            }
        }

        const Move* pv_hint = nullptr;
        if (follow && ply < static_cast<int>(prev_pv_.size())) pv_hint = &prev_pv_[ply];
        detail::order_moves(pos, moves, pv_hint);

        // Multi-cut: before the full search of a non-PV node, reduced-depth
        // null-window probes of the first moves; enough fail-highs prune.
        if (sp_.multi_cut_use == 1 && !is_pv && !in_check && depth >= sp_.multi_cut_depth) {
            int cuts = 0;
            if (cuts >= sp_.multi_cut_cut_num) return beta;
            std::size_t probes = std::min(moves.size(),
                                          static_cast<std::size_t>(sp_.multi_cut_move_num));
            for (std::size_t i = 0; i < probes; ++i) {
                const Move& m = moves[i];
                std::vector<Move> ignore;
                int score = -dispatch(pos.apply(m), depth - 1 - sp_.multi_cut_reduction, frac,
                                      -beta, -beta + 1, ply + 1, false, false,
                                      m.is_capture() ? static_cast<Square>(m.to) : NO_SQUARE,
                                      ignore);
                if (stopped_) return 0;
                if (score >= beta && ++cuts >= sp_.multi_cut_cut_num) return beta;
            }
        }

        const bool only_move = moves.size() == 1;
        const bool may_extend = ply + depth < 2 * root_depth_;  // extension budget
        const bool futility_node = ply > 0 && !in_check && depth >= 1 && depth <= 3 &&
                                   depth <= sp_.futility_depth;
        int best = -SCORE_INF;
        int searched = 0;
        std::vector<Move> child_pv;
        for (const Move& m : moves) {
            const bool capture = m.is_capture();
            Position child = pos.apply(m);
            const bool gives_check = child.in_check();

            if (futility_node && !capture && !m.is_promotion() && !gives_check) {
                int threshold = depth == 1   ? sp_.futility_threshold_d1
                                : depth == 2 ? sp_.futility_threshold_d2
                                             : sp_.futility_threshold_d3;
                if (static_eval() + threshold <= alpha) continue;
            }

            int units = 0;
            if (may_extend) {
                if (gives_check) units += sp_.check_ext;
                if (only_move) units += sp_.one_reply_ext;
                if (capture && static_cast<Square>(m.to) == prev_capture)
                    units += sp_.recapture_ext;
                if (!capture && pos.piece_at(m.from).kind() == PieceKind::Pawn &&
                    relative_rank(pos.side_to_move(), m.to) == 6)
                    units += sp_.passed_pawn_ext;
            }
            const int total = frac + units;

            int score = -dispatch(child, depth - 1 + total / 4, total % 4, -beta, -alpha,
                                  ply + 1, is_pv && searched == 0,
                                  follow && pv_hint != nullptr && m == *pv_hint,
                                  capture ? static_cast<Square>(m.to) : NO_SQUARE, child_pv);
            if (stopped_) return 0;
            ++searched;
            if (score > best) {
                best = score;
                if (score > alpha) {
                    alpha = score;
                    pv_out.clear();
                    pv_out.push_back(m);
                    pv_out.insert(pv_out.end(), child_pv.begin(), child_pv.end());
                    if (ply == 0) {
                        root_best_ = m;
                        root_best_set_ = true;
                    }
                }
                if (score >= beta) return best;
            }
        }
        if (searched == 0) return alpha;  // every move futility-pruned
        return best;
    }

    int qsearch(const Position& pos, int alpha, int beta, int ply) {
        note_node();
        if (stopped_) return 0;
        int best = evaluate(pos, eval_);  // stand pat
        if (ply >= MAX_SEARCH_PLY || best >= beta) return best;
        if (best > alpha) alpha = best;

        std::vector<Move> moves = legal_moves(pos);
        std::erase_if(moves, [](const Move& m) { return !m.is_capture() && !m.is_promotion(); });
        detail::order_moves(pos, moves, nullptr);
        for (const Move& m : moves) {
            int score = -qsearch(pos.apply(m), -beta, -alpha, ply + 1);
            if (stopped_) return 0;
            if (score > best) {
                best = score;
                if (score > alpha) alpha = score;
                if (score >= beta) return best;
            }
        }
        return best;
    }

    EvalParams eval_;
    SearchParams sp_;
    std::uint64_t nodes_ = 0;
    std::uint64_t max_nodes_ = 0;
    bool stopped_ = false;
    const std::atomic<bool>* external_stop_ = nullptr;
    bool has_deadline_ = false;
    std::chrono::steady_clock::time_point deadline_{};
    std::vector<Move> prev_pv_;
    int root_depth_ = 1;
    Move root_best_{};
    bool root_best_set_ = false;
};

inline SearchResult search(const Position& pos, const EvalParams& eval,
                           const SearchParams& params, const SearchLimits& limits) {
    return Searcher(eval, params).run(pos, limits);
}

/// Runs iterative deepening on the test case's position until a completed
/// iteration's best move is one of the case's best moves, returning the
/// cumulative node count at that point; if `node_cap` nodes are spent first,
/// returns exactly `node_cap`.
inline std::uint64_t search_nodes_to_solution(const TestCase& tc, const EvalParams& eval,
                                              const SearchParams& params,
                                              std::uint64_t node_cap) {
    if (node_cap == 0)
        throw std::invalid_argument("search_nodes_to_solution: node_cap must be positive");
    SearchLimits limits;
    limits.max_nodes = node_cap;
    limits.max_depth = MAX_SEARCH_PLY - 1;
    std::uint64_t solved_at = 0;
    bool solved = false;
    Searcher searcher(eval, params);
    searcher.run(tc.position, limits, [&](const SearchResult& r) {
        for (const Move& bm : tc.best_moves) {
            if (r.best_move == bm) {
                solved = true;
                solved_at = r.nodes;
                return true;
            }
        }
        return false;
    });
    return solved ? solved_at : node_cap;
}

}  // namespace evochess
