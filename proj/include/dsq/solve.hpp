#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <memory>

#include "dsq/hash.hpp"

namespace dsq {

struct SolveLimits {
    int ply_bound = 40;
    uint64_t node_budget = 0;  // 0 = unbounded
    bool use_tt = true;
    int tt_log2_entries = 21;
};

struct SolveResult {
    enum class Kind { Win, DrawBounded, Unknown } kind = Kind::DrawBounded;
    Color winner = Color::Red;  // meaningful for Win
    int plies = 0;              // minimal forced-win length, meaningful for Win
    std::vector<Move> pv;
    uint64_t nodes = 0;

    bool win_for(Color c) const { return kind == Kind::Win && winner == c; }
};

// Per-(color,animal) live piece counts, maintained incrementally so terminal
// overrides can test piece presence in O(1).
struct PieceCounts {
    int n[2][8] = {};
    int& at(Color c, Animal a) { return n[static_cast<int>(c)][rank_of(a) - 1]; }
    int at(Color c, Animal a) const { return n[static_cast<int>(c)][rank_of(a) - 1]; }
    int total(Color c) const {
        int s = 0;
        for (int i = 0; i < 8; ++i) s += n[static_cast<int>(c)][i];
        return s;
    }
};

// Verifier-facing extension point. The solver plays the plain rules game
// unless a terminal override or pass rights are installed. The override is
// consulted before native win detection and must be a pure function of the
// position; returning a color ends the game in that color's favor.
struct GameRules {
    std::function<std::optional<Color>(const Board&, const PieceCounts&)> terminal_override;
    bool red_pass = false;
    bool black_pass = false;
    // Secondary deterministic ordering key; lower sorts earlier among equals.
    std::function<int(const Board&, const Move&)> order_hint;
};

namespace detail {

constexpr int kWin = 32000;
constexpr int kWinThreshold = 30000;

inline int value_to_win_plies(int score) { return kWin - std::abs(score); }

// Scores are node-relative (win-in-j encodes as kWin-j), so a parent value v
// corresponds to child value inv_shift(v): negation plus the one-ply mate
// shift. Windows must cross levels through this exact map or the mate-range
// cutoffs go off by one and prune shorter wins.
inline int inv_shift(int v) {
    if (v > kWinThreshold) return -(v + 1);
    if (v < -kWinThreshold) return -(v - 1);
    return -v;
}

struct AbortSearch {};

// Lockless transposition table (xor-validated entries, lost updates are
// harmless). Scores are stored relative to the entry's node.
class TransTable {
public:
    enum Flag : uint8_t { kExact = 0, kLower = 1, kUpper = 2 };

    explicit TransTable(int log2_entries)
        : mask_((size_t{1} << log2_entries) - 1), slots_(size_t{1} << log2_entries) {}

    struct Probe {
        bool hit = false;
        int score = 0;
        Flag flag = kExact;
        int remaining = 0;
        Move move{};
        bool has_move = false;
    };

    Probe probe(uint64_t key, uint64_t check, const Board& b) const {
        const Slot& s = slots_[key & mask_];
        uint64_t data = s.data.load(std::memory_order_relaxed);
        uint64_t chk = s.check.load(std::memory_order_relaxed);
        Probe p;
        if (data == 0 || (chk ^ data) != check) return p;
        p.hit = true;
        p.score = static_cast<int16_t>(data & 0xFFFF);
        p.flag = static_cast<Flag>((data >> 16) & 0x3);
        p.remaining = static_cast<int>((data >> 18) & 0xFF);
        uint32_t mv = static_cast<uint32_t>((data >> 26) & 0x3FFFFFF);
        if (mv == kPassMove) {
            p.move = Move::pass();
            p.has_move = true;
        } else if (mv != kNoMove) {
            int fi = mv & 0xFFF, ti = (mv >> 12) & 0xFFF, kind = (mv >> 24) & 0x3;
            p.move = Move{{fi % b.width(), fi / b.width()},
                          {ti % b.width(), ti / b.width()},
                          static_cast<MoveKind>(kind)};
            p.has_move = true;
        }
        return p;
    }

    void store(uint64_t key, uint64_t check, int score, Flag flag, int remaining, const Move* mv,
               const Board& b) {
        Slot& s = slots_[key & mask_];
        uint64_t old = s.data.load(std::memory_order_relaxed);
        if (old != 0 && (s.check.load(std::memory_order_relaxed) ^ old) == check) {
            int old_rem = static_cast<int>((old >> 18) & 0xFF);
            Flag old_flag = static_cast<Flag>((old >> 16) & 0x3);
            if (old_flag == kExact && flag != kExact && old_rem >= remaining) return;
            if (old_rem > remaining && old_flag == kExact && flag == kExact) return;
        }
        uint32_t mcode = kNoMove;
        if (mv && !mv->is_pass()) {
            uint32_t fi = static_cast<uint32_t>(mv->from.row * b.width() + mv->from.col);
            uint32_t ti = static_cast<uint32_t>(mv->to.row * b.width() + mv->to.col);
            mcode = (static_cast<uint32_t>(mv->kind) << 24) | (ti << 12) | fi;
        } else if (mv && mv->is_pass()) {
            mcode = kPassMove;
        }
        if (remaining > 255) remaining = 255;
        uint64_t data = (static_cast<uint64_t>(static_cast<uint16_t>(score))) |
                        (static_cast<uint64_t>(flag) << 16) |
                        (static_cast<uint64_t>(remaining & 0xFF) << 18) |
                        (static_cast<uint64_t>(mcode) << 26);
        s.data.store(data, std::memory_order_relaxed);
        s.check.store(check ^ data, std::memory_order_relaxed);
    }

private:
    static constexpr uint32_t kNoMove = 0x3FFFFFF;
    static constexpr uint32_t kPassMove = 0x3FFFFFE;
    struct Slot {
        std::atomic<uint64_t> check{0};
        std::atomic<uint64_t> data{0};
    };
    size_t mask_;
    mutable std::vector<Slot> slots_;
};

class Searcher {
public:
    Searcher(const Board& root, const GameRules& rules, const SolveLimits& lim,
             TransTable* external_tt = nullptr)
        : board_(root),
          rules_(rules),
          lim_(lim),
          zob_a_holder_(zobrist_for(root.width(), root.height())),
          zob_b_holder_(zobrist_for(root.width() + 1, root.height() + 1)),  // distinct stream
          zob_a_(*zob_a_holder_),
          zob_b_(*zob_b_holder_),
          owned_tt_(lim.use_tt && !external_tt ? std::make_unique<TransTable>(lim.tt_log2_entries)
                                               : nullptr),
          tt_(external_tt ? external_tt : owned_tt_.get()) {
        if (!lim.use_tt) tt_ = nullptr;
        for (auto& [sq, pc] : board_.all_pieces()) (void)sq, ++counts_.at(pc.color, pc.animal);
        hash_a_ = zob_a_.full_hash(board_);
        hash_b_ = zob_b_.full_hash(board_);
    }

    uint64_t nodes() const { return nodes_; }

    // Full-window bounded negamax from the current position.
    // Returns the exact value; `tainted` reports repetition dependence.
    int search_root(int remaining, bool& tainted) {
        return search(remaining, -kWin, kWin, tainted);
    }

    // Deterministic best move at the current position for the given value.
    std::optional<Move> best_move(int remaining, int value) {
        auto moves = gen_moves();
        order_moves(moves);
        push_path();
        std::optional<Move> found;
        for (const Move& m : moves) {
            Undo u = make(m);
            int child;
            if (u.terminal) {
                child = u.terminal_value;
            } else {
                bool t = false;
                child = -search(remaining - 1, -kWin, kWin, t);
                if (child > kWinThreshold) --child;
                else if (child < -kWinThreshold) ++child;
            }
            unmake(u);
            if (child == value) {
                found = m;
                break;
            }
        }
        pop_path();
        return found;
    }

    struct Undo {
        Move move;
        int8_t captured = 0;
        uint64_t ha, hb;
        bool terminal = false;
        int terminal_value = 0;  // from the mover's perspective, ply-adjusted
    };

    Undo make(const Move& m) {
        ++nodes_;
        if (lim_.node_budget && nodes_ > lim_.node_budget) throw AbortSearch{};
        Undo u;
        u.move = m;
        u.ha = hash_a_;
        u.hb = hash_b_;
        Color mover = board_.to_move();
        if (!m.is_pass()) {
            size_t fi = static_cast<size_t>(m.from.row) * board_.width() + m.from.col;
            size_t ti = static_cast<size_t>(m.to.row) * board_.width() + m.to.col;
            const auto& grid = board_.piece_grid();
            u.captured = grid[ti];
            if (u.captured != 0) {
                Piece cap{u.captured > 0 ? Color::Red : Color::Black,
                          animal_from_rank(std::abs(u.captured))};
                --counts_.at(cap.color, cap.animal);
                hash_a_ ^= zob_a_.piece_key(ti, u.captured);
                hash_b_ ^= zob_b_.piece_key(ti, u.captured);
                board_.remove_piece(m.to);
            }
            int8_t pv = grid[fi];
            hash_a_ ^= zob_a_.piece_key(fi, pv) ^ zob_a_.piece_key(ti, pv);
            hash_b_ ^= zob_b_.piece_key(fi, pv) ^ zob_b_.piece_key(ti, pv);
            board_.force_move(m.from, m.to);
        }
        board_.set_to_move(other(mover));
        hash_a_ ^= zob_a_.side_key();
        hash_b_ ^= zob_b_.side_key();

        // Child terminal detection (mover's perspective, win-in-1).
        if (rules_.terminal_override) {
            if (auto w = rules_.terminal_override(board_, counts_)) {
                u.terminal = true;
                u.terminal_value = (*w == mover) ? kWin - 1 : -(kWin - 1);
                return u;
            }
        }
        if (!m.is_pass()) {
            const Terrain& t = board_.terrain_at(m.to);
            if (t.kind == TerrainKind::Den) {
                u.terminal = true;
                u.terminal_value = kWin - 1;
                return u;
            }
            if (counts_.total(other(mover)) == 0) {
                u.terminal = true;
                u.terminal_value = kWin - 1;
                return u;
            }
        }
        return u;
    }

    void unmake(const Undo& u) {
        Color prev = other(board_.to_move());
        board_.set_to_move(prev);
        if (!u.move.is_pass()) {
            board_.force_move(u.move.to, u.move.from);
            if (u.captured != 0) {
                Piece cap{u.captured > 0 ? Color::Red : Color::Black,
                          animal_from_rank(std::abs(u.captured))};
                ++counts_.at(cap.color, cap.animal);
                Board& b = board_;
                b.put_piece(u.move.to, cap);
            }
        }
        hash_a_ = u.ha;
        hash_b_ = u.hb;
    }

    const Board& board() const { return board_; }
    const PieceCounts& counts() const { return counts_; }

    std::vector<Move> gen_moves() {
        std::vector<Move> moves;
        detail::raw_moves(board_, board_.to_move(), moves);
        bool may_pass =
            board_.to_move() == Color::Red ? rules_.red_pass : rules_.black_pass;
        if (may_pass) moves.push_back(Move::pass());
        return moves;
    }

    void order_moves(std::vector<Move>& moves, const Move* tt_move = nullptr) {
        auto key = [&](const Move& m) -> int64_t {
            if (tt_move && m == *tt_move) return std::numeric_limits<int64_t>::min();
            int64_t k = 0;
            if (m.is_pass()) return 1 << 28;  // passes last
            if (auto cap = board_.piece_at(m.to))
                k -= (1 << 20) * rank_of(cap->animal);
            if (rules_.order_hint) k += rules_.order_hint(board_, m);
            return k;
        };
        std::stable_sort(moves.begin(), moves.end(), [&](const Move& a, const Move& b) {
            return key(a) < key(b);
        });
    }

    void push_path() { path_.push_back({hash_a_, hash_b_}); }
    void pop_path() { path_.pop_back(); }

private:
    bool on_path() const {
        for (const auto& [a, b] : path_)
            if (a == hash_a_ && b == hash_b_) return true;
        return false;
    }

    int search(int remaining, int alpha, int beta, bool& tainted) {
        tainted = false;
        if (on_path()) {
            tainted = true;
            return 0;
        }
        Move tt_move;
        bool have_tt_move = false;
        if (tt_) {
            auto p = tt_->probe(hash_a_, hash_b_, board_);
            if (p.hit) {
                if (p.has_move) {
                    tt_move = p.move;
                    have_tt_move = true;
                }
                if (auto v = usable_tt_value(p, remaining, alpha, beta)) return *v;
            }
        }

        auto moves = gen_moves();
        if (moves.empty()) return -kWin;  // side to move has no legal move and loses
        if (remaining == 0) return 0;

        order_moves(moves, have_tt_move ? &tt_move : nullptr);
        push_path();
        int best = -kWin - 1;
        Move best_mv = moves.front();
        bool any_tainted = false;
        int orig_alpha = alpha;
        int result;
        bool cut = false;
        for (const Move& m : moves) {
            Undo u = make(m);
            int child;
            bool child_taint = false;
            if (u.terminal) {
                child = u.terminal_value;
            } else {
                child = -search(remaining - 1, inv_shift(beta), inv_shift(alpha), child_taint);
                if (child > kWinThreshold) --child;
                else if (child < -kWinThreshold) ++child;
            }
            unmake(u);
            if (child > best) {
                best = child;
                best_mv = m;
            }
            if (child_taint) any_tainted = true;
            if (best > alpha) alpha = best;
            if (alpha >= beta) {
                cut = true;
                tainted = child_taint;  // the cutoff bound rests on this child alone
                break;
            }
        }
        pop_path();
        result = best;
        if (!cut) tainted = any_tainted;

        if (tt_ && !tainted) {
            TransTable::Flag flag = TransTable::kExact;
            if (result <= orig_alpha) flag = TransTable::kUpper;
            else if (result >= beta) flag = TransTable::kLower;
            tt_->store(hash_a_, hash_b_, result, flag, remaining, &best_mv, board_);
        }
        return result;
    }

    // Translates a stored entry into the current remaining-depth context.
    std::optional<int> usable_tt_value(const TransTable::Probe& p, int remaining, int alpha,
                                       int beta) const {
        int s = p.score;
        bool is_win = s > kWinThreshold, is_loss = s < -kWinThreshold;
        int j = is_win || is_loss ? value_to_win_plies(s) : 0;
        if (p.remaining >= remaining) {
            if (p.flag == TransTable::kExact) {
                if (is_win) return j <= remaining ? std::optional<int>(s) : std::optional<int>(0);
                if (is_loss) return j <= remaining ? std::optional<int>(s) : std::optional<int>(0);
                return 0;
            }
            if (p.flag == TransTable::kLower) {
                // True value >= s under a bound at least as deep.
                int lb;
                if (is_win) {
                    if (j > remaining) return std::nullopt;  // the fast win may not fit
                    lb = s;
                } else if (is_loss) {
                    lb = j > remaining ? 0 : s;  // opponent needs > remaining plies
                } else {
                    lb = s;
                }
                if (lb >= beta) return lb;
                return std::nullopt;
            }
            // kUpper: true value <= s.
            int ub;
            if (is_loss) {
                if (j > remaining) return std::nullopt;
                ub = s;
            } else if (is_win) {
                ub = j > remaining ? 0 : s;
            } else {
                ub = s;
            }
            if (ub <= alpha) return ub;
            return std::nullopt;
        }
        // Entry has less lookahead; only proven wins/losses inside it transfer.
        if (p.flag == TransTable::kExact || p.flag == TransTable::kLower) {
            if (is_win && j <= p.remaining && j <= remaining) {
                if (p.flag == TransTable::kExact) return s;
                if (s >= beta) return s;
            }
        }
        if (p.flag == TransTable::kExact || p.flag == TransTable::kUpper) {
            if (is_loss && j <= p.remaining && j <= remaining) {
                if (p.flag == TransTable::kExact) return s;
                if (s <= alpha) return s;
            }
        }
        return std::nullopt;
    }

    Board board_;
    GameRules rules_;
    SolveLimits lim_;
    std::shared_ptr<const Zobrist> zob_a_holder_;
    std::shared_ptr<const Zobrist> zob_b_holder_;
    const Zobrist& zob_a_;
    const Zobrist& zob_b_;
    std::unique_ptr<TransTable> owned_tt_;
    TransTable* tt_;
    PieceCounts counts_;
    uint64_t hash_a_ = 0, hash_b_ = 0;
    uint64_t nodes_ = 0;
    std::vector<std::pair<uint64_t, uint64_t>> path_;
};

}  // namespace detail

// Exact bounded adversarial solve of `board` under `rules`. The result is
// game-theoretic within limits.ply_bound: Win means a forced win within the
// bound (with repetitions along a line scored as draws), DrawBounded means
// neither side forces a win inside the bound, Unknown means the node budget
// ran out.
inline SolveResult solve_game(const Board& board, const SolveLimits& limits,
                              const GameRules& rules,
                              detail::TransTable* shared_tt = nullptr) {
    if (status(board).over) throw std::logic_error("solve called on terminal position");
    detail::Searcher s(board, rules, limits, shared_tt);
    SolveResult res;
    try {
        bool tainted = false;
        int value = s.search_root(limits.ply_bound, tainted);
        res.nodes = s.nodes();
        if (value > detail::kWinThreshold) {
            res.kind = SolveResult::Kind::Win;
            res.winner = board.to_move();
            res.plies = detail::value_to_win_plies(value);
        } else if (value < -detail::kWinThreshold) {
            res.kind = SolveResult::Kind::Win;
            res.winner = other(board.to_move());
            res.plies = detail::value_to_win_plies(value);
        } else {
            res.kind = SolveResult::Kind::DrawBounded;
            return res;
        }
    } catch (const detail::AbortSearch&) {
        res.kind = SolveResult::Kind::Unknown;
        res.nodes = s.nodes();
        return res;
    }
    // Principal variation by deterministic replay; a budget hit here only
    // truncates the line, the outcome above stands.
    try {
        int remaining = limits.ply_bound;
        int value_here = res.winner == board.to_move() ? detail::kWin - res.plies
                                                       : -(detail::kWin - res.plies);
        while (res.pv.size() <= static_cast<size_t>(limits.ply_bound)) {
            auto mv = s.best_move(remaining, value_here);
            if (!mv) break;
            res.pv.push_back(*mv);
            s.push_path();
            auto u = s.make(*mv);
            if (u.terminal) break;
            bool t = false;
            value_here = s.search_root(remaining - 1, t);
            remaining -= 1;
            if (std::abs(value_here) <= detail::kWinThreshold) break;
        }
    } catch (const detail::AbortSearch&) {
        // keep the truncated pv
    }
    res.nodes = s.nodes();
    return res;
}

inline SolveResult solve(const Board& board, const SolveLimits& limits = {}) {
    return solve_game(board, limits, GameRules{});
}

inline bool forced_win(const Board& board, Color color, int ply_bound) {
    SolveLimits lim;
    lim.ply_bound = ply_bound;
    return solve(board, lim).win_for(color);
}

// Count of legal move sequences of exactly `depth` plies. Terminal positions
// contribute nothing beyond depth 0.
inline uint64_t perft(const Board& board, int depth) {
    if (depth < 0) throw std::domain_error("perft depth must be >= 0");
    if (depth == 0) return 1;
    if (status(board).over) return 0;
    uint64_t total = 0;
    for (const Move& m : legal_moves(board)) total += perft(apply_move(board, m), depth - 1);
    return total;
}

}  // namespace dsq
