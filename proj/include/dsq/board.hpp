#pragma once

#include <optional>
#include <vector>

#include "dsq/core.hpp"

namespace dsq {

struct IllegalMove : std::runtime_error {
    explicit IllegalMove(const std::string& why) : std::runtime_error("illegal move: " + why) {}
};

// Immutable-by-convention board value. All rule operations are free
// functions or const members; apply_move returns a fresh board.
class Board {
public:
    Board() = default;
    Board(int width, int height, Color to_move = Color::Red)
        : width_(width),
          height_(height),
          to_move_(to_move),
          terrain_(static_cast<size_t>(width * height)),
          pieces_(static_cast<size_t>(width * height), int8_t{0}) {
        if (width < 1 || height < 1) throw std::domain_error("board dimensions must be >= 1");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    Color to_move() const { return to_move_; }
    void set_to_move(Color c) { to_move_ = c; }

    bool in_bounds(Square s) const {
        return s.col >= 0 && s.col < width_ && s.row >= 0 && s.row < height_;
    }

    const Terrain& terrain_at(Square s) const { return terrain_[index(s)]; }
    void set_terrain(Square s, Terrain t) { terrain_[index(s)] = t; }

    std::optional<Piece> piece_at(Square s) const {
        int8_t v = pieces_[index(s)];
        if (v == 0) return std::nullopt;
        return Piece{v > 0 ? Color::Red : Color::Black, animal_from_rank(v > 0 ? v : -v)};
    }

    bool occupied(Square s) const { return pieces_[index(s)] != 0; }

    void put_piece(Square s, Piece p) {
        validate_placement(s, p);
        pieces_[index(s)] = encode(p);
    }

    void remove_piece(Square s) { pieces_[index(s)] = 0; }

    // Raw move executor; legality is the caller's concern.
    void force_move(Square from, Square to) {
        pieces_[index(to)] = pieces_[index(from)];
        pieces_[index(from)] = 0;
    }

    std::vector<std::pair<Square, Piece>> all_pieces() const {
        std::vector<std::pair<Square, Piece>> out;
        for (int r = 0; r < height_; ++r)
            for (int c = 0; c < width_; ++c) {
                Square s{c, r};
                if (auto p = piece_at(s)) out.emplace_back(s, *p);
            }
        return out;
    }

    int piece_count(Color c) const {
        int n = 0;
        for (int8_t v : pieces_)
            if ((c == Color::Red && v > 0) || (c == Color::Black && v < 0)) ++n;
        return n;
    }

    bool operator==(const Board& o) const {
        return width_ == o.width_ && height_ == o.height_ && to_move_ == o.to_move_ &&
               terrain_ == o.terrain_ && pieces_ == o.pieces_;
    }

    const std::vector<int8_t>& piece_grid() const { return pieces_; }
    const std::vector<Terrain>& terrain_grid() const { return terrain_; }

private:
    size_t index(Square s) const {
        if (!in_bounds(s)) throw std::out_of_range("square out of bounds: " + square_label(s));
        return static_cast<size_t>(s.row) * width_ + s.col;
    }

    static int8_t encode(Piece p) {
        int8_t r = static_cast<int8_t>(rank_of(p.animal));
        return p.color == Color::Red ? r : static_cast<int8_t>(-r);
    }

    void validate_placement(Square s, Piece p) const {
        const Terrain& t = terrain_[index(s)];
        if (pieces_[index(s)] != 0)
            throw std::logic_error("square already occupied: " + square_label(s));
        if (t.kind == TerrainKind::Den && t.owner == p.color)
            throw std::logic_error("piece may not stand on its own den: " + square_label(s));
        if (t.kind == TerrainKind::River && p.animal != Animal::Rat)
            throw std::logic_error("only rats may occupy river squares: " + square_label(s));
    }

    int width_ = 0;
    int height_ = 0;
    Color to_move_ = Color::Red;
    std::vector<Terrain> terrain_;
    std::vector<int8_t> pieces_;
};

// Rank with trap nullification: a piece standing in an opponent trap has
// rank 0; its own traps leave it untouched. Stateless, so rank restores
// automatically once the piece leaves the trap.
inline int effective_rank(Piece piece, Square at, const Board& board) {
    const Terrain& t = board.terrain_at(at);  // throws if out of bounds
    if (t.kind == TerrainKind::Trap && t.owner != piece.color) return 0;
    return rank_of(piece.animal);
}

// Capture legality for attacker sitting at `from` taking defender at `at`.
// The attacker's rank counts at its current square, the defender's at the
// destination. Rat/elephant is special-cased before the rank comparison.
inline bool can_capture(Piece attacker, Square from, Piece defender, Square at,
                        const Board& board) {
    if (attacker.color == defender.color)
        throw std::logic_error("can_capture called on same-color pair");
    bool from_river = board.terrain_at(from).kind == TerrainKind::River;
    bool at_river = board.terrain_at(at).kind == TerrainKind::River;
    // No captures across the waterline in either direction.
    if (from_river != at_river) return false;
    if (from_river && at_river) return true;  // rat takes rat inside the river

    int def = effective_rank(defender, at, board);
    if (attacker.animal == Animal::Rat && defender.animal == Animal::Elephant) return true;
    if (attacker.animal == Animal::Elephant && defender.animal == Animal::Rat) return def == 0;
    return effective_rank(attacker, from, board) >= def;
}

namespace detail {

inline bool step_destination_ok(const Board& b, Piece mover, Square from, Square to) {
    const Terrain& t = b.terrain_at(to);
    if (t.kind == TerrainKind::Den && t.owner == mover.color) return false;
    if (t.kind == TerrainKind::River && mover.animal != Animal::Rat) return false;
    if (auto target = b.piece_at(to)) {
        if (target->color == mover.color) return false;
        return can_capture(mover, from, *target, to, b);
    }
    return true;
}

// Collects pseudo-legal moves for the piece on `from`; used by both
// legal_moves and status (no-move detection) without the Ongoing guard.
inline void moves_for_piece(const Board& b, Square from, Piece p, std::vector<Move>& out) {
    static constexpr int dc[4] = {0, 0, 1, -1};
    static constexpr int dr[4] = {1, -1, 0, 0};
    for (int d = 0; d < 4; ++d) {
        Square to{from.col + dc[d], from.row + dr[d]};
        if (!b.in_bounds(to)) continue;
        if (b.terrain_at(to).kind == TerrainKind::River && p.animal != Animal::Rat) {
            // Lion/tiger jump: skip the maximal river run, land on the first
            // non-river square, blocked by any occupant inside the run.
            if (p.animal != Animal::Lion && p.animal != Animal::Tiger) continue;
            Square cur = to;
            bool blocked = false;
            while (b.in_bounds(cur) && b.terrain_at(cur).kind == TerrainKind::River) {
                if (b.occupied(cur)) {
                    blocked = true;
                    break;
                }
                cur = Square{cur.col + dc[d], cur.row + dr[d]};
            }
            if (blocked || !b.in_bounds(cur)) continue;
            if (!step_destination_ok(b, p, from, cur)) continue;
            out.push_back(Move{from, cur, MoveKind::Jump});
            continue;
        }
        if (!step_destination_ok(b, p, from, to)) continue;
        out.push_back(Move{from, to, MoveKind::Step});
    }
}

inline void raw_moves(const Board& b, Color side, std::vector<Move>& out) {
    for (int r = 0; r < b.height(); ++r)
        for (int c = 0; c < b.width(); ++c) {
            Square s{c, r};
            auto p = b.piece_at(s);
            if (p && p->color == side) moves_for_piece(b, s, *p, out);
        }
}

}  // namespace detail

inline GameStatus status(const Board& board) {
    // Den occupation decides first; red den-entry is checked before black's
    // to keep the (unreachable in legal play) double-entry case deterministic.
    for (int r = 0; r < board.height(); ++r)
        for (int c = 0; c < board.width(); ++c) {
            Square s{c, r};
            const Terrain& t = board.terrain_at(s);
            if (t.kind != TerrainKind::Den) continue;
            if (auto p = board.piece_at(s); p && p->color != t.owner)
                return GameStatus::won(p->color);
        }
    if (board.piece_count(other(board.to_move())) == 0) return GameStatus::won(board.to_move());
    if (board.piece_count(board.to_move()) == 0) return GameStatus::won(other(board.to_move()));
    std::vector<Move> moves;
    detail::raw_moves(board, board.to_move(), moves);
    if (moves.empty()) return GameStatus::won(other(board.to_move()));
    return GameStatus::ongoing();
}

inline std::vector<Move> legal_moves(const Board& board) {
    if (status(board).over) throw std::logic_error("legal_moves called on terminal position");
    std::vector<Move> out;
    detail::raw_moves(board, board.to_move(), out);
    return out;
}

// Validates a single move against the rules without generating everything.
// Returns the reason a move is illegal, or nullopt if it is fine.
inline std::optional<std::string> move_illegality(const Board& b, const Move& m) {
    if (m.is_pass()) return "pass is not a board move";
    if (!b.in_bounds(m.from) || !b.in_bounds(m.to)) return "square out of bounds";
    auto p = b.piece_at(m.from);
    if (!p) return "no piece on " + square_label(m.from);
    if (p->color != b.to_move()) return "piece does not belong to side to move";
    std::vector<Move> mine;
    detail::moves_for_piece(b, m.from, *p, mine);
    for (const Move& cand : mine)
        if (cand.to == m.to && cand.kind == m.kind) return std::nullopt;
    // Classify for the error message.
    if (auto target = b.piece_at(m.to); target && target->color == p->color)
        return "destination occupied by own piece";
    if (b.terrain_at(m.to).kind == TerrainKind::River && p->animal != Animal::Rat)
        return "terrain forbids entry";
    if (auto target = b.piece_at(m.to)) return "rank forbids capture";
    return "no such move for that piece";
}

inline Board apply_move(const Board& board, const Move& move) {
    if (auto why = move_illegality(board, move)) throw IllegalMove(*why);
    Board next = board;
    next.remove_piece(move.to);
    next.force_move(move.from, move.to);
    next.set_to_move(other(board.to_move()));
    return next;
}

// Board-wide structural invariants (used by parsers and tests).
inline void validate_board(const Board& b) {
    int dens_occupied_by_enemy = 0;
    for (int r = 0; r < b.height(); ++r)
        for (int c = 0; c < b.width(); ++c) {
            Square s{c, r};
            auto p = b.piece_at(s);
            if (!p) continue;
            const Terrain& t = b.terrain_at(s);
            if (t.kind == TerrainKind::Den) {
                if (t.owner == p->color)
                    throw std::logic_error("piece on its own den: " + square_label(s));
                ++dens_occupied_by_enemy;
            }
            if (t.kind == TerrainKind::River && p->animal != Animal::Rat)
                throw std::logic_error("non-rat in river: " + square_label(s));
        }
    if (dens_occupied_by_enemy > 1) throw std::logic_error("more than one den occupied");
}

}  // namespace dsq
