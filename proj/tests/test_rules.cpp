#include <catch2/catch_amalgamated.hpp>

#include "dsq/board.hpp"
#include "support/board_builders.hpp"

using namespace dsq;
using namespace dsq::testing;

namespace {

bool has_move(const std::vector<Move>& ms, const std::string& from, const std::string& to,
              MoveKind kind) {
    for (const Move& m : ms)
        if (m.from == sq(from) && m.to == sq(to) && m.kind == kind) return true;
    return false;
}

}  // namespace

TEST_CASE("rank order: only equal or higher rank may capture") {
    Board b = plain_board(5, 5);
    REQUIRE_FALSE(can_capture(rp(Animal::Cat), sq("b2"), bp(Animal::Dog), sq("b3"), b));
    REQUIRE(can_capture(rp(Animal::Dog), sq("b2"), bp(Animal::Dog), sq("b3"), b));
    REQUIRE(can_capture(rp(Animal::Lion), sq("b2"), bp(Animal::Dog), sq("b3"), b));
    // All-pairs check against rank arithmetic on plain terrain.
    for (int a = 1; a <= 8; ++a)
        for (int d = 1; d <= 8; ++d) {
            if (a == 1 && d == 8) continue;  // rat-elephant handled separately
            if (a == 8 && d == 1) continue;
            bool got = can_capture(rp(animal_from_rank(a)), sq("b2"), bp(animal_from_rank(d)),
                                   sq("b3"), b);
            REQUIRE(got == (a >= d));
        }
}

TEST_CASE("the weakest rat may capture the strongest elephant") {
    Board b = plain_board(5, 5);
    REQUIRE(can_capture(rp(Animal::Rat), sq("b2"), bp(Animal::Elephant), sq("b3"), b));
    REQUIRE(can_capture(bp(Animal::Rat), sq("b2"), rp(Animal::Elephant), sq("b3"), b));
    // ...but never the other way around against a healthy rat.
    REQUIRE_FALSE(can_capture(rp(Animal::Elephant), sq("b2"), bp(Animal::Rat), sq("b3"), b));
}

TEST_CASE("trap reduces rank to 0 so any piece captures; own trap is harmless") {
    Board b = plain_board(5, 5);
    b.set_terrain(sq("c3"), trap_terrain(Color::Red));
    REQUIRE(effective_rank(bp(Animal::Lion), sq("c3"), b) == 0);
    REQUIRE(effective_rank(rp(Animal::Elephant), sq("c3"), b) == 8);
    REQUIRE(effective_rank(rp(Animal::Tiger), sq("b2"), b) == 6);
    // Trapped lion falls to a tiger (and even to a rat).
    REQUIRE(can_capture(rp(Animal::Tiger), sq("c2"), bp(Animal::Lion), sq("c3"), b));
    REQUIRE(can_capture(rp(Animal::Rat), sq("c2"), bp(Animal::Lion), sq("c3"), b));
    // Elephant may take a rat whose rank fell to 0.
    REQUIRE(can_capture(rp(Animal::Elephant), sq("c2"), bp(Animal::Rat), sq("c3"), b));
    // Rank restores on exit: the same lion off the trap beats a tiger attack.
    REQUIRE_FALSE(can_capture(rp(Animal::Tiger), sq("c2"), bp(Animal::Lion), sq("b3"), b));
    // A piece in one of its own traps is unaffected.
    b.set_terrain(sq("d4"), trap_terrain(Color::Black));
    REQUIRE(effective_rank(bp(Animal::Lion), sq("d4"), b) == 7);
    REQUIRE_FALSE(can_capture(rp(Animal::Tiger), sq("d3"), bp(Animal::Lion), sq("d4"), b));
}

TEST_CASE("same-color capture query is a contract violation") {
    Board b = plain_board(5, 5);
    REQUIRE_THROWS_AS(can_capture(rp(Animal::Cat), sq("b2"), rp(Animal::Dog), sq("b3"), b),
                      std::logic_error);
}

TEST_CASE("effective_rank bounds checking") {
    Board b = plain_board(3, 3);
    REQUIRE_THROWS_AS(effective_rank(rp(Animal::Cat), Square{5, 5}, b), std::out_of_range);
}

TEST_CASE("all pieces move one square horizontally or vertically") {
    Board b = plain_board(5, 5);
    b.put_piece(sq("c3"), rp(Animal::Tiger));
    b.put_piece(sq("a1"), bp(Animal::Cat));  // keep black alive so position is ongoing
    auto ms = legal_moves(b);
    std::vector<Move> tiger;
    for (auto& m : ms)
        if (m.from == sq("c3")) tiger.push_back(m);
    REQUIRE(tiger.size() == 4);
    for (auto& m : tiger) REQUIRE(m.kind == MoveKind::Step);
}

TEST_CASE("only the rat may move into a river square") {
    Board b = plain_board(5, 5);
    b.set_terrain(sq("c3"), river_terrain());
    b.put_piece(sq("c2"), rp(Animal::Dog));
    b.put_piece(sq("b2"), rp(Animal::Rat));
    b.put_piece(sq("e5"), bp(Animal::Cat));
    auto ms = legal_moves(b);
    REQUIRE_FALSE(has_move(ms, "c2", "c3", MoveKind::Step));
    b.remove_piece(sq("c2"));
    b.put_piece(sq("c2"), rp(Animal::Rat));
    ms = legal_moves(b);
    REQUIRE(has_move(ms, "c2", "c3", MoveKind::Step));
}

TEST_CASE("lion and tiger jump to the next non-river square; others cannot") {
    // Red lion adjacent east of a 2-wide horizontal river run: jump lands
    // three columns west of it.
    Board b = plain_board(6, 3);
    b.set_terrain(sq("c2"), river_terrain());
    b.set_terrain(sq("d2"), river_terrain());
    b.put_piece(sq("e2"), rp(Animal::Lion));
    b.put_piece(sq("a3"), bp(Animal::Cat));
    auto ms = legal_moves(b);
    REQUIRE(has_move(ms, "e2", "b2", MoveKind::Jump));

    Board c = b;
    c.remove_piece(sq("e2"));
    c.put_piece(sq("e2"), rp(Animal::Leopard));
    auto ms2 = legal_moves(c);
    for (auto& m : ms2) REQUIRE(m.kind == MoveKind::Step);
}

TEST_CASE("jump is blocked by any occupant of an intermediate river square") {
    Board b = plain_board(6, 3);
    b.set_terrain(sq("c2"), river_terrain());
    b.set_terrain(sq("d2"), river_terrain());
    b.put_piece(sq("e2"), rp(Animal::Tiger));
    b.put_piece(sq("d2"), bp(Animal::Rat));
    auto ms = legal_moves(b);
    REQUIRE_FALSE(has_move(ms, "e2", "b2", MoveKind::Jump));
}

TEST_CASE("jump landing capture obeys rank rules") {
    Board b = plain_board(6, 3);
    b.set_terrain(sq("c2"), river_terrain());
    b.set_terrain(sq("d2"), river_terrain());
    b.put_piece(sq("e2"), rp(Animal::Tiger));
    b.put_piece(sq("b2"), bp(Animal::Cat));
    REQUIRE(has_move(legal_moves(b), "e2", "b2", MoveKind::Jump));
    b.remove_piece(sq("b2"));
    b.put_piece(sq("b2"), bp(Animal::Lion));
    REQUIRE_FALSE(has_move(legal_moves(b), "e2", "b2", MoveKind::Jump));
}

TEST_CASE("pieces may not enter their own den; entering the opponent den wins") {
    Board b = plain_board(3, 3);
    b.set_terrain(sq("b1"), den_terrain(Color::Red));
    b.set_terrain(sq("b3"), den_terrain(Color::Black));
    b.put_piece(sq("b2"), rp(Animal::Wolf));
    b.put_piece(sq("a1"), bp(Animal::Cat));
    auto ms = legal_moves(b);
    REQUIRE_FALSE(has_move(ms, "b2", "b1", MoveKind::Step));
    REQUIRE(has_move(ms, "b2", "b3", MoveKind::Step));
    Board after = apply_move(b, Move{sq("b2"), sq("b3"), MoveKind::Step});
    REQUIRE(status(after) == GameStatus::won(Color::Red));
}

TEST_CASE("rat in the river cannot capture the elephant on land, and rats cannot capture across the river edge") {
    Board b = plain_board(5, 5);
    b.set_terrain(sq("c3"), river_terrain());
    b.put_piece(sq("c3"), rp(Animal::Rat));
    b.put_piece(sq("c4"), bp(Animal::Elephant));
    b.put_piece(sq("d4"), bp(Animal::Rat));
    auto ms = legal_moves(b);
    REQUIRE_FALSE(has_move(ms, "c3", "c4", MoveKind::Step));
    // Land rat cannot take a river rat either.
    Board c = plain_board(5, 5, Color::Black);
    c.set_terrain(sq("c3"), river_terrain());
    c.put_piece(sq("c3"), rp(Animal::Rat));
    c.put_piece(sq("c4"), bp(Animal::Rat));
    REQUIRE_FALSE(has_move(legal_moves(c), "c4", "c3", MoveKind::Step));
    // Rat-on-rat inside the river is allowed.
    Board d = plain_board(5, 5);
    d.set_terrain(sq("c3"), river_terrain());
    d.set_terrain(sq("c4"), river_terrain());
    d.put_piece(sq("c3"), rp(Animal::Rat));
    d.put_piece(sq("c4"), bp(Animal::Rat));
    REQUIRE(has_move(legal_moves(d), "c3", "c4", MoveKind::Step));
}

TEST_CASE("players alternate moves and apply_move preserves the source board") {
    Board b = plain_board(4, 4);
    b.put_piece(sq("b2"), rp(Animal::Cat));
    b.put_piece(sq("c4"), bp(Animal::Dog));
    Board snapshot = b;
    Board after = apply_move(b, Move{sq("b2"), sq("b3"), MoveKind::Step});
    REQUIRE(b == snapshot);
    REQUIRE(after.to_move() == Color::Black);
    REQUIRE(after.piece_at(sq("b3")).has_value());
    REQUIRE_FALSE(after.piece_at(sq("b2")).has_value());
}

TEST_CASE("capture removes exactly one piece") {
    Board b = plain_board(4, 4);
    b.put_piece(sq("b2"), rp(Animal::Dog));
    b.put_piece(sq("b3"), bp(Animal::Cat));
    b.put_piece(sq("d4"), bp(Animal::Dog));
    int before = b.piece_count(Color::Red) + b.piece_count(Color::Black);
    Board after = apply_move(b, Move{sq("b2"), sq("b3"), MoveKind::Step});
    int post = after.piece_count(Color::Red) + after.piece_count(Color::Black);
    REQUIRE(post == before - 1);
}

TEST_CASE("apply then reconstruct equals original") {
    Board b = plain_board(4, 4);
    b.put_piece(sq("b2"), rp(Animal::Cat));
    b.put_piece(sq("c4"), bp(Animal::Dog));
    Board after = apply_move(b, Move{sq("b2"), sq("c2"), MoveKind::Step});
    Board undone = after;
    undone.force_move(sq("c2"), sq("b2"));
    undone.set_to_move(Color::Red);
    REQUIRE(undone == b);
}

TEST_CASE("illegal moves are rejected with a reason") {
    Board b = plain_board(4, 4);
    b.put_piece(sq("b2"), rp(Animal::Cat));
    b.put_piece(sq("c2"), rp(Animal::Dog));
    b.put_piece(sq("d4"), bp(Animal::Dog));
    REQUIRE_THROWS_AS(apply_move(b, Move{sq("b2"), sq("c2"), MoveKind::Step}), IllegalMove);
    REQUIRE_THROWS_AS(apply_move(b, Move{sq("d4"), sq("d3"), MoveKind::Step}), IllegalMove);
    REQUIRE_THROWS_AS(apply_move(b, Move{sq("b2"), sq("b4"), MoveKind::Step}), IllegalMove);
}

TEST_CASE("status: den entry, extermination, and no-move loss") {
    Board b = plain_board(4, 4);
    b.set_terrain(sq("b4"), den_terrain(Color::Black));
    b.put_piece(sq("b4"), rp(Animal::Tiger));
    b.put_piece(sq("a1"), bp(Animal::Cat));
    REQUIRE(status(b) == GameStatus::won(Color::Red));

    Board c = plain_board(4, 4, Color::Black);
    c.put_piece(sq("b2"), rp(Animal::Tiger));
    REQUIRE(status(c) == GameStatus::won(Color::Red));

    // Black to move, black piece totally boxed in by rivers: black loses.
    Board d = plain_board(3, 3, Color::Black);
    d.put_piece(sq("b2"), bp(Animal::Cat));
    d.set_terrain(sq("a2"), river_terrain());
    d.set_terrain(sq("c2"), river_terrain());
    d.set_terrain(sq("b1"), river_terrain());
    d.set_terrain(sq("b3"), river_terrain());
    d.put_piece(sq("a1"), rp(Animal::Cat));
    REQUIRE(status(d) == GameStatus::won(Color::Red));

    Board e = plain_board(4, 4);
    e.set_terrain(sq("a4"), den_terrain(Color::Black));
    e.set_terrain(sq("d1"), den_terrain(Color::Red));
    e.put_piece(sq("b2"), rp(Animal::Cat));
    e.put_piece(sq("c3"), bp(Animal::Cat));
    REQUIRE(status(e) == GameStatus::ongoing());
    REQUIRE_THROWS_AS(legal_moves(Board(plain_board(2, 1))), std::logic_error);
}

TEST_CASE("board invariants enforced on placement") {
    Board b = plain_board(3, 3);
    b.set_terrain(sq("b1"), den_terrain(Color::Red));
    b.set_terrain(sq("b3"), river_terrain());
    REQUIRE_THROWS_AS(b.put_piece(sq("b1"), rp(Animal::Cat)), std::logic_error);
    REQUIRE_THROWS_AS(b.put_piece(sq("b3"), rp(Animal::Tiger)), std::logic_error);
    b.put_piece(sq("a1"), rp(Animal::Cat));
    REQUIRE_THROWS_AS(b.put_piece(sq("a1"), bp(Animal::Dog)), std::logic_error);
    b.put_piece(sq("b3"), rp(Animal::Rat));  // rats swim
}
