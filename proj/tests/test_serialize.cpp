#include <catch2/catch_amalgamated.hpp>

#include "dsq/serialize.hpp"
#include "support/board_builders.hpp"

using namespace dsq;
using namespace dsq::testing;

TEST_CASE("square labels round-trip, including multi-letter columns") {
    REQUIRE(square_label(sq("a1")) == "a1");
    REQUIRE(square_label(sq("r11")) == "r11");
    REQUIRE(sq("d5") == Square{3, 4});
    REQUIRE(sq("z16") == Square{25, 15});
    REQUIRE(square_from_label("aa3") == Square{26, 2});
    REQUIRE(col_label(27) == "ab");
    REQUIRE_THROWS_AS(square_from_label("5a"), std::domain_error);
    REQUIRE_THROWS_AS(square_from_label("a0"), std::domain_error);
}

TEST_CASE("emit/parse round trip on a canonical fixture") {
    std::string text =
        "4 3 R\n"
        "~.dt\n"
        ".T..\n"
        "D.~.\n"
        "RE b 1\n"
        "BR c 1\n"
        "BN c 2\n";
    Board b = parse_board(text);
    REQUIRE(b.width() == 4);
    REQUIRE(b.height() == 3);
    REQUIRE(b.to_move() == Color::Red);
    REQUIRE(b.terrain_at(sq("a3")).kind == TerrainKind::River);
    REQUIRE(b.terrain_at(sq("c3")) == den_terrain(Color::Black));
    REQUIRE(b.terrain_at(sq("d3")) == trap_terrain(Color::Black));
    REQUIRE(b.terrain_at(sq("b2")) == trap_terrain(Color::Red));
    REQUIRE(b.terrain_at(sq("a1")) == den_terrain(Color::Red));
    REQUIRE(b.piece_at(sq("b1")) == Piece{Color::Red, Animal::Elephant});
    REQUIRE(b.piece_at(sq("c2")) == Piece{Color::Black, Animal::Lion});
    REQUIRE(emit_board(b) == text);
    REQUIRE(parse_board(emit_board(b)) == b);
}

TEST_CASE("piece token RE means red elephant") {
    Board b = parse_board("2 1 R\n..\nRE a 1\nBC b 1\n");
    REQUIRE(b.piece_at(sq("a1")) == Piece{Color::Red, Animal::Elephant});
    REQUIRE(piece_code(Piece{Color::Red, Animal::Elephant}) == "RE");
    REQUIRE(piece_code(Piece{Color::Black, Animal::Lion}) == "BN");
    REQUIRE(piece_code(Piece{Color::Black, Animal::Leopard}) == "BL");
}

TEST_CASE("parse errors carry line and column") {
    using Catch::Matchers::ContainsSubstring;
    REQUIRE_THROWS_MATCHES(parse_board("x\n"), ParseError, Catch::Matchers::Predicate<ParseError>(
        [](const ParseError& e) { return e.line == 1; }, "line 1"));
    // duplicate occupancy
    REQUIRE_THROWS_AS(parse_board("2 1 R\n..\nRE a 1\nBC a 1\n"), ParseError);
    // wrong row width
    REQUIRE_THROWS_AS(parse_board("3 1 R\n....\n"), ParseError);
    // non-rat in river
    REQUIRE_THROWS_AS(parse_board("2 1 R\n~.\nRE a 1\n"), ParseError);
    // piece on own den
    REQUIRE_THROWS_AS(parse_board("2 1 R\nD.\nRE a 1\n"), ParseError);
    // bad to_move
    REQUIRE_THROWS_AS(parse_board("2 1 X\n..\n"), ParseError);
    // off-board piece
    REQUIRE_THROWS_AS(parse_board("2 1 R\n..\nRE c 1\n"), ParseError);
}

TEST_CASE("round trip property on random boards") {
    std::mt19937_64 rng(99ULL);
    for (int i = 0; i < 200; ++i) {
        Board b = random_board(rng, 7, 9);
        REQUIRE(parse_board(emit_board(b)) == b);
    }
}
