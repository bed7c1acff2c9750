#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dsq {

// Animal ranks. Rank order decides capture legality (higher or equal captures),
// with the rat/elephant exception handled in capture logic.
enum class Animal : int8_t {
    Rat = 1,
    Cat = 2,
    Dog = 3,
    Wolf = 4,
    Leopard = 5,
    Tiger = 6,
    Lion = 7,
    Elephant = 8,
};

constexpr int rank_of(Animal a) { return static_cast<int>(a); }

inline Animal animal_from_rank(int r) {
    if (r < 1 || r > 8) throw std::domain_error("animal rank out of range: " + std::to_string(r));
    return static_cast<Animal>(r);
}

enum class Color : int8_t { Red = 0, Black = 1 };

constexpr Color other(Color c) { return c == Color::Red ? Color::Black : Color::Red; }

inline const char* color_name(Color c) { return c == Color::Red ? "Red" : "Black"; }

// Piece letters for the two-letter notation ("RE" = red elephant).
// Lion is 'N' so leopard can keep 'L'.
inline char animal_letter(Animal a) {
    switch (a) {
        case Animal::Rat: return 'R';
        case Animal::Cat: return 'C';
        case Animal::Dog: return 'D';
        case Animal::Wolf: return 'W';
        case Animal::Leopard: return 'L';
        case Animal::Tiger: return 'T';
        case Animal::Lion: return 'N';
        case Animal::Elephant: return 'E';
    }
    throw std::logic_error("bad animal");
}

inline Animal animal_from_letter(char c) {
    switch (c) {
        case 'R': return Animal::Rat;
        case 'C': return Animal::Cat;
        case 'D': return Animal::Dog;
        case 'W': return Animal::Wolf;
        case 'L': return Animal::Leopard;
        case 'T': return Animal::Tiger;
        case 'N': return Animal::Lion;
        case 'E': return Animal::Elephant;
    }
    throw std::domain_error(std::string("bad animal letter: ") + c);
}

struct Piece {
    Color color;
    Animal animal;

    bool operator==(const Piece&) const = default;
};

inline std::string piece_code(Piece p) {
    std::string s;
    s += (p.color == Color::Red ? 'R' : 'B');
    s += animal_letter(p.animal);
    return s;
}

enum class TerrainKind : int8_t { Plain, River, Trap, Den };

struct Terrain {
    TerrainKind kind = TerrainKind::Plain;
    Color owner = Color::Red;  // meaningful only for Trap/Den

    bool operator==(const Terrain&) const = default;
};

constexpr Terrain plain_terrain() { return Terrain{TerrainKind::Plain, Color::Red}; }
constexpr Terrain river_terrain() { return Terrain{TerrainKind::River, Color::Red}; }
constexpr Terrain trap_terrain(Color owner) { return Terrain{TerrainKind::Trap, owner}; }
constexpr Terrain den_terrain(Color owner) { return Terrain{TerrainKind::Den, owner}; }

// 0-based board coordinate. Column letters map a=0, b=1, ...; rows are
// 1-based in text labels, so label "d5" is Square{3, 4}.
struct Square {
    int col = 0;
    int row = 0;

    bool operator==(const Square&) const = default;
    auto operator<=>(const Square&) const = default;
};

// Column label: a..z, then aa, ab, ... for wide assembled boards.
inline std::string col_label(int col) {
    std::string s;
    int c = col;
    do {
        s.insert(s.begin(), static_cast<char>('a' + c % 26));
        c = c / 26 - 1;
    } while (c >= 0);
    return s;
}

inline std::string square_label(Square s) { return col_label(s.col) + std::to_string(s.row + 1); }

// Parses labels like "d5", "r11", "aa3". Throws std::domain_error on junk.
inline Square square_from_label(const std::string& text) {
    size_t i = 0;
    long col = -1;
    while (i < text.size() && text[i] >= 'a' && text[i] <= 'z') {
        col = (col + 1) * 26 + (text[i] - 'a');
        ++i;
    }
    if (col < 0 || i == text.size()) throw std::domain_error("bad square label: " + text);
    size_t digits = 0;
    long row = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        row = row * 10 + (text[i] - '0');
        ++i;
        ++digits;
    }
    if (digits == 0 || i != text.size() || row < 1)
        throw std::domain_error("bad square label: " + text);
    return Square{static_cast<int>(col), static_cast<int>(row - 1)};
}

enum class MoveKind : int8_t { Step, Jump, Pass };

struct Move {
    Square from;
    Square to;
    MoveKind kind = MoveKind::Step;

    bool operator==(const Move&) const = default;
    auto operator<=>(const Move&) const = default;

    static Move pass() { return Move{{0, 0}, {0, 0}, MoveKind::Pass}; }
    bool is_pass() const { return kind == MoveKind::Pass; }
};

inline std::string move_label(const Move& m) {
    if (m.is_pass()) return "pass";
    return square_label(m.from) + "-" + square_label(m.to);
}

struct GameStatus {
    bool over = false;
    Color winner = Color::Red;  // meaningful only when over

    static GameStatus ongoing() { return GameStatus{false, Color::Red}; }
    static GameStatus won(Color by) { return GameStatus{true, by}; }

    bool operator==(const GameStatus&) const = default;
};

enum class Heading : int8_t { North, South, East, West };

constexpr int heading_dc(Heading h) { return h == Heading::East ? 1 : h == Heading::West ? -1 : 0; }
constexpr int heading_dr(Heading h) { return h == Heading::North ? 1 : h == Heading::South ? -1 : 0; }

constexpr Heading opposite(Heading h) {
    switch (h) {
        case Heading::North: return Heading::South;
        case Heading::South: return Heading::North;
        case Heading::East: return Heading::West;
        case Heading::West: return Heading::East;
    }
    return Heading::North;
}

inline const char* heading_name(Heading h) {
    switch (h) {
        case Heading::North: return "N";
        case Heading::South: return "S";
        case Heading::East: return "E";
        case Heading::West: return "W";
    }
    return "?";
}

inline Heading heading_from_name(const std::string& s) {
    if (s == "N") return Heading::North;
    if (s == "S") return Heading::South;
    if (s == "E") return Heading::East;
    if (s == "W") return Heading::West;
    throw std::domain_error("bad heading: " + s);
}

}  // namespace dsq
