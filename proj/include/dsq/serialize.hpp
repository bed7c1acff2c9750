#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "dsq/board.hpp"

namespace dsq {

// Board text format:
//   line 1: "W H to_move"            to_move in {R,B}
//   next H lines: terrain rows, TOP row first, W chars each:
//       '.' plain   '~' river   't' black trap   'T' red trap
//       'd' black den   'D' red den
//   then zero or more piece lines: "CC col row"
//       CC  = color letter (R/B) + animal letter (R C D W L T N E)
//       col = lowercase letter(s) (a..z, aa..)
//       row = 1-based integer
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int col_, const std::string& what_)
        : std::runtime_error("parse error at line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ": " + what_),
          line(line_),
          column(col_) {}
};

namespace detail {

inline char terrain_char(const Terrain& t) {
    switch (t.kind) {
        case TerrainKind::Plain: return '.';
        case TerrainKind::River: return '~';
        case TerrainKind::Trap: return t.owner == Color::Red ? 'T' : 't';
        case TerrainKind::Den: return t.owner == Color::Red ? 'D' : 'd';
    }
    return '?';
}

inline Terrain terrain_from_char(char c, int line, int col) {
    switch (c) {
        case '.': return plain_terrain();
        case '~': return river_terrain();
        case 'T': return trap_terrain(Color::Red);
        case 't': return trap_terrain(Color::Black);
        case 'D': return den_terrain(Color::Red);
        case 'd': return den_terrain(Color::Black);
    }
    throw ParseError(line, col, std::string("unknown terrain character '") + c + "'");
}

}  // namespace detail

inline std::string emit_board(const Board& b) {
    std::ostringstream out;
    out << b.width() << ' ' << b.height() << ' ' << (b.to_move() == Color::Red ? 'R' : 'B')
        << '\n';
    for (int r = b.height() - 1; r >= 0; --r) {
        for (int c = 0; c < b.width(); ++c) out << detail::terrain_char(b.terrain_at({c, r}));
        out << '\n';
    }
    for (int r = 0; r < b.height(); ++r)
        for (int c = 0; c < b.width(); ++c) {
            Square s{c, r};
            if (auto p = b.piece_at(s))
                out << piece_code(*p) << ' ' << col_label(s.col) << ' ' << (s.row + 1) << '\n';
        }
    return out.str();
}

inline Board parse_board(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError(1, 1, "missing header line");
    int w = 0, h = 0;
    char stm = 0;
    {
        std::istringstream hs(line);
        if (!(hs >> w >> h >> stm)) throw ParseError(lineno, 1, "bad header, want 'W H to_move'");
        std::string extra;
        if (hs >> extra) throw ParseError(lineno, 1, "trailing junk in header");
        if (w < 1 || h < 1) throw ParseError(lineno, 1, "board dimensions must be >= 1");
        if (stm != 'R' && stm != 'B') throw ParseError(lineno, 1, "to_move must be R or B");
    }
    Board b(w, h, stm == 'R' ? Color::Red : Color::Black);
    for (int r = h - 1; r >= 0; --r) {
        if (!next_line()) throw ParseError(lineno + 1, 1, "missing terrain row");
        if (static_cast<int>(line.size()) != w)
            throw ParseError(lineno, static_cast<int>(line.size()) + 1,
                             "terrain row has wrong width");
        for (int c = 0; c < w; ++c)
            b.set_terrain({c, r}, detail::terrain_from_char(line[c], lineno, c + 1));
    }
    while (next_line()) {
        if (line.empty()) break;  // blank line ends the board section (sidecars may follow)
        std::istringstream ps(line);
        std::string code, col_s;
        long row1 = 0;
        if (!(ps >> code >> col_s >> row1)) throw ParseError(lineno, 1, "bad piece line");
        std::string extra;
        if (ps >> extra) throw ParseError(lineno, 1, "trailing junk in piece line");
        if (code.size() != 2 || (code[0] != 'R' && code[0] != 'B'))
            throw ParseError(lineno, 1, "bad piece code '" + code + "'");
        Piece p;
        p.color = code[0] == 'R' ? Color::Red : Color::Black;
        try {
            p.animal = animal_from_letter(code[1]);
        } catch (const std::domain_error&) {
            throw ParseError(lineno, 2, "bad animal letter in '" + code + "'");
        }
        Square s;
        try {
            s = square_from_label(col_s + std::to_string(row1));
        } catch (const std::domain_error& e) {
            throw ParseError(lineno, 4, e.what());
        }
        if (!b.in_bounds(s)) throw ParseError(lineno, 4, "square off board: " + square_label(s));
        try {
            b.put_piece(s, p);
        } catch (const std::logic_error& e) {
            throw ParseError(lineno, 1, e.what());
        }
    }
    try {
        validate_board(b);
    } catch (const std::logic_error& e) {
        throw ParseError(lineno, 1, e.what());
    }
    return b;
}

}  // namespace dsq
