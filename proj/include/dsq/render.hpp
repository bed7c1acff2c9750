#pragma once

#include <sstream>

#include "dsq/board.hpp"

namespace dsq {

// Human-readable grid with two-letter piece codes overlaid on terrain marks.
inline std::string render_ascii(const Board& b) {
    std::ostringstream out;
    for (int r = b.height() - 1; r >= 0; --r) {
        out.width(3);
        out << (r + 1) << ' ';
        for (int c = 0; c < b.width(); ++c) {
            Square s{c, r};
            if (auto p = b.piece_at(s)) {
                out << ' ' << piece_code(*p);
            } else {
                char t = '.';
                switch (b.terrain_at(s).kind) {
                    case TerrainKind::Plain: t = '.'; break;
                    case TerrainKind::River: t = '~'; break;
                    case TerrainKind::Trap:
                        t = b.terrain_at(s).owner == Color::Red ? 'T' : 't';
                        break;
                    case TerrainKind::Den:
                        t = b.terrain_at(s).owner == Color::Red ? 'D' : 'd';
                        break;
                }
                out << ' ' << ' ' << t;
            }
        }
        out << '\n';
    }
    out << "    ";
    for (int c = 0; c < b.width(); ++c) {
        std::string lbl = col_label(c);
        out << ' ' << (lbl.size() == 1 ? " " : "") << lbl;
    }
    out << '\n' << color_name(b.to_move()) << " to move\n";
    return out.str();
}

// Plain SVG: one rect per square, piece codes as text. Output is fully
// deterministic for a given board.
inline std::string render_svg(const Board& b) {
    const int cell = 28;
    std::ostringstream out;
    int w = b.width() * cell, h = b.height() * cell;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    for (int r = 0; r < b.height(); ++r)
        for (int c = 0; c < b.width(); ++c) {
            Square s{c, r};
            const Terrain& t = b.terrain_at(s);
            const char* fill = "#f7f3e8";
            switch (t.kind) {
                case TerrainKind::Plain: fill = "#f7f3e8"; break;
                case TerrainKind::River: fill = "#7fb2e5"; break;
                case TerrainKind::Trap: fill = "#9a9a9a"; break;
                case TerrainKind::Den: fill = t.owner == Color::Red ? "#e5a37f" : "#b29ae5"; break;
            }
            int x = c * cell, y = (b.height() - 1 - r) * cell;
            out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\""
                << cell << "\" fill=\"" << fill << "\" stroke=\"#555\"/>\n";
            if (auto p = b.piece_at(s)) {
                const char* color = p->color == Color::Red ? "#c22" : "#222";
                out << "<text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 4
                    << "\" font-size=\"11\" font-family=\"monospace\" text-anchor=\"middle\" "
                       "fill=\""
                    << color << "\">" << piece_code(*p) << "</text>\n";
            }
        }
    out << "</svg>\n";
    return out.str();
}

}  // namespace dsq
