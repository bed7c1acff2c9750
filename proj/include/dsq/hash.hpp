#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <vector>

#include "dsq/board.hpp"

namespace dsq {

// Zobrist keys sized to one board geometry. Keys are seeded deterministically
// so identical runs hash identically.
class Zobrist {
public:
    Zobrist(int width, int height) : width_(width) {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        size_t n = static_cast<size_t>(width) * height;
        piece_.resize(n * 16);
        for (auto& v : piece_) v = rng();
        side_ = rng();
    }

    uint64_t full_hash(const Board& b) const {
        uint64_t h = b.to_move() == Color::Black ? side_ : 0;
        const auto& grid = b.piece_grid();
        for (size_t i = 0; i < grid.size(); ++i) {
            if (grid[i] != 0) h ^= piece_key(i, grid[i]);
        }
        return h;
    }

    uint64_t piece_key(size_t square_index, int8_t encoded) const {
        int idx = encoded > 0 ? encoded - 1 : 8 + (-encoded - 1);
        return piece_[square_index * 16 + idx];
    }

    uint64_t piece_key(Square s, Piece p) const {
        size_t si = static_cast<size_t>(s.row) * width_ + s.col;
        int idx = rank_of(p.animal) - 1 + (p.color == Color::Black ? 8 : 0);
        return piece_[si * 16 + idx];
    }

    uint64_t side_key() const { return side_; }

private:
    int width_;
    std::vector<uint64_t> piece_;
    uint64_t side_;
};

// Shared per-geometry key tables; solver instances for equal-sized boards
// hash identically, which also lets them share transposition tables.
inline std::shared_ptr<const Zobrist> zobrist_for(int width, int height) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const Zobrist>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(width, height);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto z = std::make_shared<const Zobrist>(width, height);
    cache.emplace(key, z);
    return z;
}

}  // namespace dsq
