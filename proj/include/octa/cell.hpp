#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace octa {

// Axial coordinates with basis vectors at 60 degrees:
//   vertex (p,q) sits at Euclidean (p + q/2, q*sqrt(3)/2).
struct VertexId {
    int p = 0;
    int q = 0;
    auto operator<=>(const VertexId&) const = default;
};

// Proper 3-coloring of the lattice vertices; adjacent vertices always differ.
inline int vertex_color(VertexId v) { return ((v.p - v.q) % 3 + 3) % 3; }

enum class Orient : std::uint8_t { Up = 0, Down = 1 };

// One lattice triangle.  Up(x,y) has vertices (x,y),(x+1,y),(x,y+1);
// Down(x,y) has vertices (x+1,y),(x,y+1),(x+1,y+1).
struct TriCell {
    int x = 0;
    int y = 0;
    Orient orient = Orient::Up;
    auto operator<=>(const TriCell&) const = default;
};

inline bool is_up(TriCell c) { return c.orient == Orient::Up; }

inline std::array<VertexId, 3> cell_vertices(TriCell c)
{
    if (is_up(c))
        return {VertexId{c.x, c.y}, VertexId{c.x + 1, c.y}, VertexId{c.x, c.y + 1}};
    return {VertexId{c.x + 1, c.y}, VertexId{c.x, c.y + 1}, VertexId{c.x + 1, c.y + 1}};
}

// The three edge-neighbors; an Up cell only touches Down cells and vice versa.
inline std::array<TriCell, 3> cell_neighbors(TriCell c)
{
    if (is_up(c))
        return {TriCell{c.x, c.y, Orient::Down},
                TriCell{c.x - 1, c.y, Orient::Down},
                TriCell{c.x, c.y - 1, Orient::Down}};
    return {TriCell{c.x, c.y, Orient::Up},
            TriCell{c.x + 1, c.y, Orient::Up},
            TriCell{c.x, c.y + 1, Orient::Up}};
}

bool cells_adjacent(TriCell a, TriCell b);

// The two vertices of the shared side of two adjacent cells.
std::array<VertexId, 2> shared_edge(TriCell a, TriCell b);

// Reconstruct a cell from its vertex set (any order).  Aborts on a triple
// that is not a lattice triangle.
TriCell cell_from_vertices(const std::array<VertexId, 3>& vs);

struct CellHash {
    std::size_t operator()(TriCell c) const
    {
        std::uint64_t k = (std::uint64_t(std::uint32_t(c.x)) << 33) ^
                          (std::uint64_t(std::uint32_t(c.y)) << 1) ^
                          std::uint64_t(c.orient);
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        return std::size_t(k);
    }
};

struct VertexHash {
    std::size_t operator()(VertexId v) const
    {
        return CellHash{}(TriCell{v.p, v.q, Orient::Up});
    }
};

} // namespace octa
