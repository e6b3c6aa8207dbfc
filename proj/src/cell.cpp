#include "octa/cell.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace octa {

bool cells_adjacent(TriCell a, TriCell b)
{
    for (TriCell n : cell_neighbors(a))
        if (n == b)
            return true;
    return false;
}

std::array<VertexId, 2> shared_edge(TriCell a, TriCell b)
{
    std::array<VertexId, 2> out{};
    int k = 0;
    for (VertexId va : cell_vertices(a))
        for (VertexId vb : cell_vertices(b))
            if (va == vb && k < 2)
                out[k++] = va;
    assert(k == 2 && "cells do not share an edge");
    return out;
}

TriCell cell_from_vertices(const std::array<VertexId, 3>& vs)
{
    int minp = std::min({vs[0].p, vs[1].p, vs[2].p});
    int minq = std::min({vs[0].q, vs[1].q, vs[2].q});
    int sump = vs[0].p + vs[1].p + vs[2].p;
    TriCell c{minp, minq, sump == 3 * minp + 1 ? Orient::Up : Orient::Down};
    // sanity: the triple really is the vertex set of c
    auto expect = cell_vertices(c);
    auto got = vs;
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    assert(expect == got && "vertex triple is not a lattice triangle");
    (void)got;
    (void)expect;
    return c;
}

} // namespace octa
