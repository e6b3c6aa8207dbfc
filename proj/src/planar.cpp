#include "octa/planar.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace octa {

namespace {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int a)
    {
        while (up[a] != a)
            a = up[a] = up[up[a]];
        return a;
    }
    void join(int a, int b) { up[find(a)] = find(b); }
};

using VPair = std::pair<VertexId, VertexId>;

VPair edge_key(VertexId a, VertexId b) { return a < b ? VPair{a, b} : VPair{b, a}; }

// The two cells incident to a unit edge.  Edge types: (p,q)-(p+1,q)
// horizontal, (p,q)-(p,q+1) left-leaning, (p+1,q)-(p,q+1) right-leaning.
std::array<TriCell, 2> edge_cells(const VPair& e)
{
    auto [a, b] = e;
    int dp = b.p - a.p, dq = b.q - a.q;
    if (dp == 1 && dq == 0)
        return {TriCell{a.p, a.q, Orient::Up}, TriCell{a.p, a.q - 1, Orient::Down}};
    if (dp == 0 && dq == 1)
        return {TriCell{a.p, a.q, Orient::Up}, TriCell{a.p - 1, a.q, Orient::Down}};
    // diagonal edge (p+1,q)-(p,q+1): sorted order gives a=(p,q+1), b=(p+1,q)
    assert(dp == 1 && dq == -1);
    return {TriCell{a.p, b.q, Orient::Up}, TriCell{a.p, b.q, Orient::Down}};
}

} // namespace

std::vector<Hole> holes(const Polyiamond& p)
{
    int minx = p.cells()[0].x, maxx = minx, miny = p.cells()[0].y, maxy = miny;
    for (TriCell c : p.cells()) {
        minx = std::min(minx, c.x);
        maxx = std::max(maxx, c.x);
        miny = std::min(miny, c.y);
        maxy = std::max(maxy, c.y);
    }
    --minx;
    --miny;
    ++maxx;
    ++maxy;

    std::map<TriCell, int> cell_id;   // complement cells in the box
    std::map<VPair, int> edge_id;     // edges not belonging to p
    std::map<VertexId, int> vert_id;
    std::vector<TriCell> comp_cells;

    auto box_cells = [&](auto&& fn) {
        for (int x = minx; x <= maxx; ++x)
            for (int y = miny; y <= maxy; ++y)
                for (Orient o : {Orient::Up, Orient::Down})
                    fn(TriCell{x, y, o});
    };

    box_cells([&](TriCell c) {
        if (!p.has_cell(c)) {
            cell_id.emplace(c, int(cell_id.size()));
            comp_cells.push_back(c);
        }
    });
    box_cells([&](TriCell c) {
        auto vs = cell_vertices(c);
        for (int i = 0; i < 3; ++i) {
            vert_id.emplace(vs[i], 0);
            VPair e = edge_key(vs[i], vs[(i + 1) % 3]);
            auto [ca, cb] = edge_cells(e);
            bool glued = p.has_cell(ca) && p.has_cell(cb) && !p.is_slit(ca, cb);
            if (!glued)
                edge_id.emplace(e, 0);
        }
    });
    int ne = 0;
    for (auto& [e, id] : edge_id)
        id = int(cell_id.size()) + ne++;
    int nv = 0;
    for (auto& [v, id] : vert_id)
        id = int(cell_id.size()) + ne + nv++;
    int outside = int(cell_id.size()) + ne + nv;
    UnionFind uf(outside + 1);

    auto cell_node = [&](TriCell c) -> int {
        auto it = cell_id.find(c);
        return it == cell_id.end() ? (p.has_cell(c) ? -1 : outside) : it->second;
    };

    for (const auto& [e, id] : edge_id) {
        for (TriCell side : edge_cells(e)) {
            int n = cell_node(side);
            if (n >= 0)
                uf.join(id, n);
        }
        // endpoints are complement points and touch the edge
        uf.join(id, vert_id.at(e.first));
        uf.join(id, vert_id.at(e.second));
    }
    for (const auto& [v, id] : vert_id) {
        // all six incident cells
        for (TriCell c : {TriCell{v.p, v.q, Orient::Up}, TriCell{v.p - 1, v.q, Orient::Up},
                          TriCell{v.p, v.q - 1, Orient::Up}, TriCell{v.p - 1, v.q, Orient::Down},
                          TriCell{v.p, v.q - 1, Orient::Down},
                          TriCell{v.p - 1, v.q - 1, Orient::Down}}) {
            int n = cell_node(c);
            if (n >= 0)
                uf.join(id, n);
        }
    }

    std::map<int, Hole> comp;
    std::map<int, bool> has_edge;
    for (const auto& [c, id] : cell_id) {
        int r = uf.find(id);
        if (r == uf.find(outside))
            continue;
        comp[r].cells.push_back(c);
    }
    for (const auto& [e, id] : edge_id) {
        int r = uf.find(id);
        if (r != uf.find(outside))
            has_edge[r] = true;
    }
    std::vector<Hole> out;
    // positive-area holes first, then pure slit components
    for (auto& [r, h] : comp) {
        h.kind = HoleKind::PositiveArea;
        std::sort(h.cells.begin(), h.cells.end());
        out.push_back(std::move(h));
        has_edge.erase(r);
    }
    for (auto& [r, unused] : has_edge) {
        (void)unused;
        out.push_back(Hole{HoleKind::Slit, {}});
    }
    return out;
}

Polyiamond hull(const Polyiamond& p)
{
    int minp = 1 << 28, maxp = -(1 << 28), minq = 1 << 28, maxq = -(1 << 28);
    int mins = 1 << 28, maxs = -(1 << 28);
    for (TriCell c : p.cells())
        for (VertexId v : cell_vertices(c)) {
            minp = std::min(minp, v.p);
            maxp = std::max(maxp, v.p);
            minq = std::min(minq, v.q);
            maxq = std::max(maxq, v.q);
            mins = std::min(mins, v.p + v.q);
            maxs = std::max(maxs, v.p + v.q);
        }
    std::vector<TriCell> cells;
    for (int x = minp; x < maxp; ++x)
        for (int y = minq; y < maxq; ++y)
            for (Orient o : {Orient::Up, Orient::Down}) {
                TriCell c{x, y, o};
                bool ok = true;
                for (VertexId v : cell_vertices(c))
                    ok = ok && v.p >= minp && v.p <= maxp && v.q >= minq && v.q <= maxq &&
                         v.p + v.q >= mins && v.p + v.q <= maxs;
                if (ok)
                    cells.push_back(c);
            }
    return Polyiamond(std::move(cells));
}

bool is_convex(const Polyiamond& p)
{
    if (p.has_slits())
        return false;
    return hull(p).cells() == p.cells();
}

namespace {

VertexId accordion(VertexId v, int band)
{
    if (band % 2 == 0)
        return {v.p + band / 2, v.q - band};
    return {v.p + v.q - (band + 1) / 2, (band + 1) - v.q};
}

} // namespace

Polyiamond zigzag_reduce(const Polyiamond& p, int axis)
{
    assert(axis >= 0 && axis < 3);
    // conjugate so the folded lines are the q = const family
    Isometry rot60{0, -1, 1, 1, 0, 0};
    Isometry h; // identity
    for (int i = 0; i < axis; ++i)
        h = h.then(rot60.inverse());
    Polyiamond q = p.transformed(h);
    int minb = q.cells()[0].y;
    for (TriCell c : q.cells())
        minb = std::min(minb, c.y);
    q = q.translated(0, -minb);

    std::vector<TriCell> image;
    for (TriCell c : q.cells()) {
        auto vs = cell_vertices(c);
        image.push_back(cell_from_vertices({accordion(vs[0], c.y), accordion(vs[1], c.y),
                                            accordion(vs[2], c.y)}));
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return Polyiamond(std::move(image)).transformed(h.inverse());
}

int width(const Polyiamond& p)
{
    int w = 0;
    for (int axis = 0; axis < 3; ++axis)
        w = std::max(w, zigzag_reduce(p, axis).size());
    return w;
}

bool contains(const Polyiamond& p, const Polyiamond& q, Containment mode)
{
    if (q.size() > p.size())
        return false;
    int pminx = 1 << 28, pmaxx = -(1 << 28), pminy = 1 << 28, pmaxy = -(1 << 28);
    for (TriCell c : p.cells()) {
        pminx = std::min(pminx, c.x);
        pmaxx = std::max(pmaxx, c.x);
        pminy = std::min(pminy, c.y);
        pmaxy = std::max(pmaxy, c.y);
    }

    std::vector<Polyiamond> images;
    std::vector<std::string> keys;
    for (const Isometry& g : point_group()) {
        Polyiamond img = q.transformed(g);
        int mx = 1 << 28, my = 1 << 28;
        for (TriCell c : img.cells()) {
            mx = std::min(mx, c.x);
            my = std::min(my, c.y);
        }
        img = img.translated(-mx, -my);
        std::string k = poly_key(img);
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
            keys.push_back(k);
            images.push_back(std::move(img));
        }
    }

    for (const Polyiamond& img : images) {
        int iw = 0, ih = 0;
        for (TriCell c : img.cells()) {
            iw = std::max(iw, c.x);
            ih = std::max(ih, c.y);
        }
        if (iw > pmaxx - pminx || ih > pmaxy - pminy)
            continue;
        for (int tx = pminx; tx + iw <= pmaxx; ++tx)
            for (int ty = pminy; ty + ih <= pmaxy; ++ty) {
                bool ok = true;
                for (TriCell c : img.cells()) {
                    if (!p.has_cell({c.x + tx, c.y + ty, c.orient})) {
                        ok = false;
                        break;
                    }
                }
                if (ok && mode == Containment::Full) {
                    for (const auto& [a, b] : img.glue_edges()) {
                        if (!p.is_glued({a.x + tx, a.y + ty, a.orient},
                                        {b.x + tx, b.y + ty, b.orient})) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (ok)
                    return true;
            }
    }
    return false;
}

} // namespace octa
