#include "octa/coverage.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace octa {

namespace {

// Incremental fold-map construction: cells are attached one by one along
// glued edges, each either flat-folded (same face) or rolled (adjacent
// face).  Shared-edge corners carry over; the new private vertex keeps the
// old private corner when flat and takes its antipodal when rolled.
struct MapBuilder {
    std::vector<TriCell> cells;
    std::map<TriCell, std::array<Corner, 3>> corners;
    std::vector<CellPair> glue;

    void seed(TriCell c, FaceIdx face)
    {
        std::array<Corner, 3> cs{};
        auto vs = cell_vertices(c);
        for (int s = 0; s < 3; ++s) {
            int axis = vertex_color(vs[s]);
            cs[s] = Corner{std::uint8_t(axis), (face & (4 >> axis)) ? -1 : +1};
        }
        add(c, cs);
    }

    void extend(TriCell prev, TriCell next, bool roll)
    {
        assert(cells_adjacent(prev, next));
        auto pv = cell_vertices(prev);
        auto nv = cell_vertices(next);
        const auto& pc = corners.at(prev);
        std::array<Corner, 3> nc{};
        int priv_prev = -1;
        for (int s = 0; s < 3; ++s) {
            bool shared = false;
            for (int t = 0; t < 3; ++t)
                if (pv[s] == nv[t])
                    shared = true;
            if (!shared)
                priv_prev = s;
        }
        for (int t = 0; t < 3; ++t) {
            bool filled = false;
            for (int s = 0; s < 3; ++s)
                if (nv[t] == pv[s]) {
                    nc[t] = pc[s];
                    filled = true;
                }
            if (!filled)
                nc[t] = roll ? antipodal(pc[priv_prev]) : pc[priv_prev];
        }
        add(next, nc);
        glue.push_back(make_pair_sorted(prev, next));
    }

    FaceIdx face_of(TriCell c) const
    {
        int f = 0;
        for (const Corner& k : corners.at(c))
            if (k.sign < 0)
                f |= 4 >> k.axis;
        return f;
    }

    // grow an arm of `count` flat-folded cells; `step` yields the next cell
    template <typename Step>
    TriCell arm(TriCell from, int count, Step step)
    {
        TriCell cur = from;
        for (int i = 0; i < count; ++i) {
            TriCell nxt = step(cur);
            extend(cur, nxt, false);
            cur = nxt;
        }
        return cur;
    }

    // final polyiamond: every shared side not on the glue list is a slit
    Polyiamond finish() const
    {
        Polyiamond p(cells, {});
        std::vector<CellPair> slits;
        for (const auto& e : p.shared_edges())
            if (std::find(glue.begin(), glue.end(), e) == glue.end())
                slits.push_back(e);
        return Polyiamond(cells, slits);
    }

    FoldMap fold_map(const Polyiamond& p) const
    {
        Occurrences o = occurrences(p);
        FoldMap m(o.occs.size());
        for (size_t i = 0; i < o.occs.size(); ++i) {
            bool set = false;
            for (auto [ci, slot] : o.occs[i].incidences) {
                Corner c = corners.at(p.cells()[std::size_t(ci)])[std::size_t(slot)];
                if (!set) {
                    m[i] = c;
                    set = true;
                } else if (!(m[i] == c)) {
                    throw std::logic_error("inconsistent corners within one occurrence");
                }
            }
        }
        return m;
    }

private:
    void add(TriCell c, const std::array<Corner, 3>& cs)
    {
        if (corners.count(c))
            throw std::logic_error("arm layout collision");
        cells.push_back(c);
        corners[c] = cs;
    }
};

TriCell col_up(TriCell c)
{
    return is_up(c) ? TriCell{c.x, c.y, Orient::Down} : TriCell{c.x, c.y + 1, Orient::Up};
}
TriCell col_down(TriCell c)
{
    return is_up(c) ? TriCell{c.x, c.y - 1, Orient::Down} : TriCell{c.x, c.y, Orient::Up};
}
TriCell row_left(TriCell c)
{
    return is_up(c) ? TriCell{c.x - 1, c.y, Orient::Down} : TriCell{c.x, c.y, Orient::Up};
}
TriCell row_right(TriCell c)
{
    return is_up(c) ? TriCell{c.x, c.y, Orient::Down} : TriCell{c.x + 1, c.y, Orient::Up};
}

const TriCell kT1{1, -1, Orient::Down}, kT2{1, 0, Orient::Up}, kT3{1, 0, Orient::Down},
    kT4{2, 0, Orient::Up}, kT5{2, 0, Orient::Down}, kT6{3, 0, Orient::Up},
    kT7{3, 0, Orient::Down}, kT8{3, 1, Orient::Up};

// base net: row of six with one flap below the left end and one above the
// right end; all edges rolled, covering each face once
void seed_base_net(MapBuilder& b)
{
    b.seed(kT2, face_index(-1, +1, +1));
    b.extend(kT2, kT1, true);
    b.extend(kT2, kT3, true);
    b.extend(kT3, kT4, true);
    b.extend(kT4, kT5, true);
    b.extend(kT5, kT6, true);
    b.extend(kT6, kT7, true);
    b.extend(kT7, kT8, true);
    int seen = 0;
    for (TriCell c : b.cells)
        seen |= 1 << b.face_of(c);
    assert(seen == 0xff);
    (void)seen;
}

// the 48 octahedron symmetries as signed axis permutations on face ids
struct FaceSym {
    std::array<int, 3> perm;
    int flips;
    FaceIdx operator()(FaceIdx f) const
    {
        int out = 0;
        for (int a = 0; a < 3; ++a) {
            int neg = (f & (4 >> a)) ? 1 : 0;
            neg ^= (flips >> a) & 1;
            if (neg)
                out |= 4 >> perm[std::size_t(a)];
        }
        return out;
    }
};

const std::vector<FaceSym>& face_symmetries()
{
    static const std::vector<FaceSym> syms = [] {
        const std::array<std::array<int, 3>, 6> perms{
            {{{0, 1, 2}}, {{0, 2, 1}}, {{1, 0, 2}}, {{1, 2, 0}}, {{2, 0, 1}}, {{2, 1, 0}}}};
        std::vector<FaceSym> out;
        for (const auto& p : perms)
            for (int f = 0; f < 8; ++f)
                out.push_back({p, f});
        return out;
    }();
    return syms;
}

BuildResult finish_build(const MapBuilder& b, const std::array<int, 8>& want,
                         const std::array<int, 8>& face_of_label)
{
    Polyiamond p = b.finish();
    FoldMap m = b.fold_map(p);
    CoverageVector cov = validate(p, m);
    for (int f = 0; f < 8; ++f)
        if (cov[std::size_t(f)] != want[std::size_t(f)])
            throw std::logic_error("constructed coverage mismatch on face " + face_label(f));
    return BuildResult{std::move(p), std::move(m), face_of_label};
}

} // namespace

BuildResult build_with_slits(const CoverageSpec& spec)
{
    for (int v : spec.m)
        if (v < 1)
            throw poly_error("covering numbers must be positive");

    std::array<int, 8> want{};
    std::array<int, 8> face_of_label{};
    for (int i = 0; i < 8; ++i) {
        face_of_label[std::size_t(i)] = kLabelFace[std::size_t(i)];
        want[std::size_t(kLabelFace[std::size_t(i)])] = spec.m[std::size_t(i)];
    }

    MapBuilder b;
    seed_base_net(b);
    auto len = [&](TriCell t) { return want[std::size_t(b.face_of(t))] - 1; };
    b.arm(kT1, len(kT1), col_down);
    b.arm(kT2, len(kT2), row_left);
    b.arm(kT3, len(kT3), col_up);
    b.arm(kT4, len(kT4), col_down);
    b.arm(kT5, len(kT5), col_up);
    b.arm(kT6, len(kT6), col_down);
    b.arm(kT7, len(kT7), row_right);
    b.arm(kT8, len(kT8), col_up);
    return finish_build(b, want, face_of_label);
}

BuildResult build_slitfree(const CoverageSpec& spec)
{
    for (int v : spec.m)
        if (v < 1)
            throw poly_error("covering numbers must be positive");

    const auto& syms = face_symmetries();
    auto counts_under = [&](const FaceSym& g) {
        std::array<int, 8> c{};
        for (int i = 0; i < 8; ++i)
            c[std::size_t(g(kLabelFace[std::size_t(i)]))] = spec.m[std::size_t(i)];
        return c;
    };

    // main layout: compound arms live on the faces of kT3/kT6 (an opposite
    // pair); the branch targets are the faces of kT4 and kT5
    const int T = face_index(-1, -1, +1), G = face_index(+1, -1, +1);
    const int U = face_index(+1, +1, -1), H = face_index(+1, -1, -1);
    const FaceSym* pick = nullptr;
    std::array<int, 8> c{};
    int best_min = -1;
    for (const auto& g : syms) {
        auto cc = counts_under(g);
        bool ok = (cc[std::size_t(T)] >= 2 || cc[std::size_t(G)] == 1) &&
                  (cc[std::size_t(U)] >= 2 || cc[std::size_t(H)] == 1);
        if (!ok)
            continue;
        int m = std::min(cc[std::size_t(T)], cc[std::size_t(U)]);
        if (m > best_min) {
            best_min = m;
            pick = &g;
            c = cc;
        }
    }

    MapBuilder b;
    std::array<int, 8> face_of_label{};

    if (pick) {
        for (int i = 0; i < 8; ++i)
            face_of_label[std::size_t(i)] = (*pick)(kLabelFace[std::size_t(i)]);
        seed_base_net(b);
        b.arm(kT1, c[0] - 1, col_down);
        b.arm(kT2, c[4] - 1, row_left);
        b.arm(kT7, c[5] - 1, row_right);
        b.arm(kT8, c[7] - 1, col_up);

        // top compound: prefix on T, remainder rolled onto G
        int a = c[std::size_t(T)], g = c[std::size_t(G)];
        if (g == 1) {
            b.arm(kT3, a - 1, col_up);
        } else if (a == 2) {
            TriCell e = b.arm(kT3, 1, col_up);
            TriCell first = col_up(e);
            b.extend(e, first, true);
            b.arm(first, g - 2, col_up);
        } else if (a == 3) {
            TriCell e = b.arm(kT3, 1, col_up); // U(1,1)
            TriCell bend = row_left(e);        // D(0,1), still on T
            b.extend(e, bend, false);
            TriCell first = col_up(bend); // U(0,2), rolled onto G
            b.extend(bend, first, true);
            b.arm(first, g - 2, col_up);
        } else {
            assert(a >= 4);
            b.arm(kT3, a - 1, col_up);
            TriCell at{1, 2, Orient::Up}; // third column cell
            TriCell first = row_left(at); // D(0,2)
            b.extend(at, first, true);
            b.arm(first, g - 2, row_left);
        }

        // bottom compound, mirrored: prefix on U, remainder rolled onto H
        int a2 = c[std::size_t(U)], g2 = c[std::size_t(H)];
        if (g2 == 1) {
            b.arm(kT6, a2 - 1, col_down);
        } else if (a2 == 2) {
            TriCell e = b.arm(kT6, 1, col_down);
            TriCell first = col_down(e);
            b.extend(e, first, true);
            b.arm(first, g2 - 2, col_down);
        } else if (a2 == 3) {
            TriCell e = b.arm(kT6, 1, col_down); // D(3,-1)
            TriCell bend = row_right(e);         // U(4,-1), still on U
            b.extend(e, bend, false);
            TriCell first = col_down(bend); // D(4,-2), rolled onto H
            b.extend(bend, first, true);
            b.arm(first, g2 - 2, col_down);
        } else {
            assert(a2 >= 4);
            b.arm(kT6, a2 - 1, col_down);
            TriCell at{3, -2, Orient::Down}; // third column cell
            TriCell first = row_right(at);   // U(4,-2)
            b.extend(at, first, true);
            b.arm(first, g2 - 2, row_right);
        }
    } else {
        // every opposite pair holds a count-1 face and no two count-1 faces
        // are adjacent: the count-1 faces form one parity class.  Alternate
        // layout: row of five with three flaps; the four faces of the other
        // class sit on the four Up cells, each with a free arm zone.
        const TriCell u1{1, 0, Orient::Up}, d1{1, 0, Orient::Down}, u2{2, 0, Orient::Up},
            d2{2, 0, Orient::Down}, u3{3, 0, Orient::Up}, fu{1, 1, Orient::Up},
            fd{0, 1, Orient::Down}, fb{3, -1, Orient::Down};
        const FaceSym* alt = nullptr;
        for (const auto& g : syms) {
            auto cc = counts_under(g);
            if (cc[std::size_t(face_index(+1, +1, +1))] == 1 &&
                cc[std::size_t(face_index(+1, -1, -1))] == 1 &&
                cc[std::size_t(face_index(-1, +1, -1))] == 1 &&
                cc[std::size_t(face_index(-1, -1, +1))] == 1) {
                alt = &g;
                c = cc;
                break;
            }
        }
        if (!alt)
            throw std::logic_error("no admissible face symmetry for coverage spec");
        for (int i = 0; i < 8; ++i)
            face_of_label[std::size_t(i)] = (*alt)(kLabelFace[std::size_t(i)]);

        b.seed(u1, face_index(-1, +1, +1));
        b.extend(u1, d1, true);
        b.extend(d1, u2, true);
        b.extend(u2, d2, true);
        b.extend(d2, u3, true);
        b.extend(u3, fb, true);
        b.extend(d1, fu, true);
        b.extend(fu, fd, true);
        int seen = 0;
        for (TriCell cell : b.cells)
            seen |= 1 << b.face_of(cell);
        assert(seen == 0xff);
        (void)seen;

        b.arm(u1, c[std::size_t(b.face_of(u1))] - 1, row_left);
        b.arm(u2, c[std::size_t(b.face_of(u2))] - 1, col_down);
        b.arm(u3, c[std::size_t(b.face_of(u3))] - 1, row_right);
        b.arm(fu, c[std::size_t(b.face_of(fu))] - 1, col_up);
    }

    BuildResult r = finish_build(b, c, face_of_label);
    if (r.poly.has_slits())
        throw std::logic_error("slit-free construction produced slits");
    return r;
}

} // namespace octa
