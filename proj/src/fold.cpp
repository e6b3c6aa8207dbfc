#include "octa/fold.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

namespace octa {

std::string corner_label(Corner c)
{
    std::string s(1, c.sign > 0 ? '+' : '-');
    s += "XYZ"[c.axis];
    return s;
}

std::optional<Corner> parse_corner(const std::string& s)
{
    if (s.size() != 2)
        return std::nullopt;
    int sign = s[0] == '+' ? +1 : s[0] == '-' ? -1 : 0;
    const char* ax = "XYZ";
    const char* pos = std::char_traits<char>::find(ax, 3, s[1]);
    if (sign == 0 || !pos)
        return std::nullopt;
    return Corner{std::uint8_t(pos - ax), sign};
}

std::string face_label(FaceIdx f)
{
    std::string s;
    for (int a = 0; a < 3; ++a)
        s += (f & (4 >> a)) ? '-' : '+';
    return s;
}

Occurrences occurrences(const Polyiamond& p)
{
    const auto& cells = p.cells();
    int n = int(cells.size());
    std::vector<int> uf(3 * n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int a) {
        while (uf[a] != a)
            a = uf[a] = uf[uf[a]];
        return a;
    };
    auto join = [&](int a, int b) { uf[find(a)] = find(b); };

    auto slot_of = [&](int cell, VertexId v) {
        auto vs = cell_vertices(cells[cell]);
        for (int s = 0; s < 3; ++s)
            if (vs[s] == v)
                return s;
        assert(false);
        return -1;
    };
    auto cell_index = [&](TriCell c) {
        auto it = std::lower_bound(cells.begin(), cells.end(), c);
        return int(it - cells.begin());
    };

    for (const auto& [a, b] : p.glue_edges()) {
        int ia = cell_index(a), ib = cell_index(b);
        for (VertexId v : shared_edge(a, b))
            join(3 * ia + slot_of(ia, v), 3 * ib + slot_of(ib, v));
    }

    std::map<int, std::vector<std::pair<int, int>>> groups;
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 3; ++s)
            groups[find(3 * c + s)].push_back({c, s});

    Occurrences out;
    out.of_cell.assign(n, {-1, -1, -1});
    std::vector<std::pair<std::pair<int, int>, int>> order; // (least incidence, root)
    for (auto& [root, inc] : groups) {
        std::sort(inc.begin(), inc.end());
        order.push_back({inc.front(), root});
    }
    std::sort(order.begin(), order.end());
    for (auto& [least, root] : order) {
        auto& inc = groups[root];
        VertexId v = cell_vertices(cells[inc[0].first])[inc[0].second];
        VertexOccurrence occ{v, vertex_color(v), inc};
        int id = int(out.occs.size());
        for (auto [c, s] : inc)
            out.of_cell[c][s] = id;
        out.occs.push_back(std::move(occ));
    }
    return out;
}

FaceIdx face_of_cell(const Polyiamond& p, const Occurrences& o, const FoldMap& m, int cell)
{
    (void)p;
    int f = 0;
    for (int s = 0; s < 3; ++s) {
        Corner c = m[o.of_cell[cell][s]];
        if (c.sign < 0)
            f |= 4 >> c.axis;
    }
    return f;
}

CoverageVector validate(const Polyiamond& p, const FoldMap& m)
{
    Occurrences o = occurrences(p);
    if (m.size() != o.occs.size())
        throw invalid_fold_map("fold map has " + std::to_string(m.size()) + " entries, expected " +
                               std::to_string(o.occs.size()));
    // each color class must use one axis, and the three axes must differ
    std::array<int, 3> axis_of_color{-1, -1, -1};
    for (size_t i = 0; i < m.size(); ++i) {
        int col = o.occs[i].color;
        if (axis_of_color[col] < 0)
            axis_of_color[col] = m[i].axis;
        else if (axis_of_color[col] != m[i].axis)
            throw invalid_fold_map("occurrence " + std::to_string(i) +
                                   " breaks the constant-axis rule for its color class");
    }
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (axis_of_color[a] >= 0 && axis_of_color[a] == axis_of_color[b])
                throw invalid_fold_map("two color classes share one axis");

    CoverageVector cov{};
    for (int c = 0; c < p.size(); ++c) {
        int seen = 0;
        for (int s = 0; s < 3; ++s)
            seen |= 1 << m[o.of_cell[c][s]].axis;
        if (seen != 7)
            throw invalid_fold_map("cell " + std::to_string(c) + " does not span three axes");
        ++cov[face_of_cell(p, o, m, c)];
    }
    return cov;
}

namespace {

// mask transform: set of face indices with one axis bit toggled
int flip_mask(int mask, int bit)
{
    int out = 0;
    for (int f = 0; f < 8; ++f)
        if (mask & (1 << f))
            out |= 1 << (f ^ bit);
    return out;
}

struct Searcher {
    const Occurrences& occ;
    int n_cells;
    SolveMode mode;

    std::vector<int> order;          // occurrence ids, most-incident first
    std::vector<int> sign;           // 0 unknown, else +-1
    std::vector<int> partial_face;   // face bits fixed so far per cell
    std::vector<int> free_axes;      // bitmask of axis bits (4>>a) still free
    std::vector<int> remaining;      // unassigned occurrence count per cell
    std::array<int, 8> face_count{}; // covered faces with multiplicity
    int covered_mask = 0;

    int best = -1;
    std::optional<FoldMap> witness;

    explicit Searcher(const Occurrences& o, int nc, SolveMode m) : occ(o), n_cells(nc), mode(m)
    {
        order.resize(o.occs.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return o.occs[a].incidences.size() > o.occs[b].incidences.size();
        });
        sign.assign(o.occs.size(), 0);
        partial_face.assign(nc, 0);
        free_axes.assign(nc, 7);
        remaining.assign(nc, 3);
    }

    int possible_union() const
    {
        int u = covered_mask;
        for (int c = 0; c < n_cells; ++c) {
            if (remaining[c] == 0)
                continue;
            int m = 1 << partial_face[c];
            for (int b : {4, 2, 1})
                if (free_axes[c] & b)
                    m |= flip_mask(m, b);
            u |= m;
        }
        return u;
    }

    void assign(int id, int s)
    {
        sign[id] = s;
        for (auto [c, slot] : occ.occs[id].incidences) {
            int axis = occ.occs[id].color; // canonical color -> axis
            (void)slot;
            free_axes[c] &= ~(4 >> axis);
            if (s < 0)
                partial_face[c] |= 4 >> axis;
            if (--remaining[c] == 0) {
                if (++face_count[partial_face[c]] == 1)
                    covered_mask |= 1 << partial_face[c];
            }
        }
    }

    void unassign(int id, int s)
    {
        for (auto [c, slot] : occ.occs[id].incidences) {
            (void)slot;
            int axis = occ.occs[id].color;
            if (remaining[c]++ == 0) {
                if (--face_count[partial_face[c]] == 0)
                    covered_mask &= ~(1 << partial_face[c]);
            }
            free_axes[c] |= 4 >> axis;
            if (s < 0)
                partial_face[c] &= ~(4 >> axis);
        }
        sign[id] = 0;
    }

    FoldMap make_map() const
    {
        FoldMap m(occ.occs.size());
        for (size_t i = 0; i < occ.occs.size(); ++i)
            m[i] = Corner{std::uint8_t(occ.occs[i].color), sign[i] == 0 ? +1 : sign[i]};
        return m;
    }

    bool dfs(size_t depth)
    {
        if (mode == SolveMode::AllFaces && covered_mask == 0xff) {
            best = 8;
            witness = make_map(); // free occurrences completed with '+'
            return true;
        }
        int u = possible_union();
        if (mode == SolveMode::AllFaces) {
            if (u != 0xff)
                return false;
        } else if (std::popcount(unsigned(u)) <= best) {
            return false;
        }
        if (depth == order.size()) {
            int cov = std::popcount(unsigned(covered_mask));
            if (cov > best) {
                best = cov;
                witness = make_map();
            }
            return mode == SolveMode::AllFaces && covered_mask == 0xff;
        }
        int id = order[depth];
        for (int s : {+1, -1}) {
            if (depth == 0 && s < 0)
                break; // global inversion is an octahedron symmetry
            assign(id, s);
            bool done = dfs(depth + 1);
            unassign(id, s);
            if (done)
                return true;
        }
        return false;
    }
};

} // namespace

SolveResult solve(const Polyiamond& p, SolveMode mode)
{
    Occurrences o = occurrences(p);
    Searcher s(o, p.size(), mode);
    if (mode == SolveMode::Maximize)
        s.best = 0;
    s.dfs(0);
    SolveResult r;
    if (mode == SolveMode::AllFaces) {
        r.best = s.witness ? 8 : 0;
        r.witness = s.witness;
    } else {
        r.best = s.best;
        r.witness = s.witness;
    }
    return r;
}

// --- independent placement-propagation solver ---------------------------

namespace {

struct Propagation {
    // corner per (cell, slot); axis 0..2 with sign, encoded 0..5, -1 unset
    std::vector<std::array<int, 3>> corner;

    static int enc(Corner c) { return c.axis * 2 + (c.sign < 0 ? 1 : 0); }
    static int flip(int e) { return e ^ 1; }
};

struct CheckEdge {
    int ca, cb;
    int slot_a1, slot_b1; // first shared vertex in each cell
    int slot_a2, slot_b2; // second shared vertex
    int priv_a, priv_b;
};

} // namespace

bool cross_check(const Polyiamond& p)
{
    const auto& cells = p.cells();
    int n = int(cells.size());
    auto cell_index = [&](TriCell c) {
        auto it = std::lower_bound(cells.begin(), cells.end(), c);
        return int(it - cells.begin());
    };
    auto slot_of = [&](int ci, VertexId v) {
        auto vs = cell_vertices(cells[ci]);
        for (int s = 0; s < 3; ++s)
            if (vs[s] == v)
                return s;
        return -1;
    };
    auto edge_info = [&](TriCell a, TriCell b) {
        CheckEdge e;
        e.ca = cell_index(a);
        e.cb = cell_index(b);
        auto sh = shared_edge(a, b);
        e.slot_a1 = slot_of(e.ca, sh[0]);
        e.slot_b1 = slot_of(e.cb, sh[0]);
        e.slot_a2 = slot_of(e.ca, sh[1]);
        e.slot_b2 = slot_of(e.cb, sh[1]);
        e.priv_a = 3 - e.slot_a1 - e.slot_a2;
        e.priv_b = 3 - e.slot_b1 - e.slot_b2;
        return e;
    };

    // BFS spanning tree of the glue graph; remaining glue edges become
    // cycle-consistency checks
    std::vector<CheckEdge> tree, other;
    {
        std::vector<char> seen(n, 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        std::vector<std::pair<int, int>> tree_pairs;
        for (size_t h = 0; h < queue.size(); ++h) {
            TriCell c = cells[queue[h]];
            for (TriCell nb : cell_neighbors(c)) {
                if (!p.has_cell(nb) || p.is_slit(c, nb))
                    continue;
                int j = cell_index(nb);
                if (!seen[j]) {
                    seen[j] = 1;
                    tree.push_back(edge_info(c, nb));
                    tree_pairs.push_back({std::min(queue[h], j), std::max(queue[h], j)});
                    queue.push_back(j);
                }
            }
        }
        for (const auto& [a, b] : p.glue_edges()) {
            std::pair<int, int> key{cell_index(a), cell_index(b)};
            if (key.first > key.second)
                std::swap(key.first, key.second);
            if (std::find(tree_pairs.begin(), tree_pairs.end(), key) == tree_pairs.end())
                other.push_back(edge_info(a, b));
        }
    }

    int best = 0;
    int nt = int(tree.size());
    assert(nt == n - 1);

    // 48 seed placements: 6 axis bijections x 8 sign triples
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<std::array<int, 3>> corner(n);
    for (const auto& perm : perms) {
        for (int signs = 0; signs < 8 && best < 8; ++signs) {
            for (long mask = 0; mask < (1L << nt) && best < 8; ++mask) {
                for (int s = 0; s < 3; ++s)
                    corner[0][s] = perm[s] * 2 + ((signs >> s) & 1);
                for (int t = 0; t < nt; ++t) {
                    const CheckEdge& e = tree[t];
                    bool roll = (mask >> t) & 1;
                    corner[e.cb][e.slot_b1] = corner[e.ca][e.slot_a1];
                    corner[e.cb][e.slot_b2] = corner[e.ca][e.slot_a2];
                    int pc = corner[e.ca][e.priv_a];
                    corner[e.cb][e.priv_b] = roll ? (pc ^ 1) : pc;
                }
                bool ok = true;
                for (const CheckEdge& e : other) {
                    if (corner[e.ca][e.slot_a1] != corner[e.cb][e.slot_b1] ||
                        corner[e.ca][e.slot_a2] != corner[e.cb][e.slot_b2]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok)
                    continue;
                int cov = 0;
                for (int c = 0; c < n; ++c) {
                    int f = 0;
                    for (int s = 0; s < 3; ++s) {
                        int e = corner[c][s];
                        if (e & 1)
                            f |= 4 >> (e >> 1);
                    }
                    cov |= 1 << f;
                }
                best = std::max(best, std::popcount(unsigned(cov)));
            }
        }
        if (best == 8)
            break;
    }
    bool all_faces = best == 8;

    SolveResult sm = solve(p, SolveMode::Maximize);
    SolveResult sa = solve(p, SolveMode::AllFaces);
    bool agree = (sm.best == best) && (sa.witness.has_value() == all_faces);
    return agree;
}

std::vector<FoldMap> enumerate_maps(const Polyiamond& p, int faces_covered)
{
    Occurrences o = occurrences(p);
    int no = int(o.occs.size());
    assert(no <= 24 && "enumerate_maps is meant for small shapes");

    // occurrence permutations induced by the congruence stabilizer
    std::vector<std::vector<int>> occ_perms;
    {
        const auto& cells = p.cells();
        auto cell_index = [&](TriCell c) {
            auto it = std::lower_bound(cells.begin(), cells.end(), c);
            assert(it != cells.end() && *it == c);
            return int(it - cells.begin());
        };
        for (const Isometry& h : congruence_stabilizer(p)) {
            std::vector<int> perm(no);
            for (int i = 0; i < no; ++i) {
                auto [ci, slot] = o.occs[i].incidences.front();
                TriCell img_cell = h(cells[ci]);
                VertexId img_v = h(cell_vertices(cells[ci])[slot]);
                int cj = cell_index(img_cell);
                auto vs = cell_vertices(cells[cj]);
                int sj = -1;
                for (int s = 0; s < 3; ++s)
                    if (vs[s] == img_v)
                        sj = s;
                assert(sj >= 0);
                perm[i] = o.of_cell[cj][sj];
            }
            occ_perms.push_back(std::move(perm));
        }
    }

    // all 48 octahedron symmetries as signed axis permutations
    static const int perms3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    struct Sym {
        const int* perm;
        int flips;
    };
    std::vector<Sym> syms;
    for (const auto& pm : perms3)
        for (int f = 0; f < 8; ++f)
            syms.push_back({pm, f});

    auto apply_sym = [](const Sym& g, Corner c) {
        Corner r;
        r.axis = std::uint8_t(g.perm[c.axis]);
        r.sign = c.sign * (((g.flips >> c.axis) & 1) ? -1 : +1);
        return r;
    };

    std::map<std::string, FoldMap> reps;
    std::vector<Corner> m(no);
    for (const auto& axis_of_color : perms3) {
        for (long bits = 0; bits < (1L << no); ++bits) {
            int covered = 0;
            for (int i = 0; i < no; ++i)
                m[i] = Corner{std::uint8_t(axis_of_color[o.occs[i].color]),
                              ((bits >> i) & 1) ? -1 : +1};
            for (int c = 0; c < p.size(); ++c)
                covered |= 1 << face_of_cell(p, o, m, c);
            if (std::popcount(unsigned(covered)) != faces_covered)
                continue;
            // canonical orbit key under (octahedron symmetry) x (congruence)
            std::string bestk;
            for (const Sym& g : syms) {
                for (const auto& perm : occ_perms) {
                    std::string k(no, 0);
                    for (int i = 0; i < no; ++i) {
                        Corner c = apply_sym(g, m[perm[i]]);
                        k[i] = char('a' + c.axis * 2 + (c.sign < 0));
                    }
                    if (bestk.empty() || k < bestk)
                        bestk = k;
                }
            }
            if (!reps.count(bestk))
                reps[bestk] = m;
        }
    }
    std::vector<FoldMap> out;
    for (auto& [k, v] : reps)
        out.push_back(std::move(v));
    return out;
}

// --- serialization -------------------------------------------------------

std::string fold_map_to_json(const FoldMap& m)
{
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < m.size(); ++i)
        out << (i ? "," : "") << '"' << i << "\":\"" << corner_label(m[i]) << '"';
    out << '}';
    return out.str();
}

FoldMap fold_map_from_json(const std::string& text, int n_occurrences)
{
    auto j = nlohmann::json::parse(text);
    if (!j.is_object())
        throw invalid_fold_map("fold map JSON must be an object");
    FoldMap m(n_occurrences);
    std::vector<char> seen(n_occurrences, 0);
    for (auto& [key, val] : j.items()) {
        int id = std::stoi(key);
        if (id < 0 || id >= n_occurrences)
            throw invalid_fold_map("occurrence id " + key + " out of range");
        auto c = parse_corner(val.get<std::string>());
        if (!c)
            throw invalid_fold_map("bad corner label '" + val.get<std::string>() + "'");
        m[id] = *c;
        seen[id] = 1;
    }
    for (int i = 0; i < n_occurrences; ++i)
        if (!seen[i])
            throw invalid_fold_map("occurrence " + std::to_string(i) + " unassigned");
    return m;
}

std::string coverage_to_json(const CoverageVector& v)
{
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < 8; ++i)
        out << (i ? "," : "") << v[i];
    out << ']';
    return out.str();
}

} // namespace octa
