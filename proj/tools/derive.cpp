// Development helper: derives the shape catalog from first principles
// (exhaustive enumeration + the folding oracle) and prints .poly data.
// The checked-in catalog under data/catalog/ was produced by this tool;
// the test suite re-verifies every entry against the oracle.

#include "octa/census.hpp"
#include "octa/fold.hpp"
#include "octa/planar.hpp"
#include "octa/poly.hpp"

#include <cassert>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <map>
#include <set>
#include <functional>
#include <string>

using namespace octa;

static Polyiamond hexagon(VertexId v)
{
    std::vector<TriCell> cells{{v.p, v.q, Orient::Up},     {v.p - 1, v.q, Orient::Up},
                               {v.p, v.q - 1, Orient::Up}, {v.p - 1, v.q, Orient::Down},
                               {v.p, v.q - 1, Orient::Down}, {v.p - 1, v.q - 1, Orient::Down}};
    return Polyiamond(cells);
}

static Polyiamond merge_cells(const std::vector<Polyiamond>& ps,
                              const std::vector<TriCell>& minus = {})
{
    std::set<TriCell> cells;
    for (const auto& p : ps)
        for (TriCell c : p.cells())
            cells.insert(c);
    for (TriCell c : minus)
        cells.erase(c);
    return Polyiamond(std::vector<TriCell>(cells.begin(), cells.end()));
}

static void dump(const std::string& name, const Polyiamond& p)
{
    std::cout << "=== " << name << " (size " << p.size() << ")\n"
              << to_poly_string(canonical_form(p));
}

static void cmd_counts()
{
    auto c = census_counts(9);
    std::cout << "census n=1..9:";
    for (long v : c)
        std::cout << ' ' << v;
    std::cout << '\n';
}

static void cmd_basics()
{
    Polyiamond c6 = hexagon({1, 1});
    Polyiamond c10 = merge_cells({hexagon({1, 1}), hexagon({2, 1})});
    std::cout << "C6 size " << c6.size() << " maximize " << solve(c6, SolveMode::Maximize).best
              << " occs " << occurrences(c6).occs.size() << '\n';
    std::cout << "C10 size " << c10.size() << " maximize "
              << solve(c10, SolveMode::Maximize).best << '\n';
    std::cout << "C6 convex " << is_convex(c6) << " C10 convex " << is_convex(c10) << '\n';
    std::cout << "C6 width " << width(c6) << " C10 width " << width(c10) << '\n';
    std::cout << "C6 maps cov3 " << enumerate_maps(c6, 3).size() << " cov4 "
              << enumerate_maps(c6, 4).size() << " cov5 " << enumerate_maps(c6, 5).size() << '\n';
    dump("C6", c6);
    dump("C10", c10);

    // p = union of the three hexagons at the corners of one triangle
    Polyiamond p = merge_cells({hexagon({1, 1}), hexagon({2, 1}), hexagon({1, 2})});
    Polyiamond O = merge_cells({p}, {TriCell{1, 1, Orient::Up}});
    std::cout << "p size " << p.size() << " convex " << is_convex(p) << " foldable "
              << foldable(p) << '\n';
    std::cout << "O size " << O.size() << " holes " << holes(O).size() << " foldable "
              << foldable(O) << '\n';
    dump("p", p);
    dump("O", O);
}

static void cmd_nets()
{
    Frontier f = frontier_seed();
    for (int n = 2; n <= 8; ++n)
        f = grow(f);
    std::vector<Polyiamond> nets;
    for (const Polyiamond& p : f.shapes) {
        auto r = solve(p, SolveMode::AllFaces);
        if (r.witness) {
            auto cov = validate(p, *r.witness);
            bool ones = true;
            for (int v : cov)
                ones = ones && v == 1;
            if (ones)
                nets.push_back(p);
        }
    }
    std::cout << "nets found: " << nets.size() << '\n';
    int i = 1;
    for (const auto& n : nets)
        dump("N" + std::to_string(i++), n);
}

static void cmd_convex()
{
    // minimal convex foldable shapes, ascending size
    std::vector<Polyiamond> minimal;
    for (int n = 1; n <= 16; ++n) {
        for (const Polyiamond& p : convex_shapes_of_size(n)) {
            bool dominated = false;
            for (const Polyiamond& m : minimal)
                if (contains(p, m, Containment::TrianglesOnly)) {
                    dominated = true;
                    break;
                }
            if (dominated)
                continue;
            if (foldable(p))
                minimal.push_back(p);
        }
        std::cout << "after size " << n << ": " << minimal.size() << " minimal\n";
    }
    int i = 1;
    for (const auto& m : minimal)
        dump("Cmin" + std::to_string(i++), m);

    ConvexCFree cc = convex_cfree(minimal);
    std::cout << "C-free shapes: " << cc.all.size() << ", maximal: " << cc.maximal.size()
              << '\n';
    i = 1;
    for (const auto& m : cc.maximal) {
        std::cout << "maximal size " << m.size() << " foldable " << foldable(m)
                  << " contains C6 " << contains(m, hexagon({1, 1}), Containment::TrianglesOnly)
                  << " contains C10 "
                  << contains(m, merge_cells({hexagon({1, 1}), hexagon({2, 1})}),
                              Containment::TrianglesOnly)
                  << '\n';
        dump("Cbar" + std::to_string(i++), m);
    }
}

static void cmd_strips()
{
    StripBound sb = strip_bound();
    std::cout << "strip intersections: " << sb.shapes.size() << " max " << sb.max_size << '\n';
    for (const auto& s : sb.shapes)
        std::cout << "  size " << s.size() << '\n';
}

static void art(const Polyiamond& p)
{
    int minx = 99, maxx = -99, miny = 99, maxy = -99;
    for (TriCell c : p.cells()) {
        minx = std::min(minx, c.x);
        maxx = std::max(maxx, c.x);
        miny = std::min(miny, c.y);
        maxy = std::max(maxy, c.y);
    }
    for (int y = maxy; y >= miny; --y) {
        std::string row(std::size_t(2 * (maxx - minx + y - miny) + 4), ' ');
        for (int x = minx; x <= maxx; ++x) {
            int off = 2 * (x - minx) + (y - miny);
            if (p.has_cell({x, y, Orient::Up}))
                row[off] = 'A';
            if (p.has_cell({x, y, Orient::Down}))
                row[off + 1] = 'V';
        }
        std::cout << "    " << row << '\n';
    }
}

// Reconstruct the P-free filter set from the published census numbers: the
// 10-cell strip is forced; the remaining shapes are found by matching the
// count at every size, branching where new filter shapes must enter.
static const long kTable1[] = {1, 1, 3, 4, 10, 16, 22, 22, 16, 9, 3, 1, 0, 0}; // n=2..15

struct FilterSearch {
    Polyiamond strip10;
    std::vector<std::vector<Polyiamond>> solutions;

    static std::vector<Polyiamond> filtered(const std::vector<Polyiamond>& shapes,
                                            const std::vector<Polyiamond>& filt)
    {
        std::vector<Polyiamond> out;
        for (const auto& s : shapes) {
            bool hit = false;
            for (const auto& f : filt)
                if (contains(s, f, Containment::TrianglesOnly)) {
                    hit = true;
                    break;
                }
            if (!hit)
                out.push_back(s);
        }
        return out;
    }

    void dfs(int level, const Frontier& survivors, std::vector<Polyiamond> filt)
    {
        if (level == 14) {
            if (survivors.shapes.empty())
                solutions.push_back(filt);
            return;
        }
        Frontier next = grow(survivors);
        next.shapes = filtered(next.shapes, filt);
        long target = kTable1[next.level - 2];
        long excess = long(next.shapes.size()) - target;
        if (excess < 0)
            return;
        if (excess == 0) {
            dfs(next.level, next, std::move(filt));
            return;
        }
        // `excess` survivors must become new filter shapes at this size
        int already = int(filt.size()) - 1; // beyond the strip
        if (already + excess > 4)
            return;
        int n = int(next.shapes.size());
        std::vector<int> idx((std::size_t(excess)));
        std::function<void(int, int)> choose = [&](int pos, int from) {
            if (pos == excess) {
                std::vector<Polyiamond> f2 = filt;
                Frontier pruned{next.level, {}};
                std::vector<char> drop(std::size_t(n), 0);
                for (int i : idx) {
                    f2.push_back(next.shapes[std::size_t(i)]);
                    drop[std::size_t(i)] = 1;
                }
                for (int i = 0; i < n; ++i)
                    if (!drop[std::size_t(i)])
                        pruned.shapes.push_back(next.shapes[std::size_t(i)]);
                dfs(next.level, pruned, std::move(f2));
                return;
            }
            for (int i = from; i < n; ++i) {
                idx[std::size_t(pos)] = i;
                choose(pos + 1, i + 1);
            }
        };
        choose(0, 0);
    }
};

static void cmd_filter()
{
    FilterSearch fs{canonical_form(Polyiamond({{0, 0, Orient::Up}, {0, 0, Orient::Down},
                                               {0, 1, Orient::Up}, {0, 1, Orient::Down},
                                               {0, 2, Orient::Up}, {0, 2, Orient::Down},
                                               {0, 3, Orient::Up}, {0, 3, Orient::Down},
                                               {0, 4, Orient::Up}, {0, 4, Orient::Down}})),
                    {}};
    std::cout << "strip10 size " << fs.strip10.size() << '\n';
    fs.dfs(1, frontier_seed(), {fs.strip10});
    std::cout << "filter solutions: " << fs.solutions.size() << '\n';
    Polyiamond c10 = merge_cells({hexagon({1, 1}), hexagon({2, 1})});
    for (const auto& sol : fs.solutions) {
        std::cout << "--- solution\n";
        for (const auto& f : sol) {
            std::cout << "  size " << f.size() << " inC10 "
                      << contains(c10, f, Containment::TrianglesOnly) << '\n';
            art(f);
            std::cout << to_poly_string(f);
        }
    }
}

static void cmd_names()
{
    Polyiamond A({{0, 0, Orient::Down}, {0, 1, Orient::Up}, {0, 1, Orient::Down},
                  {1, 1, Orient::Up}, {1, 1, Orient::Down}, {1, 2, Orient::Up}});
    Polyiamond B({{0, 1, Orient::Up}, {0, 1, Orient::Down}, {0, 2, Orient::Up},
                  {1, 0, Orient::Down}, {1, 1, Orient::Up}, {1, 1, Orient::Down}});
    Polyiamond U({{0, 0, Orient::Down}, {0, 1, Orient::Up}, {0, 1, Orient::Down},
                  {0, 2, Orient::Up}, {0, 2, Orient::Down}, {1, 0, Orient::Up},
                  {1, 2, Orient::Up}});
    Polyiamond c10 = merge_cells({hexagon({1, 1}), hexagon({2, 1})});

    // claim-check: every 9-subset of C10 containing PZ contains PX or PU
    auto nine_subset_test = [&](const Polyiamond& pz, const Polyiamond& px) {
        int bad = 0;
        for (TriCell drop : c10.cells()) {
            std::vector<TriCell> cells;
            for (TriCell c : c10.cells())
                if (!(c == drop))
                    cells.push_back(c);
            Polyiamond s(cells);
            if (contains(s, pz, Containment::TrianglesOnly) &&
                !contains(s, px, Containment::TrianglesOnly) &&
                !contains(s, U, Containment::TrianglesOnly))
                ++bad;
        }
        return bad;
    };
    std::cout << "PZ=A,PX=B violations: " << nine_subset_test(A, B) << '\n';
    std::cout << "PZ=B,PX=A violations: " << nine_subset_test(B, A) << '\n';
    // PU claim-check: subsets of C10 missing one cell that contain PU but not PX
    auto pu_test = [&](const Polyiamond& px) {
        int bad = 0;
        for (TriCell drop : c10.cells()) {
            std::vector<TriCell> cells;
            for (TriCell c : c10.cells())
                if (!(c == drop))
                    cells.push_back(c);
            Polyiamond s(cells);
            if (contains(s, U, Containment::TrianglesOnly) &&
                !contains(s, px, Containment::TrianglesOnly))
                ++bad;
        }
        return bad;
    };
    std::cout << "PU-without-B in 9-subsets: " << pu_test(B) << '\n';
    std::cout << "PU-without-A in 9-subsets: " << pu_test(A) << '\n';
}

static void cmd_extras()
{
    Polyiamond p = merge_cells({hexagon({1, 1}), hexagon({2, 1}), hexagon({1, 2})});
    Polyiamond O = merge_cells({p}, {TriCell{1, 1, Orient::Up}});

    // fig 2b: smallest slit set on p that enables folding and leaves a slit hole
    {
        auto edges = p.glue_edges();
        std::cout << "p glue edges: " << edges.size() << '\n';
        bool found_hole = false, found_any = false;
        for (size_t k = 1; k <= 8 && !found_hole; ++k) {
            std::vector<size_t> idx(k);
            std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t from) {
                if (found_hole)
                    return;
                if (pos == k) {
                    std::vector<CellPair> slits;
                    for (size_t i : idx)
                        slits.push_back(edges[i]);
                    try {
                        Polyiamond cand(p.cells(), slits);
                        if (!foldable(cand))
                            return;
                        auto hs = holes(cand);
                        int pos_holes = 0, slit_holes = 0;
                        for (const auto& h : hs)
                            (h.kind == HoleKind::PositiveArea ? pos_holes : slit_holes)++;
                        if (!found_any) {
                            found_any = true;
                            std::cout << "first foldable slitting: k=" << k << " pos_holes "
                                      << pos_holes << " slit_holes " << slit_holes << '\n'
                                      << to_poly_string(cand);
                        }
                        if (pos_holes == 0 && slit_holes >= 1) {
                            found_hole = true;
                            std::cout << "fig2_slit with " << k << " slits, slit holes "
                                      << slit_holes << '\n'
                                      << to_poly_string(cand);
                        }
                    } catch (const poly_error&) {
                    }
                    return;
                }
                for (size_t i = from; i < edges.size(); ++i) {
                    idx[pos] = i;
                    rec(pos + 1, i + 1);
                }
            };
            rec(0, 0);
        }
    }

    // Pa: every one-cell extension of O keeping the hole must fold (Thm 1)
    {
        int total = 0, foldable_count = 0;
        std::optional<Polyiamond> first;
        for (TriCell c : O.cells())
            for (TriCell nb : cell_neighbors(c)) {
                if (O.has_cell(nb) || nb == TriCell{1, 1, Orient::Up})
                    continue;
                std::vector<TriCell> cells = O.cells();
                cells.push_back(nb);
                std::sort(cells.begin(), cells.end());
                cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
                if (cells.size() != std::size_t(O.size() + 1))
                    continue;
                Polyiamond cand(cells);
                ++total;
                bool f = foldable(cand);
                foldable_count += f;
                if (f && !first)
                    first = cand;
            }
        std::cout << "O one-cell extensions: " << total << " foldable " << foldable_count
                  << '\n';
        if (first)
            std::cout << "Pa:\n" << to_poly_string(canonical_form(*first));
    }

    // Pb: O plus a 3-fold symmetric triple of outside cells
    {
        auto stab = congruence_stabilizer(O);
        std::cout << "O stabilizer order " << stab.size() << '\n';
        std::optional<Polyiamond> pb;
        for (TriCell c : O.cells()) {
            for (TriCell nb : cell_neighbors(c)) {
                if (O.has_cell(nb) || nb == TriCell{1, 1, Orient::Up})
                    continue;
                std::set<TriCell> orbit;
                for (const Isometry& g : stab)
                    orbit.insert(g(nb));
                if (orbit.size() != 3)
                    continue;
                std::vector<TriCell> cells = O.cells();
                for (TriCell t : orbit)
                    cells.push_back(t);
                Polyiamond cand(cells);
                if (foldable(cand)) {
                    pb = cand;
                    break;
                }
            }
            if (pb)
                break;
        }
        if (pb)
            std::cout << "Pb size " << pb->size() << ":\n" << to_poly_string(canonical_form(*pb));
    }

    // Pc: ring of 14 around a two-cell hole
    {
        Polyiamond pc = merge_cells(
            {hexagon({1, 1}), hexagon({2, 1}), hexagon({1, 2}), hexagon({2, 2})},
            {TriCell{1, 1, Orient::Up}, TriCell{1, 1, Orient::Down}});
        auto hs = holes(pc);
        std::cout << "Pc size " << pc.size() << " holes " << hs.size() << " hole cells "
                  << (hs.empty() ? 0 : int(hs[0].cells.size())) << " foldable " << foldable(pc)
                  << '\n'
                  << to_poly_string(canonical_form(pc));
    }
}

static void cmd_netgroups()
{
    // which minimal convex foldable shapes contain which nets
    Frontier f = frontier_seed();
    for (int n = 2; n <= 8; ++n)
        f = grow(f);
    std::vector<Polyiamond> nets;
    for (const Polyiamond& p : f.shapes) {
        auto r = solve(p, SolveMode::AllFaces);
        if (r.witness) {
            auto cov = validate(p, *r.witness);
            bool ones = true;
            for (int v : cov)
                ones = ones && v == 1;
            if (ones)
                nets.push_back(p);
        }
    }
    std::vector<Polyiamond> minimal;
    for (int n = 1; n <= 16; ++n)
        for (const Polyiamond& p : convex_shapes_of_size(n)) {
            bool dominated = false;
            for (const Polyiamond& m : minimal)
                if (contains(p, m, Containment::TrianglesOnly))
                    dominated = true;
            if (!dominated && foldable(p))
                minimal.push_back(p);
        }
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::cout << "Cmin" << i + 1 << " size " << minimal[i].size() << " nets:";
        for (size_t k = 0; k < nets.size(); ++k)
            if (contains(minimal[i], nets[k], Containment::TrianglesOnly))
                std::cout << ' ' << k + 1;
        std::cout << '\n';
        art(minimal[i]);
    }
    for (size_t k = 0; k < nets.size(); ++k) {
        std::cout << "net " << k + 1 << ":\n";
        art(nets[k]);
    }
}

static void cmd_holey()
{
    Polyiamond p13 = merge_cells({hexagon({1, 1}), hexagon({2, 1}), hexagon({1, 2})});
    Polyiamond O = merge_cells({p13}, {TriCell{1, 1, Orient::Up}});
    TriCell center{1, 1, Orient::Up};
    // all shapes O + k cells (hole intact), oracle-checked
    std::set<std::string> seen;
    std::vector<Polyiamond> level{O};
    for (int k = 1; k <= 2; ++k) {
        std::vector<Polyiamond> next;
        int unfoldable = 0, total = 0;
        for (const Polyiamond& q : level)
            for (TriCell c : q.cells())
                for (TriCell nb : cell_neighbors(c)) {
                    if (q.has_cell(nb) || nb == center)
                        continue;
                    std::vector<TriCell> cells = q.cells();
                    cells.push_back(nb);
                    Polyiamond cand = canonical_form(Polyiamond(cells));
                    if (!seen.insert(poly_key(cand)).second)
                        continue;
                    next.push_back(cand);
                    ++total;
                    if (!foldable(cand)) {
                        ++unfoldable;
                        std::cout << "UNFOLDABLE O+" << k << ":\n" << to_poly_string(cand);
                    }
                }
        std::cout << "O+" << k << ": " << total << " shapes, " << unfoldable
                  << " unfoldable\n";
        level = std::move(next);
    }
}

// Regenerate data/catalog: shape files plus the manifest of expected
// properties (re-verified by the test suite).
static void cmd_freeze()
{
    namespace fs = std::filesystem;
    fs::create_directories("data/catalog");
    std::vector<std::string> manifest;
    auto write_entry = [&](const std::string& name, const std::string& file,
                           const Polyiamond& shape, const std::string& source,
                           const std::vector<std::string>& aliases,
                           const std::string& extra_props) {
        std::ofstream out("data/catalog/" + file);
        out << "# " << name << "\n" << to_poly_string(canonical_form(shape));
        std::string a = "[";
        for (size_t i = 0; i < aliases.size(); ++i)
            a += (i ? ",\"" : "\"") + aliases[i] + "\"";
        a += "]";
        manifest.push_back("    {\"name\": \"" + name + "\", \"file\": \"" + file +
                           "\", \"source\": \"" + source + "\", \"aliases\": " + a +
                           ", \"size\": " + std::to_string(shape.size()) +
                           (extra_props.empty() ? "" : ", " + extra_props) + "}");
    };

    Polyiamond c6 = hexagon({1, 1});
    Polyiamond c10 = merge_cells({hexagon({1, 1}), hexagon({2, 1})});
    write_entry("C6", "c6.poly", c6, "hexagons", {},
                "\"convex\": true, \"foldable\": false, \"maxcover\": 4");
    write_entry("C10", "c10.poly", c10, "hexagons", {},
                "\"convex\": true, \"foldable\": false, \"maxcover\": 6");

    // nets
    Frontier f = frontier_seed();
    for (int n = 2; n <= 8; ++n)
        f = grow(f);
    std::vector<Polyiamond> nets;
    for (const Polyiamond& p : f.shapes) {
        auto r = solve(p, SolveMode::AllFaces);
        if (r.witness) {
            auto cov = validate(p, *r.witness);
            bool ones = true;
            for (int v : cov)
                ones = ones && v == 1;
            if (ones)
                nets.push_back(p);
        }
    }
    assert(nets.size() == 11);
    for (size_t i = 0; i < nets.size(); ++i)
        write_entry("N" + std::to_string(i + 1), "n" + std::to_string(i + 1) + ".poly", nets[i],
                    "net", {}, "\"foldable\": true");

    // minimal convex foldable
    std::vector<Polyiamond> minimal;
    for (int n = 1; n <= 16; ++n)
        for (const Polyiamond& p : convex_shapes_of_size(n)) {
            bool dominated = false;
            for (const Polyiamond& m : minimal)
                if (contains(p, m, Containment::TrianglesOnly))
                    dominated = true;
            if (!dominated && foldable(p))
                minimal.push_back(p);
        }
    assert(minimal.size() == 5);
    Polyiamond s1 = canonical_form(hull(nets[0]));
    assert(poly_key(s1) == poly_key(canonical_form(minimal[1])));
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<std::string> aliases;
        if (i == 0)
            aliases = {"Pminus", "z"};
        if (i == 1)
            aliases = {"S1"};
        if (i == 4)
            aliases = {"S2"};
        write_entry("C" + std::to_string(i + 1), "cmin" + std::to_string(i + 1) + ".poly",
                    minimal[i], "convex-foldable", aliases,
                    "\"convex\": true, \"foldable\": true");
    }

    // maximal C-free: sizes identify s (14) and p (13); o contains a C6
    ConvexCFree cc = convex_cfree(minimal);
    assert(cc.maximal.size() == 4);
    Polyiamond* shape_s = nullptr;
    Polyiamond* shape_p = nullptr;
    Polyiamond* shape_o = nullptr;
    Polyiamond* shape_w = nullptr;
    for (auto& m : cc.maximal) {
        if (m.size() == 14)
            shape_s = &m;
        else if (m.size() == 13)
            shape_p = &m;
        else if (contains(m, c6, Containment::TrianglesOnly))
            shape_o = &m;
        else
            shape_w = &m;
    }
    assert(shape_s && shape_p && shape_o && shape_w);
    write_entry("Cbar1", "cbar1.poly", *shape_o, "convex-maximal-cfree", {"o"},
                "\"convex\": true, \"foldable\": false");
    write_entry("Cbar2", "cbar2.poly", *shape_w, "convex-maximal-cfree", {"w"},
                "\"convex\": true, \"foldable\": false");
    write_entry("Cbar3", "cbar3.poly", *shape_s, "convex-maximal-cfree", {"s"},
                "\"convex\": true, \"foldable\": false");
    write_entry("Cbar4", "cbar4.poly", *shape_p, "convex-maximal-cfree", {"p", "fig2_sealed"},
                "\"convex\": true, \"foldable\": false");

    // hole family
    Polyiamond p13 = merge_cells({hexagon({1, 1}), hexagon({2, 1}), hexagon({1, 2})});
    Polyiamond O = merge_cells({p13}, {TriCell{1, 1, Orient::Up}});
    write_entry("O", "o_ring.poly", O, "hole", {},
                "\"foldable\": false, \"positive_holes\": 1");
    {
        std::optional<Polyiamond> pa;
        for (TriCell c : O.cells()) {
            for (TriCell nb : cell_neighbors(c)) {
                if (O.has_cell(nb) || nb == TriCell{1, 1, Orient::Up})
                    continue;
                std::vector<TriCell> cells = O.cells();
                cells.push_back(nb);
                std::sort(cells.begin(), cells.end());
                cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
                if (cells.size() != std::size_t(O.size() + 1))
                    continue;
                Polyiamond cand(cells);
                if (foldable(cand)) {
                    pa = cand;
                    break;
                }
            }
            if (pa)
                break;
        }
        write_entry("Pa", "pa.poly", *pa, "hole", {},
                    "\"foldable\": true, \"positive_holes\": 1");
        auto stab = congruence_stabilizer(O);
        std::optional<Polyiamond> pb;
        for (TriCell c : O.cells()) {
            for (TriCell nb : cell_neighbors(c)) {
                if (O.has_cell(nb) || nb == TriCell{1, 1, Orient::Up})
                    continue;
                std::set<TriCell> orbit;
                for (const Isometry& g : stab)
                    orbit.insert(g(nb));
                if (orbit.size() != 3)
                    continue;
                std::vector<TriCell> cells = O.cells();
                for (TriCell t : orbit)
                    cells.push_back(t);
                Polyiamond cand(cells);
                if (foldable(cand)) {
                    pb = cand;
                    break;
                }
            }
            if (pb)
                break;
        }
        write_entry("Pb", "pb.poly", *pb, "hole", {},
                    "\"foldable\": true, \"positive_holes\": 1");
    }
    Polyiamond pc = merge_cells({hexagon({1, 1}), hexagon({2, 1}), hexagon({1, 2}),
                                 hexagon({2, 2})},
                                {TriCell{1, 1, Orient::Up}, TriCell{1, 1, Orient::Down}});
    write_entry("Pc", "pc.poly", pc, "hole", {}, "\"foldable\": true, \"positive_holes\": 1");

    // P-free filter shapes (from the census fingerprint search)
    Polyiamond PZ({{0, 0, Orient::Down}, {0, 1, Orient::Up}, {0, 1, Orient::Down},
                   {1, 1, Orient::Up}, {1, 1, Orient::Down}, {1, 2, Orient::Up}});
    Polyiamond PX({{0, 1, Orient::Up}, {0, 1, Orient::Down}, {0, 2, Orient::Up},
                   {1, 0, Orient::Down}, {1, 1, Orient::Up}, {1, 1, Orient::Down}});
    Polyiamond PL({{0, 0, Orient::Up}, {0, 0, Orient::Down}, {0, 1, Orient::Up},
                   {0, 1, Orient::Down}, {0, 2, Orient::Up}, {0, 2, Orient::Down},
                   {1, 2, Orient::Up}});
    Polyiamond PU({{0, 0, Orient::Down}, {0, 1, Orient::Up}, {0, 1, Orient::Down},
                   {0, 2, Orient::Up}, {0, 2, Orient::Down}, {1, 0, Orient::Up},
                   {1, 2, Orient::Up}});
    write_entry("PX", "px.poly", PX, "pfree-filter", {}, "\"foldable\": false");
    write_entry("PU", "pu.poly", PU, "pfree-filter", {}, "\"foldable\": false");
    write_entry("PZ", "pz.poly", PZ, "pfree-filter", {}, "\"foldable\": false");
    write_entry("PL", "pl.poly", PL, "pfree-filter", {}, "\"foldable\": false");

    // slit pair: the sealed shape is Cbar4; the slit variant folds
    Polyiamond fig2(p13.cells(),
                    {make_pair_sorted({0, 0, Orient::Down}, {1, 0, Orient::Up}),
                     make_pair_sorted({0, 1, Orient::Down}, {1, 1, Orient::Up})});
    assert(foldable(fig2));
    write_entry("fig2_slit", "fig2_slit.poly", fig2, "slit-pair", {},
                "\"foldable\": true, \"positive_holes\": 0");

    std::ofstream mout("data/catalog/manifest.json");
    mout << "{\n  \"entries\": [\n";
    for (size_t i = 0; i < manifest.size(); ++i)
        mout << manifest[i] << (i + 1 < manifest.size() ? "," : "") << '\n';
    mout << "  ]\n}\n";
    std::cout << "wrote " << manifest.size() << " catalog entries\n";
}

int main(int argc, char** argv)
{
    std::string cmd = argc > 1 ? argv[1] : "all";
    if (cmd == "counts" || cmd == "all")
        cmd_counts();
    if (cmd == "basics" || cmd == "all")
        cmd_basics();
    if (cmd == "nets" || cmd == "all")
        cmd_nets();
    if (cmd == "convex" || cmd == "all")
        cmd_convex();
    if (cmd == "strips" || cmd == "all")
        cmd_strips();
    if (cmd == "holey")
        cmd_holey();
    if (cmd == "freeze")
        cmd_freeze();
    if (cmd == "extras")
        cmd_extras();
    if (cmd == "names")
        cmd_names();
    if (cmd == "filter")
        cmd_filter();
    if (cmd == "netgroups")
        cmd_netgroups();
    return 0;
}
