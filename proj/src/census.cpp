#include "octa/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

namespace octa {

Frontier frontier_seed()
{
    return Frontier{1, {Polyiamond({TriCell{0, 0, Orient::Up}})}};
}

static int worker_count()
{
    unsigned hw = std::thread::hardware_concurrency();
    int n = hw ? int(hw) : 1;
    if (const char* env = std::getenv("OCTAFOLD_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1)
            n = std::min(n, cap);
    }
    return std::min(n, 16);
}

Frontier grow(const Frontier& f, const std::function<bool(const Polyiamond&)>& keep)
{
    int nw = worker_count();
    if (int(f.shapes.size()) < 4 * nw)
        nw = 1;

    auto process = [&](size_t lo, size_t hi, std::map<std::string, Polyiamond>& out) {
        for (size_t i = lo; i < hi; ++i) {
            const Polyiamond& p = f.shapes[i];
            for (TriCell c : p.cells())
                for (TriCell nb : cell_neighbors(c)) {
                    if (p.has_cell(nb))
                        continue;
                    std::vector<TriCell> cells = p.cells();
                    cells.push_back(nb);
                    Polyiamond cand = canonical_form(Polyiamond(std::move(cells)));
                    std::string key = poly_key(cand);
                    if (out.count(key))
                        continue;
                    if (keep && !keep(cand))
                        continue;
                    out.emplace(std::move(key), std::move(cand));
                }
        }
    };

    std::map<std::string, Polyiamond> merged;
    if (nw == 1) {
        process(0, f.shapes.size(), merged);
    } else {
        std::vector<std::map<std::string, Polyiamond>> parts(nw);
        std::vector<std::thread> threads;
        size_t chunk = (f.shapes.size() + nw - 1) / nw;
        for (int w = 0; w < nw; ++w) {
            size_t lo = std::min(f.shapes.size(), w * chunk);
            size_t hi = std::min(f.shapes.size(), lo + chunk);
            threads.emplace_back([&, lo, hi, w] { process(lo, hi, parts[w]); });
        }
        for (auto& t : threads)
            t.join();
        for (auto& part : parts)
            merged.merge(part);
    }

    Frontier next{f.level + 1, {}};
    next.shapes.reserve(merged.size());
    for (auto& [k, p] : merged)
        next.shapes.push_back(std::move(p));
    return next;
}

std::vector<long> census_counts(int max_n)
{
    std::vector<long> counts;
    Frontier f = frontier_seed();
    counts.push_back(long(f.shapes.size()));
    for (int n = 2; n <= max_n; ++n) {
        f = grow(f);
        counts.push_back(long(f.shapes.size()));
    }
    return counts;
}

std::vector<long> pfree_counts(int max_n, const std::vector<Polyiamond>& filters)
{
    auto keep = [&filters](const Polyiamond& p) {
        for (const Polyiamond& f : filters)
            if (contains(p, f, Containment::TrianglesOnly))
                return false;
        return true;
    };
    std::vector<long> counts;
    Frontier f = frontier_seed();
    for (int n = 2; n <= max_n; ++n) {
        f = grow(f, keep);
        counts.push_back(long(f.shapes.size()));
    }
    return counts;
}

ConvexCFree convex_cfree(const std::vector<Polyiamond>& stoppers)
{
    auto blocked = [&stoppers](const Polyiamond& p) {
        for (const Polyiamond& s : stoppers)
            if (contains(p, s, Containment::TrianglesOnly))
                return true;
        return false;
    };

    std::map<std::string, Polyiamond> seen;
    Polyiamond unit = canonical_form(Polyiamond({TriCell{0, 0, Orient::Up}}));
    seen.emplace(poly_key(unit), unit);
    std::vector<Polyiamond> queue{unit};
    while (!queue.empty()) {
        Polyiamond p = std::move(queue.back());
        queue.pop_back();
        for (TriCell c : p.cells())
            for (TriCell nb : cell_neighbors(c)) {
                if (p.has_cell(nb))
                    continue;
                std::vector<TriCell> cells = p.cells();
                cells.push_back(nb);
                Polyiamond grown = canonical_form(hull(Polyiamond(std::move(cells))));
                std::string key = poly_key(grown);
                if (seen.count(key))
                    continue;
                if (blocked(grown))
                    continue;
                seen.emplace(key, grown);
                queue.push_back(std::move(grown));
            }
    }

    ConvexCFree out;
    for (auto& [k, p] : seen)
        out.all.push_back(p);
    std::sort(out.all.begin(), out.all.end(),
              [](const Polyiamond& a, const Polyiamond& b) { return a.size() > b.size(); });
    for (const Polyiamond& p : out.all) {
        bool dominated = false;
        for (const Polyiamond& m : out.maximal)
            if (contains(m, p, Containment::TrianglesOnly)) {
                dominated = true;
                break;
            }
        if (!dominated)
            out.maximal.push_back(p);
    }
    return out;
}

std::vector<Polyiamond> convex_shapes_of_size(int n)
{
    std::set<std::string> keys;
    std::vector<Polyiamond> out;
    // hexagon regions: p in [0,A], q in [0,B], p+q in [S1,S2]
    for (int A = 1; A <= n + 1; ++A)
        for (int B = 1; B <= n + 1; ++B) {
            if (A * B * 2 < n) // too small to ever hold n cells
                continue;
            for (int S1 = 0; S1 <= A + B; ++S1)
                for (int S2 = S1; S2 <= A + B; ++S2) {
                    std::vector<TriCell> cells;
                    for (int x = 0; x < A; ++x)
                        for (int y = 0; y < B; ++y)
                            for (Orient o : {Orient::Up, Orient::Down}) {
                                TriCell c{x, y, o};
                                bool ok = true;
                                for (VertexId v : cell_vertices(c))
                                    ok = ok && v.p <= A && v.q <= B && v.p + v.q >= S1 &&
                                         v.p + v.q <= S2;
                                if (ok)
                                    cells.push_back(c);
                            }
                    if (int(cells.size()) != n)
                        continue;
                    Polyiamond p = canonical_form(Polyiamond(std::move(cells)));
                    if (keys.insert(poly_key(p)).second)
                        out.push_back(std::move(p));
                }
        }
    return out;
}

namespace {

// doubled projection coordinate along strip family 0 (lines q = const)
int strip_pos0(TriCell c) { return 2 * c.x + c.y + (is_up(c) ? 0 : 1); }

} // namespace

StripBound strip_bound()
{
    Isometry rot60{0, -1, 1, 1, 0, 0};
    Isometry to0_b = rot60.inverse();                 // family 1 -> family 0
    Isometry to0_c = rot60.inverse().then(rot60.inverse()); // family 2 -> family 0

    auto pos_b = [&](TriCell c) { return strip_pos0(to0_b(c)); };
    auto pos_c = [&](TriCell c) { return strip_pos0(to0_c(c)); };

    const int W = 9; // strip width in projection cells
    // translating by (1,-2) preserves the first strip and shifts the second
    // by 3 positions, so only j mod 3 distinguishes relative configurations
    std::map<std::string, Polyiamond> dedup;
    for (int j = 0; j < 3; ++j)
        for (int k = -80; k <= 80; ++k) {
            std::vector<TriCell> cells;
            for (int y = -120; y <= 120; ++y)
                for (Orient o : {Orient::Up, Orient::Down}) {
                    int d = o == Orient::Up ? 0 : 1;
                    // strip 0: 0 <= 2x + y + d <= W-1
                    int lo = -(y + d), hi = W - 1 - y - d;
                    lo = lo >= 0 ? (lo + 1) / 2 : -((-lo) / 2);
                    hi = hi >= 0 ? hi / 2 : -((-hi + 1) / 2);
                    for (int x = lo; x <= hi; ++x) {
                        TriCell c{x, y, o};
                        int b = pos_b(c);
                        if (b < j || b >= j + W)
                            continue;
                        int cc = pos_c(c);
                        if (cc < k || cc >= k + W)
                            continue;
                        cells.push_back(c);
                    }
                }
            if (cells.empty())
                continue;
            Polyiamond p = canonical_form(Polyiamond(std::move(cells)));
            dedup.emplace(poly_key(p), std::move(p));
        }

    // only inclusion-maximal intersections matter for the containment bound
    std::vector<Polyiamond> all;
    for (auto& [key, p] : dedup)
        all.push_back(std::move(p));
    std::sort(all.begin(), all.end(),
              [](const Polyiamond& a, const Polyiamond& b) { return a.size() > b.size(); });
    StripBound out;
    for (const Polyiamond& p : all) {
        bool dominated = false;
        for (const Polyiamond& m : out.shapes)
            if (contains(m, p, Containment::TrianglesOnly)) {
                dominated = true;
                break;
            }
        if (!dominated)
            out.shapes.push_back(p);
    }
    for (const Polyiamond& p : out.shapes)
        out.max_size = std::max(out.max_size, p.size());
    return out;
}

} // namespace octa
