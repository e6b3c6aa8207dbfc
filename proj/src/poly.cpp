#include "octa/poly.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

namespace octa {

Polyiamond::Polyiamond(std::vector<TriCell> cells, std::vector<CellPair> slits)
    : cells_(std::move(cells)), slits_(std::move(slits))
{
    if (cells_.empty())
        throw poly_error("polyiamond must contain at least one triangle");
    std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
        throw poly_error("duplicate cell");

    for (auto& s : slits_)
        s = make_pair_sorted(s.first, s.second);
    std::sort(slits_.begin(), slits_.end());
    slits_.erase(std::unique(slits_.begin(), slits_.end()), slits_.end());
    for (const auto& [a, b] : slits_) {
        if (!cells_adjacent(a, b))
            throw poly_error("slit between non-adjacent cells");
        if (!has_cell(a) || !has_cell(b))
            throw poly_error("slit references an absent cell");
    }

    // glue graph must be connected
    std::vector<int> stack{0};
    std::vector<char> seen(cells_.size(), 0);
    seen[0] = 1;
    int reached = 1;
    auto index_of = [&](TriCell c) -> int {
        auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
        if (it == cells_.end() || *it != c)
            return -1;
        return int(it - cells_.begin());
    };
    while (!stack.empty()) {
        TriCell c = cells_[stack.back()];
        stack.pop_back();
        for (TriCell n : cell_neighbors(c)) {
            int j = index_of(n);
            if (j >= 0 && !seen[j] && !is_slit(c, n)) {
                seen[j] = 1;
                ++reached;
                stack.push_back(j);
            }
        }
    }
    if (reached != int(cells_.size()))
        throw poly_error("glue graph is disconnected");
}

bool Polyiamond::has_cell(TriCell c) const
{
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

bool Polyiamond::is_slit(TriCell a, TriCell b) const
{
    return std::binary_search(slits_.begin(), slits_.end(), make_pair_sorted(a, b));
}

bool Polyiamond::is_glued(TriCell a, TriCell b) const
{
    return cells_adjacent(a, b) && has_cell(a) && has_cell(b) && !is_slit(a, b);
}

std::vector<CellPair> Polyiamond::glue_edges() const
{
    std::vector<CellPair> out;
    for (TriCell c : cells_)
        for (TriCell n : cell_neighbors(c))
            if (c < n && has_cell(n) && !is_slit(c, n))
                out.push_back({c, n});
    return out;
}

std::vector<CellPair> Polyiamond::shared_edges() const
{
    std::vector<CellPair> out;
    for (TriCell c : cells_)
        for (TriCell n : cell_neighbors(c))
            if (c < n && has_cell(n))
                out.push_back({c, n});
    return out;
}

Polyiamond Polyiamond::translated(int dp, int dq) const
{
    return transformed(translation(dp, dq));
}

Polyiamond Polyiamond::transformed(const Isometry& g) const
{
    std::vector<TriCell> cs;
    cs.reserve(cells_.size());
    for (TriCell c : cells_)
        cs.push_back(g(c));
    std::vector<CellPair> sl;
    sl.reserve(slits_.size());
    for (const auto& [a, b] : slits_)
        sl.push_back(make_pair_sorted(g(a), g(b)));
    return Polyiamond(std::move(cs), std::move(sl));
}

Polyiamond Polyiamond::sealed() const
{
    return Polyiamond(cells_);
}

static Polyiamond normalized(const Polyiamond& p)
{
    int mx = p.cells()[0].x, my = p.cells()[0].y;
    for (TriCell c : p.cells()) {
        mx = std::min(mx, c.x);
        my = std::min(my, c.y);
    }
    return p.translated(-mx, -my);
}

Polyiamond canonical_form(const Polyiamond& p)
{
    const Polyiamond* best = nullptr;
    std::vector<Polyiamond> images;
    images.reserve(12);
    for (const Isometry& g : point_group())
        images.push_back(normalized(p.transformed(g)));
    for (const auto& q : images)
        if (!best || q < *best)
            best = &q;
    return *best;
}

std::string poly_key(const Polyiamond& p)
{
    std::string k;
    k.reserve(p.cells().size() * 9 + p.slits().size() * 18 + 1);
    auto put = [&k](int v) {
        k.push_back(char((v >> 8) & 0xff));
        k.push_back(char(v & 0xff));
    };
    for (TriCell c : p.cells()) {
        put(c.x + 1024);
        put(c.y + 1024);
        k.push_back(char('0' + int(c.orient)));
    }
    k.push_back('|');
    for (const auto& [a, b] : p.slits()) {
        put(a.x + 1024);
        put(a.y + 1024);
        k.push_back(char('0' + int(a.orient)));
        put(b.x + 1024);
        put(b.y + 1024);
        k.push_back(char('0' + int(b.orient)));
    }
    return k;
}

std::vector<Isometry> congruence_stabilizer(const Polyiamond& p)
{
    std::vector<Isometry> out;
    Polyiamond base = normalized(p);
    for (const Isometry& g : point_group()) {
        Polyiamond img = normalized(p.transformed(g));
        if (img == base) {
            // recover the exact translation taking p to itself
            int mx = 1 << 28, my = 1 << 28, bx = 1 << 28, by = 1 << 28;
            for (TriCell c : p.cells()) {
                bx = std::min(bx, c.x);
                by = std::min(by, c.y);
            }
            Polyiamond moved = p.transformed(g);
            for (TriCell c : moved.cells()) {
                mx = std::min(mx, c.x);
                my = std::min(my, c.y);
            }
            Isometry full = g.then(translation(bx - mx, by - my));
            out.push_back(full);
        }
    }
    return out;
}

// --- text format --------------------------------------------------------

static Orient parse_orient(const std::string& tok, int line)
{
    if (tok == "U")
        return Orient::Up;
    if (tok == "D")
        return Orient::Down;
    throw poly_error("line " + std::to_string(line) + ": bad orientation '" + tok +
                     "' (want U or D)");
}

Polyiamond parse_poly(std::istream& in)
{
    std::vector<TriCell> cells;
    std::vector<CellPair> slits;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#')
            continue;
        if (tag == "T") {
            int x, y;
            std::string o;
            if (!(ls >> x >> y >> o))
                throw poly_error("line " + std::to_string(lineno) + ": bad cell record");
            cells.push_back({x, y, parse_orient(o, lineno)});
        } else if (tag == "S") {
            int x1, y1, x2, y2;
            std::string o1, o2;
            if (!(ls >> x1 >> y1 >> o1 >> x2 >> y2 >> o2))
                throw poly_error("line " + std::to_string(lineno) + ": bad slit record");
            slits.push_back(make_pair_sorted({x1, y1, parse_orient(o1, lineno)},
                                             {x2, y2, parse_orient(o2, lineno)}));
        } else {
            throw poly_error("line " + std::to_string(lineno) + ": unknown record '" + tag + "'");
        }
    }
    if (cells.empty())
        throw poly_error("empty polyiamond");
    // re-check duplicates here so the error carries file context
    auto sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw poly_error("duplicate cell record");
    return Polyiamond(std::move(cells), std::move(slits));
}

Polyiamond parse_poly_string(const std::string& text)
{
    std::istringstream in(text);
    return parse_poly(in);
}

Polyiamond load_poly_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw poly_error("cannot open '" + path + "'");
    return parse_poly(in);
}

std::string to_poly_string(const Polyiamond& p)
{
    std::ostringstream out;
    for (TriCell c : p.cells())
        out << "T " << c.x << ' ' << c.y << ' ' << (is_up(c) ? 'U' : 'D') << '\n';
    for (const auto& [a, b] : p.slits())
        out << "S " << a.x << ' ' << a.y << ' ' << (is_up(a) ? 'U' : 'D') << ' ' << b.x << ' '
            << b.y << ' ' << (is_up(b) ? 'U' : 'D') << '\n';
    return out.str();
}

} // namespace octa
