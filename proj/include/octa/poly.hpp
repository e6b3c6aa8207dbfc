#pragma once

#include "octa/cell.hpp"
#include "octa/isometry.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace octa {

struct poly_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using CellPair = std::pair<TriCell, TriCell>; // normalized: first < second

inline CellPair make_pair_sorted(TriCell a, TriCell b)
{
    return a < b ? CellPair{a, b} : CellPair{b, a};
}

// A polyiamond: a set of triangles plus the set of shared sides that are NOT
// glued (slits).  Values are immutable after construction; every operation
// returns a fresh value.
class Polyiamond {
public:
    // Validates: cells unique and nonempty, every slit joins two adjacent
    // present cells, and the glue graph is connected.  Throws poly_error.
    Polyiamond(std::vector<TriCell> cells, std::vector<CellPair> slits = {});

    const std::vector<TriCell>& cells() const { return cells_; }
    const std::vector<CellPair>& slits() const { return slits_; }
    int size() const { return int(cells_.size()); }
    bool has_slits() const { return !slits_.empty(); }

    bool has_cell(TriCell c) const;
    bool is_slit(TriCell a, TriCell b) const;
    // adjacent, both present, and not a slit
    bool is_glued(TriCell a, TriCell b) const;

    // All glued adjacent pairs (each once, normalized).
    std::vector<CellPair> glue_edges() const;
    // All adjacent pairs including slits.
    std::vector<CellPair> shared_edges() const;

    Polyiamond translated(int dp, int dq) const;
    Polyiamond transformed(const Isometry& g) const;
    // All slit edges glued back.
    Polyiamond sealed() const;

    auto operator<=>(const Polyiamond&) const = default;

private:
    std::vector<TriCell> cells_; // sorted
    std::vector<CellPair> slits_; // sorted, normalized
};

// Lexicographically least representative over the 12 point-group images,
// each translated so the minimal cell coordinates are zero.  Constant on
// congruence classes and idempotent.
Polyiamond canonical_form(const Polyiamond& p);

// Compact key usable for hashing/dedup; equal iff the polyiamonds are equal.
std::string poly_key(const Polyiamond& p);

// Point-group stabilizer: all g with g(P) congruent-equal to P after
// renormalization (includes the identity).
std::vector<Isometry> congruence_stabilizer(const Polyiamond& p);

// --- .poly text format ------------------------------------------------
// one record per line:  "T x y U|D" cell, "S x1 y1 o1 x2 y2 o2" slit,
// "#" comment.  See README for details.
Polyiamond parse_poly(std::istream& in);
Polyiamond parse_poly_string(const std::string& text);
Polyiamond load_poly_file(const std::string& path);
std::string to_poly_string(const Polyiamond& p);

} // namespace octa
