#pragma once

#include "octa/poly.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace octa {

// Octahedron corner: a signed coordinate axis.  The six corners are +-X,
// +-Y, +-Z; antipodal(c) flips the sign.
struct Corner {
    std::uint8_t axis = 0; // 0=X, 1=Y, 2=Z
    int sign = +1;
    auto operator<=>(const Corner&) const = default;
};

inline Corner antipodal(Corner c) { return {c.axis, -c.sign}; }

std::string corner_label(Corner c);            // "+X", "-Y", ...
std::optional<Corner> parse_corner(const std::string& s);

// Octahedron face as a sign triple over the axes.  Index order:
// +++ ++- +-+ +-- -++ -+- --+ --- (a '-' sign sets the axis bit).
using FaceIdx = int;
inline FaceIdx face_index(int sx, int sy, int sz)
{
    return (sx < 0 ? 4 : 0) | (sy < 0 ? 2 : 0) | (sz < 0 ? 1 : 0);
}
inline FaceIdx face_flip_axis(FaceIdx f, int axis) { return f ^ (4 >> axis); }
inline FaceIdx face_opposite(FaceIdx f) { return f ^ 7; }
inline bool faces_adjacent(FaceIdx a, FaceIdx b)
{
    int d = a ^ b;
    return d == 1 || d == 2 || d == 4;
}
std::string face_label(FaceIdx f); // "+++", "++-", ...

// One vertex of the polyiamond graph: an equivalence class of (cell, corner)
// incidences at a lattice vertex, merged across glued edges.  Slits split
// vertices into several occurrences.
struct VertexOccurrence {
    VertexId vertex;
    int color = 0;
    std::vector<std::pair<int, int>> incidences; // (cell index, vertex index 0..2)
};

struct Occurrences {
    std::vector<VertexOccurrence> occs; // sorted by least incidence
    // occurrence id per (cell, vertex-slot)
    std::vector<std::array<int, 3>> of_cell;
};

Occurrences occurrences(const Polyiamond& p);

// Assignment of a corner to every vertex occurrence.  A valid map sends each
// 3-coloring class to a constant axis; the induced face of a cell is the
// sign triple of its three corners.
using FoldMap = std::vector<Corner>;

using CoverageVector = std::array<int, 8>;

struct invalid_fold_map : poly_error {
    using poly_error::poly_error;
};

// Checks the fold-map invariants and returns the per-face coverage counts.
// Throws invalid_fold_map naming the offending occurrence or cell.
CoverageVector validate(const Polyiamond& p, const FoldMap& m);

FaceIdx face_of_cell(const Polyiamond& p, const Occurrences& o, const FoldMap& m, int cell);

enum class SolveMode { AllFaces, Maximize };

struct SolveResult {
    int best = 0;                  // number of distinct faces covered
    std::optional<FoldMap> witness; // present iff AllFaces succeeded, or for Maximize
};

// Exact search over sign assignments to vertex occurrences (the color ->
// axis assignment is fixed; axis permutations are octahedron rotations).
// AllFaces: returns a witness covering all 8 faces or none.
// Maximize: returns the maximum number of distinct covered faces.
SolveResult solve(const Polyiamond& p, SolveMode mode);

inline bool foldable(const Polyiamond& p)
{
    return solve(p, SolveMode::AllFaces).witness.has_value();
}

// Independently formulated solver: seed one cell with one of 48 placements,
// then choose roll / flat-fold per glue edge and check cycle consistency.
// Returns true iff it agrees with solve() on both modes; a disagreement is
// a bug sentinel.
bool cross_check(const Polyiamond& p);

// All fold maps covering exactly `faces_covered` distinct faces, grouped
// into orbits under octahedron symmetries (48) combined with congruence
// symmetries of p; one representative per orbit.
std::vector<FoldMap> enumerate_maps(const Polyiamond& p, int faces_covered);

// --- serialization ------------------------------------------------------
std::string fold_map_to_json(const FoldMap& m);
FoldMap fold_map_from_json(const std::string& text, int n_occurrences);
std::string coverage_to_json(const CoverageVector& v);

} // namespace octa
