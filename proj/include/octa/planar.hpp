#pragma once

#include "octa/poly.hpp"

#include <vector>

namespace octa {

enum class HoleKind { PositiveArea, Slit };

struct Hole {
    HoleKind kind = HoleKind::Slit;
    std::vector<TriCell> cells; // nonempty iff PositiveArea
};

// Bounded complement components that are not a single vertex.  A hole is a
// Slit iff it contains no full triangle.
std::vector<Hole> holes(const Polyiamond& p);

// Smallest convex polyiamond whose cells cover p's cells; slit-free.
Polyiamond hull(const Polyiamond& p);

bool is_convex(const Polyiamond& p);

// Fold every grid line parallel to the given axis by alternating +-180
// degrees; the image is a one-band strip along that axis.  Axis 0: lines
// q = const, axis 1: p = const, axis 2: p + q = const.
Polyiamond zigzag_reduce(const Polyiamond& p, int axis);

// Max over the three axes of the zig-zag image size.
int width(const Polyiamond& p);

enum class Containment { Full, TrianglesOnly };

// True iff some isometry maps q into p.  Full additionally requires every
// glued edge of q's image to be glued in p.
bool contains(const Polyiamond& p, const Polyiamond& q, Containment mode);

} // namespace octa
