#pragma once

#include "octa/cell.hpp"

#include <array>

namespace octa {

// Lattice isometry: integer-linear point-group part plus a translation.
// The point group has 12 elements (6 rotations x optional reflection);
// rotation by 60 degrees swaps cell orientations.
struct Isometry {
    // vertex action: (p,q) -> (m00*p + m01*q + tp, m10*p + m11*q + tq)
    int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    int tp = 0, tq = 0;

    VertexId operator()(VertexId v) const
    {
        return {m00 * v.p + m01 * v.q + tp, m10 * v.p + m11 * v.q + tq};
    }
    TriCell operator()(TriCell c) const;

    Isometry then(const Isometry& g) const; // g after *this
    Isometry inverse() const;
};

// The 12 point-group elements (identity first, determinant +1 first).
const std::array<Isometry, 12>& point_group();

inline Isometry translation(int dp, int dq)
{
    return Isometry{1, 0, 0, 1, dp, dq};
}

} // namespace octa
