#include "octa/isometry.hpp"

#include <cassert>

namespace octa {

TriCell Isometry::operator()(TriCell c) const
{
    auto vs = cell_vertices(c);
    return cell_from_vertices({(*this)(vs[0]), (*this)(vs[1]), (*this)(vs[2])});
}

Isometry Isometry::then(const Isometry& g) const
{
    Isometry r;
    r.m00 = g.m00 * m00 + g.m01 * m10;
    r.m01 = g.m00 * m01 + g.m01 * m11;
    r.m10 = g.m10 * m00 + g.m11 * m10;
    r.m11 = g.m10 * m01 + g.m11 * m11;
    r.tp = g.m00 * tp + g.m01 * tq + g.tp;
    r.tq = g.m10 * tp + g.m11 * tq + g.tq;
    return r;
}

Isometry Isometry::inverse() const
{
    int det = m00 * m11 - m01 * m10;
    assert(det == 1 || det == -1);
    Isometry r;
    r.m00 = m11 * det;
    r.m01 = -m01 * det;
    r.m10 = -m10 * det;
    r.m11 = m00 * det;
    r.tp = -(r.m00 * tp + r.m01 * tq);
    r.tq = -(r.m10 * tp + r.m11 * tq);
    return r;
}

const std::array<Isometry, 12>& point_group()
{
    static const std::array<Isometry, 12> g = [] {
        std::array<Isometry, 12> a{};
        Isometry rot60{0, -1, 1, 1, 0, 0};  // (p,q) -> (-q, p+q)
        Isometry refl{1, 1, 0, -1, 0, 0};   // mirror across the p-axis
        Isometry r;                         // identity
        for (int k = 0; k < 6; ++k) {
            a[k] = r;
            a[6 + k] = refl.then(r); // r after refl
            r = r.then(rot60);
        }
        return a;
    }();
    return g;
}

} // namespace octa
