#pragma once

#include "octa/fold.hpp"
#include "octa/poly.hpp"

#include <array>

namespace octa {

// Requested covering numbers per face label f1..f8 (all >= 1).  Labels are
// fixed sign triples: f1=+++, f2=-++, f3=--+, f4=+-+, f5=+--, f6=++-,
// f7=-+-, f8=---, so that opposite pairs are {f1,f8},{f2,f5},{f3,f6},{f4,f7}.
struct CoverageSpec {
    std::array<int, 8> m{1, 1, 1, 1, 1, 1, 1, 1};
};

// face index (sign-triple order) of each label f1..f8
constexpr std::array<int, 8> kLabelFace{0, 4, 6, 2, 3, 1, 5, 7};

struct BuildResult {
    Polyiamond poly;
    FoldMap certificate;
    // face index that received the count of label f_i; for the slit-free
    // builder this realizes an octahedron symmetry, for the slit builder it
    // is the identity on labels.
    std::array<int, 8> face_of_label;
};

// Net with one flat-folding arm per face, arms separated by slit edges;
// coverage of face f_i is exactly m_i.
BuildResult build_with_slits(const CoverageSpec& spec);

// Slit-free and hole-free construction; coverage equals the spec up to the
// returned octahedron symmetry (face_of_label).
BuildResult build_slitfree(const CoverageSpec& spec);

} // namespace octa
