#pragma once

#include "octa/planar.hpp"
#include "octa/poly.hpp"

#include <functional>
#include <vector>

namespace octa {

// One enumeration level: canonical, slit-free, pairwise non-congruent shapes.
struct Frontier {
    int level = 1;
    std::vector<Polyiamond> shapes; // sorted by poly_key
};

Frontier frontier_seed();

// All canonical shapes obtained by attaching one triangle to any member;
// deduplicated.  An optional predicate discards candidates (the P-free
// filter); discarding is containment-monotone, so pruned shapes never
// reappear.  Honors OCTAFOLD_THREADS for worker parallelism; the result is
// identical regardless of worker count.
Frontier grow(const Frontier& f,
              const std::function<bool(const Polyiamond&)>& keep = nullptr);

// Census of unrestricted polyiamonds for n = 1..max_n.
std::vector<long> census_counts(int max_n);

// The number of shapes per size that triangle-contain none of the filter
// shapes; returned for n = 2..max_n.
std::vector<long> pfree_counts(int max_n, const std::vector<Polyiamond>& filters);

// Growth with hull closure: all convex shapes reachable from one triangle by
// adding a cell and re-hulling, pruned at shapes containing a member of
// `stoppers`; also returns the inclusion-wise maximal survivors.
struct ConvexCFree {
    std::vector<Polyiamond> all;
    std::vector<Polyiamond> maximal;
};
ConvexCFree convex_cfree(const std::vector<Polyiamond>& stoppers);

// All convex polyiamonds with exactly n cells, canonical.
std::vector<Polyiamond> convex_shapes_of_size(int n);

// Intersections of three width-9 strips in the three lattice directions over
// all relative placements; pairwise non-congruent results plus the maximum
// size.
struct StripBound {
    std::vector<Polyiamond> shapes;
    int max_size = 0;
};
StripBound strip_bound();

} // namespace octa
