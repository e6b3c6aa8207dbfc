#pragma once

#include "octa/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace octa {

// A named shape from the built-in catalog, shipped as embedded .poly data
// plus a manifest of expected properties.  Every expected property is
// re-verified by the test suite, so transcription slips cannot hide.
struct CatalogEntry {
    std::string name;
    std::vector<std::string> aliases;
    std::string source; // family tag, e.g. "net", "convex-foldable"
    Polyiamond poly;
    // expected properties (absent = not asserted)
    std::optional<bool> expect_foldable;
    std::optional<bool> expect_convex;
    std::optional<int> expect_maxcover;
    std::optional<int> expect_positive_holes;
    int expect_size = 0;
};

struct unknown_name : poly_error {
    using poly_error::poly_error;
};

const std::vector<CatalogEntry>& catalog_entries();

// Lookup by name or alias; throws unknown_name.
const CatalogEntry& catalog(const std::string& name);
bool catalog_has(const std::string& name);

// The eleven octahedron nets.
std::vector<Polyiamond> catalog_nets();
// The five minimal convex foldable shapes (the set the convex
// characterization tests against).
std::vector<Polyiamond> catalog_convex_foldable();
// The filter set for the P-free census: Pminus, PX, PU, PZ, PL.
std::vector<Polyiamond> catalog_pfree_filters();

} // namespace octa
