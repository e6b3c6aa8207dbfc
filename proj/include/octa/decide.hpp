#pragma once

#include "octa/fold.hpp"
#include "octa/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace octa {

// Decision rules, in gate order.  Rules other than Oracle come from the
// structural characterizations; the oracle is the exact fallback.
enum class Rule { Size15, HoleThm, ConvexThm, Width10, Net, ConvexSubshape, Oracle };

std::string rule_name(Rule r);

struct GateRecord {
    std::string gate;
    bool fired = false;          // did this gate settle the answer
    std::string detail;          // sub-result, e.g. hole list or width triple
    std::optional<bool> verdict; // answer if fired
};

struct Decision {
    bool foldable = false;
    Rule rule = Rule::Oracle;
    std::optional<FoldMap> witness;
    std::string note;
    std::vector<GateRecord> trace; // filled by explain()
};

// Theorem-driven pipeline; structural gates answer "not foldable" only for
// slit-free inputs (slits can enable foldability), positive gates are sound
// for slitted inputs because sealing cannot make folding easier.
Decision decide(const Polyiamond& p);

// Same verdict, but records every gate evaluated with its sub-result.
Decision explain(const Polyiamond& p);

std::string decision_to_json(const Decision& d, bool with_trace);

} // namespace octa
