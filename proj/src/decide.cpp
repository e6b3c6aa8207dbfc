#include "octa/decide.hpp"

#include "octa/catalog.hpp"
#include "octa/planar.hpp"

#include <json.hpp>

#include <sstream>

namespace octa {

std::string rule_name(Rule r)
{
    switch (r) {
    case Rule::Size15: return "SIZE15";
    case Rule::HoleThm: return "HOLE_THM";
    case Rule::ConvexThm: return "CONVEX_THM";
    case Rule::Width10: return "WIDTH10";
    case Rule::Net: return "NET";
    case Rule::ConvexSubshape: return "CONVEX_SUBSHAPE";
    case Rule::Oracle: return "ORACLE";
    }
    return "?";
}

namespace {

Decision run_gates(const Polyiamond& p, bool want_trace)
{
    Decision d;
    auto note = [&](const std::string& gate, bool fired, const std::string& detail,
                    std::optional<bool> verdict = {}) {
        if (want_trace)
            d.trace.push_back(GateRecord{gate, fired, detail, verdict});
    };
    auto settle = [&](Rule r, bool fold, const std::string& detail) {
        d.rule = r;
        d.foldable = fold;
        d.note = detail;
        note(rule_name(r), true, detail, fold);
        return d;
    };
    const bool slitted = p.has_slits();

    // 1. every polyiamond of size >= 15 folds; sealing keeps this sound
    //    for slitted inputs
    if (p.size() >= 15)
        return settle(Rule::Size15, true, "size " + std::to_string(p.size()));
    note("SIZE15", false, "size " + std::to_string(p.size()));

    // 2. a positive-area hole decides foldability against the one exception
    {
        auto hs = holes(p);
        int positive = 0;
        for (const auto& h : hs)
            positive += h.kind == HoleKind::PositiveArea;
        std::string detail = std::to_string(positive) + " positive-area hole(s), " +
                             std::to_string(int(hs.size()) - positive) + " slit hole(s)";
        if (positive > 0) {
            bool is_O = poly_key(canonical_form(p.sealed())) ==
                        poly_key(catalog("O").poly);
            if (!slitted)
                return settle(Rule::HoleThm, !is_O,
                              is_O ? "congruent to the ring O" : detail);
            if (!is_O) // sealed shape has the hole and is not O, so it folds
                return settle(Rule::HoleThm, true, detail + ", sealed shape not O");
            note("HOLE_THM", false, detail + "; negative direction skipped (slits)");
        } else {
            note("HOLE_THM", false, detail);
        }
    }

    // 3. convex shapes are characterized by the five-shape containment test
    if (is_convex(p)) {
        for (int i = 1; i <= 5; ++i)
            if (contains(p, catalog("C" + std::to_string(i)).poly,
                         Containment::TrianglesOnly))
                return settle(Rule::ConvexThm, true, "convex, contains C" + std::to_string(i));
        return settle(Rule::ConvexThm, false, "convex, contains no member of C");
    }
    note("CONVEX_THM", false, slitted ? "not convex (slits)" : "not convex");

    // 4. width at least 10 reduces onto the foldable strip
    {
        int w0 = zigzag_reduce(p, 0).size();
        int w1 = zigzag_reduce(p, 1).size();
        int w2 = zigzag_reduce(p, 2).size();
        std::string detail = "widths " + std::to_string(w0) + "/" + std::to_string(w1) + "/" +
                             std::to_string(w2);
        if (std::max({w0, w1, w2}) >= 10)
            return settle(Rule::Width10, true, detail);
        note("WIDTH10", false, detail);
    }

    // 5. a contained net folds
    for (int i = 1; i <= 11; ++i)
        if (contains(p, catalog("N" + std::to_string(i)).poly, Containment::TrianglesOnly))
            return settle(Rule::Net, true, "contains net N" + std::to_string(i));
    note("NET", false, "contains no net");

    // 6. a contained convex foldable shape folds
    for (int i = 1; i <= 5; ++i)
        if (contains(p, catalog("C" + std::to_string(i)).poly, Containment::TrianglesOnly))
            return settle(Rule::ConvexSubshape, true, "contains C" + std::to_string(i));
    note("CONVEX_SUBSHAPE", false, "contains no member of C");

    // 7. exact oracle
    SolveResult r = solve(p, SolveMode::AllFaces);
    d.rule = Rule::Oracle;
    d.foldable = r.witness.has_value();
    d.witness = r.witness;
    d.note = d.foldable ? "oracle witness found" : "oracle exhausted all fold maps";
    note("ORACLE", true, d.note, d.foldable);
    return d;
}

} // namespace

Decision decide(const Polyiamond& p) { return run_gates(p, false); }

Decision explain(const Polyiamond& p) { return run_gates(p, true); }

std::string decision_to_json(const Decision& d, bool with_trace)
{
    nlohmann::ordered_json j;
    j["foldable"] = d.foldable;
    j["rule"] = rule_name(d.rule);
    if (d.witness)
        j["witness"] = nlohmann::ordered_json::parse(fold_map_to_json(*d.witness));
    if (!d.note.empty())
        j["note"] = d.note;
    if (with_trace) {
        auto arr = nlohmann::ordered_json::array();
        for (const GateRecord& g : d.trace) {
            nlohmann::ordered_json e;
            e["gate"] = g.gate;
            e["fired"] = g.fired;
            e["detail"] = g.detail;
            if (g.verdict)
                e["foldable"] = *g.verdict;
            arr.push_back(e);
        }
        j["trace"] = arr;
    }
    return j.dump(2);
}

} // namespace octa
