#include "octa/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace octa {

namespace {

struct Resource {
    const char* name;
    const char* text;
};

const Resource kResources[] = {
#include "catalog_data.inc"
    {nullptr, nullptr},
};

const std::string& resource(const std::string& name)
{
    static const std::map<std::string, std::string> files = [] {
        std::map<std::string, std::string> m;
        for (const Resource* r = kResources; r->name; ++r)
            m[r->name] = r->text;
        return m;
    }();
    auto it = files.find(name);
    if (it == files.end())
        throw unknown_name("missing catalog resource '" + name + "'");
    return it->second;
}

std::vector<CatalogEntry> load_entries()
{
    auto j = nlohmann::json::parse(resource("manifest.json"));
    std::vector<CatalogEntry> out;
    for (const auto& e : j.at("entries")) {
        CatalogEntry ce{.name = e.at("name").get<std::string>(),
                        .aliases = {},
                        .source = e.value("source", ""),
                        .poly = parse_poly_string(resource(e.at("file").get<std::string>())),
                        .expect_foldable = {},
                        .expect_convex = {},
                        .expect_maxcover = {},
                        .expect_positive_holes = {},
                        .expect_size = e.at("size").get<int>()};
        if (e.contains("aliases"))
            for (const auto& a : e.at("aliases"))
                ce.aliases.push_back(a.get<std::string>());
        if (e.contains("foldable"))
            ce.expect_foldable = e.at("foldable").get<bool>();
        if (e.contains("convex"))
            ce.expect_convex = e.at("convex").get<bool>();
        if (e.contains("maxcover"))
            ce.expect_maxcover = e.at("maxcover").get<int>();
        if (e.contains("positive_holes"))
            ce.expect_positive_holes = e.at("positive_holes").get<int>();
        out.push_back(std::move(ce));
    }
    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries()
{
    static const std::vector<CatalogEntry> entries = load_entries();
    return entries;
}

const CatalogEntry& catalog(const std::string& name)
{
    for (const CatalogEntry& e : catalog_entries()) {
        if (e.name == name)
            return e;
        for (const std::string& a : e.aliases)
            if (a == name)
                return e;
    }
    throw unknown_name("unknown catalog name '" + name + "'");
}

bool catalog_has(const std::string& name)
{
    for (const CatalogEntry& e : catalog_entries()) {
        if (e.name == name)
            return true;
        for (const std::string& a : e.aliases)
            if (a == name)
                return true;
    }
    return false;
}

std::vector<Polyiamond> catalog_nets()
{
    std::vector<Polyiamond> out;
    for (int i = 1; i <= 11; ++i)
        out.push_back(catalog("N" + std::to_string(i)).poly);
    return out;
}

std::vector<Polyiamond> catalog_convex_foldable()
{
    std::vector<Polyiamond> out;
    for (int i = 1; i <= 5; ++i)
        out.push_back(catalog("C" + std::to_string(i)).poly);
    return out;
}

std::vector<Polyiamond> catalog_pfree_filters()
{
    return {catalog("Pminus").poly, catalog("PX").poly, catalog("PU").poly,
            catalog("PZ").poly, catalog("PL").poly};
}

} // namespace octa
