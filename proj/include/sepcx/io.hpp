#pragma once

// JSON exchange format for complexes:
//   { "n": int, "relation": "ws" | "ss" | null,
//     "vertices": [subset strings], "facets": [[vertex indices]] }
// "vertices" is the whole vertex table of the complex, so subcomplexes keep
// the indices of the complex they were cut from.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sepcx/complex.hpp"
#include "sepcx/homology.hpp"
#include "sepcx/subset.hpp"

namespace sepcx {

struct ComplexDocument {
    std::optional<int> n;
    std::optional<Relation> relation;
    Complex complex;
};

inline nlohmann::ordered_json to_json(const ComplexDocument& doc)
{
    nlohmann::ordered_json out;
    out["n"] = doc.n ? nlohmann::ordered_json(*doc.n) : nlohmann::ordered_json(nullptr);
    out["relation"] = doc.relation ? nlohmann::ordered_json(to_string(*doc.relation)) : nlohmann::ordered_json(nullptr);
    out["vertices"] = doc.complex.labels();
    auto facets = nlohmann::ordered_json::array();
    for (const auto& f : doc.complex.facets())
        facets.push_back(f);
    out["facets"] = std::move(facets);
    return out;
}

/// Parses and validates a complex document. Vertex strings must be subsets of
/// [n] when n is given; facets are normalized to their maximal faces.
inline ComplexDocument complex_from_json(const nlohmann::json& j)
{
    auto fail = [](const std::string& why) { throw InvalidArgument("complex JSON: " + why); };
    if (!j.is_object())
        fail("top level must be an object");
    for (const char* key : {"vertices", "facets"})
        if (!j.contains(key) || !j.at(key).is_array())
            fail(std::string("missing array '") + key + "'");

    ComplexDocument doc;
    if (j.contains("n") && !j.at("n").is_null()) {
        if (!j.at("n").is_number_integer())
            fail("'n' must be an integer or null");
        doc.n = j.at("n").get<int>();
    }
    if (j.contains("relation") && !j.at("relation").is_null()) {
        if (!j.at("relation").is_string())
            fail("'relation' must be \"ws\", \"ss\" or null");
        doc.relation = parse_relation(j.at("relation").get<std::string>());
    }

    std::vector<std::string> labels;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string())
            fail("vertex labels must be strings");
        labels.push_back(v.get<std::string>());
    }
    if (doc.n) {
        const GroundSize gn(*doc.n);
        for (auto& label : labels)
            label = to_string(parse_subset(gn, label));
    }
    {
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail("duplicate vertex label");
    }

    std::vector<Face> facets;
    for (const auto& f : j.at("facets")) {
        if (!f.is_array())
            fail("each facet must be an array of vertex indices");
        Face face;
        for (const auto& v : f) {
            if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
                fail("vertex indices must be non-negative integers");
            face.push_back(v.get<Vertex>());
        }
        facets.push_back(std::move(face));
    }
    doc.complex = Complex(std::move(labels), std::move(facets));
    return doc;
}

inline ComplexDocument read_complex(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
    }
    return complex_from_json(j);
}

inline void write_complex(const std::string& path, const ComplexDocument& doc)
{
    std::ofstream out(path);
    if (!out)
        throw InvalidArgument("cannot write '" + path + "'");
    out << to_json(doc).dump(1) << '\n';
}

inline nlohmann::ordered_json homology_to_json(const std::vector<HomologyGroup>& groups)
{
    auto out = nlohmann::ordered_json::array();
    for (std::size_t d = 0; d < groups.size(); ++d) {
        nlohmann::ordered_json g;
        g["dim"] = d;
        g["rank"] = groups[d].rank;
        auto torsion = nlohmann::ordered_json::array();
        for (const auto& t : groups[d].torsion)
            torsion.push_back(t.str());
        g["torsion"] = std::move(torsion);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace sepcx
