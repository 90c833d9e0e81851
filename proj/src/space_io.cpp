#include "tccert/space_io.hpp"

#include <fstream>

namespace tccert {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path + ": missing key '" + key + "'");
    return *it;
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError(path + ": expected a string");
    return j.get<std::string>();
}

bool get_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) throw SchemaError(path + ": expected a boolean");
    return j.get<bool>();
}

AssertionSet parse_assertions(const json& j, const std::string& path) {
    AssertionSet a;
    if (j.is_null()) return a;
    if (!j.is_object()) throw SchemaError(path + ": expected an object");
    for (const auto& [key, val] : j.items()) {
        std::string p = path + "." + key;
        if (key == "two_aspherical")
            a.two_aspherical = get_bool(val, p);
        else if (key == "pi1_no_Z2")
            a.pi1_no_Z2 = get_bool(val, p);
        else if (key == "pi1_torsion_free")
            a.pi1_torsion_free = get_bool(val, p);
        else if (key == "aspherical_space")
            a.aspherical_space = get_bool(val, p);
        else if (key == "atoroidal_classes") {
            if (!val.is_array()) throw SchemaError(p + ": expected an array");
            for (std::size_t i = 0; i < val.size(); ++i)
                a.atoroidal_classes.push_back(
                    get_string(val[i], p + "[" + std::to_string(i) + "]"));
        } else if (key == "notes") {
            if (!val.is_object()) throw SchemaError(p + ": expected an object");
            for (const auto& [flag, note] : val.items())
                a.notes[flag] = get_string(note, p + "." + flag);
        } else {
            throw SchemaError(p + ": unrecognized assertion key");
        }
    }
    return a;
}

std::vector<MarkedClassSpec> parse_marked(const json& j, const std::string& path) {
    std::vector<MarkedClassSpec> out;
    if (j.is_null()) return out;
    if (!j.is_array()) throw SchemaError(path + ": expected an array");
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "[" + std::to_string(i) + "]";
        MarkedClassSpec spec;
        spec.name = get_string(require(j[i], "name", p), p + ".name");
        if (j[i].contains("degree")) {
            if (!j[i]["degree"].is_number_integer())
                throw SchemaError(p + ".degree: expected an integer");
            spec.degree = j[i]["degree"].get<int>();
        }
        if (j[i].contains("coordinates")) {
            const json& c = j[i]["coordinates"];
            if (c.is_string()) {
                if (c.get<std::string>() != "generator")
                    throw SchemaError(p + ".coordinates: expected \"generator\" or an array");
            } else if (c.is_array()) {
                for (std::size_t k = 0; k < c.size(); ++k)
                    spec.coordinates.push_back(
                        get_string(c[k], p + ".coordinates[" + std::to_string(k) + "]"));
            } else {
                throw SchemaError(p + ".coordinates: expected \"generator\" or an array");
            }
        }
        out.push_back(std::move(spec));
    }
    return out;
}

Space parse_space_node(const json& doc, const std::string& default_name,
                       const std::string& path) {
    const json& sp = require(doc, "space", path);
    std::string name = doc.contains("name")
                           ? get_string(doc["name"], path + ".name")
                           : default_name;
    std::string type = get_string(require(sp, "type", path + ".space"), path + ".space.type");
    AssertionSet a = parse_assertions(doc.contains("assertions") ? doc["assertions"] : json(),
                                      path + ".assertions");
    std::vector<MarkedClassSpec> marked = parse_marked(
        doc.contains("marked_classes") ? doc["marked_classes"] : json(),
        path + ".marked_classes");

    try {
        if (type == "presentation") {
            GroupPresentation p;
            const json& gens = require(sp, "generators", path + ".space");
            if (!gens.is_array()) throw SchemaError(path + ".space.generators: expected array");
            for (std::size_t i = 0; i < gens.size(); ++i)
                p.generators.push_back(get_string(
                    gens[i], path + ".space.generators[" + std::to_string(i) + "]"));
            const json& rels = require(sp, "relators", path + ".space");
            if (!rels.is_array()) throw SchemaError(path + ".space.relators: expected array");
            for (std::size_t i = 0; i < rels.size(); ++i)
                p.relators.push_back(get_string(
                    rels[i], path + ".space.relators[" + std::to_string(i) + "]"));
            return Space::presentation(name, std::move(p), std::move(a), std::move(marked));
        }
        if (type == "simplicial") {
            const json& nv = require(sp, "vertices", path + ".space");
            if (!nv.is_number_integer())
                throw SchemaError(path + ".space.vertices: expected an integer");
            const json& facets = require(sp, "facets", path + ".space");
            if (!facets.is_array()) throw SchemaError(path + ".space.facets: expected array");
            std::vector<std::vector<int>> fs;
            for (std::size_t i = 0; i < facets.size(); ++i) {
                std::string fp = path + ".space.facets[" + std::to_string(i) + "]";
                if (!facets[i].is_array()) throw SchemaError(fp + ": expected array");
                std::vector<int> facet;
                for (std::size_t k = 0; k < facets[i].size(); ++k) {
                    if (!facets[i][k].is_number_integer())
                        throw SchemaError(fp + "[" + std::to_string(k) +
                                          "]: expected an integer vertex");
                    facet.push_back(facets[i][k].get<int>());
                }
                fs.push_back(std::move(facet));
            }
            return Space::simplicial(name, SimplicialComplex(nv.get<int>(), fs), std::move(a),
                                     std::move(marked));
        }
        if (type == "bundled") {
            std::string which =
                get_string(require(sp, "name", path + ".space"), path + ".space.name");
            return Space::simplicial(name, bundled_triangulation(which), std::move(a),
                                     std::move(marked));
        }
        if (type == "product") {
            const json& factors = require(sp, "factors", path + ".space");
            if (!factors.is_array() || factors.empty())
                throw SchemaError(path + ".space.factors: expected a nonempty array");
            std::vector<Space> fs;
            for (std::size_t i = 0; i < factors.size(); ++i)
                fs.push_back(parse_space_node(
                    factors[i], name + "_factor" + std::to_string(i + 1),
                    path + ".space.factors[" + std::to_string(i) + "]"));
            return Space::product(name, std::move(fs));
        }
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception& e) {
        throw SchemaError(path + ": " + e.what());
    }
    throw SchemaError(path + ".space.type: unrecognized type '" + type + "'");
}

}  // namespace

SpaceDocument parse_space_document(const json& doc) {
    const json& v = require(doc, "schema_version", "$");
    if (!v.is_number_integer() || v.get<int>() != 1)
        throw SchemaError("$.schema_version: unsupported version");
    FieldSpec f = FieldSpec::rationals();
    if (doc.contains("field")) {
        const json& c = require(doc["field"], "characteristic", "$.field");
        if (!c.is_number_unsigned() && !c.is_number_integer())
            throw SchemaError("$.field.characteristic: expected a non-negative integer");
        try {
            f = FieldSpec(c.get<std::uint64_t>());
        } catch (const std::exception& e) {
            throw SchemaError(std::string("$.field.characteristic: ") + e.what());
        }
    }
    Space s = parse_space_node(doc, "space", "$");
    return {s.name(), std::move(s), f};
}

SpaceDocument load_space_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open space document: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
    return parse_space_document(doc);
}

}  // namespace tccert
