#include "intres/json_io.hpp"

#include <fstream>
#include <sstream>

namespace intres {

Json poset_to_json(const Poset& p) {
    Json doc;
    doc["elements"] = p.labels();
    Json rels = Json::array();
    for (auto [a, b] : p.hasse()) rels.push_back(Json::array({p.label(a), p.label(b)}));
    doc["relations"] = rels;
    return doc;
}

Poset poset_from_json(const Json& doc) {
    if (!doc.is_object()) throw SchemaError("poset document must be an object");
    if (!doc.contains("elements") || !doc["elements"].is_array())
        throw SchemaError("poset document needs an 'elements' array");
    std::vector<std::string> labels;
    for (const auto& e : doc["elements"]) {
        if (!e.is_string()) throw SchemaError("poset elements must be strings");
        labels.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    if (doc.contains("relations")) {
        if (!doc["relations"].is_array()) throw SchemaError("'relations' must be an array");
        for (const auto& r : doc["relations"]) {
            if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
                throw SchemaError("each relation must be a [from, to] pair of labels");
            pairs.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
        }
    }
    for (const auto& [key, value] : doc.items())
        if (key != "elements" && key != "relations")
            throw SchemaError("unknown poset field '" + key + "'");
    return poset_from_relations(labels, pairs);
}

static std::string edge_key(const Poset& p, int a, int b) {
    return p.label(a) + "->" + p.label(b);
}

Json module_to_json(const PersModule& m) {
    Json doc;
    doc["poset"] = poset_to_json(m.host());
    doc["p"] = m.field();
    Json dims = Json::object();
    for (int x = 0; x < m.host().size(); ++x) dims[m.host().label(x)] = m.dim(x);
    doc["dims"] = dims;
    Json maps = Json::object();
    for (std::size_t e = 0; e < m.host().hasse().size(); ++e) {
        auto [a, b] = m.host().hasse()[e];
        const Matrix& mat = m.edge_map(static_cast<int>(e));
        if (mat.rows() == 0 || mat.cols() == 0 || mat.is_zero()) continue;
        Json rows = Json::array();
        for (int i = 0; i < mat.rows(); ++i) {
            Json row = Json::array();
            for (int j = 0; j < mat.cols(); ++j) row.push_back(mat.at(i, j));
            rows.push_back(row);
        }
        maps[edge_key(m.host(), a, b)] = rows;
    }
    doc["maps"] = maps;
    return doc;
}

PersModule module_from_json(const Json& doc, const std::string& base_dir,
                            std::optional<Scalar> default_field) {
    if (!doc.is_object()) throw SchemaError("module document must be an object");
    if (!doc.contains("poset")) throw SchemaError("module document needs a 'poset'");
    Poset host;
    if (doc["poset"].is_string())
        host = poset_from_json(load_json_file(base_dir + "/" + doc["poset"].get<std::string>()));
    else
        host = poset_from_json(doc["poset"]);

    Scalar p = default_field.value_or(2);
    if (doc.contains("p")) {
        if (!doc["p"].is_number_unsigned()) throw SchemaError("'p' must be a positive integer");
        p = doc["p"].get<Scalar>();
    }
    if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");

    std::vector<int> dims(host.size(), 0);
    if (doc.contains("dims")) {
        if (!doc["dims"].is_object()) throw SchemaError("'dims' must be an object");
        for (const auto& [label, value] : doc["dims"].items()) {
            int x = host.index_of(label);
            if (!value.is_number_unsigned())
                throw SchemaError("dims." + label + " must be a nonnegative integer");
            dims[x] = value.get<int>();
        }
    }
    std::vector<Matrix> maps;
    for (auto [a, b] : host.hasse()) maps.emplace_back(dims[b], dims[a], p);
    if (doc.contains("maps")) {
        if (!doc["maps"].is_object()) throw SchemaError("'maps' must be an object");
        for (const auto& [key, value] : doc["maps"].items()) {
            auto arrow = key.find("->");
            if (arrow == std::string::npos)
                throw SchemaError("maps key '" + key + "' is not of the form 'a->b'");
            int a = host.index_of(key.substr(0, arrow));
            int b = host.index_of(key.substr(arrow + 2));
            int e = host.hasse_edge_index(a, b);
            if (e < 0)
                throw SchemaError("maps key '" + key + "' is not a Hasse edge of the poset");
            if (!value.is_array())
                throw SchemaError("maps." + key + " must be an array of rows");
            if (static_cast<int>(value.size()) != dims[b])
                throw SchemaError("maps." + key + ": expected " + std::to_string(dims[b]) +
                                  " rows, got " + std::to_string(value.size()));
            Matrix m(dims[b], dims[a], p);
            for (int i = 0; i < dims[b]; ++i) {
                if (!value[i].is_array() || static_cast<int>(value[i].size()) != dims[a])
                    throw SchemaError("maps." + key + " row " + std::to_string(i) + ": expected " +
                                      std::to_string(dims[a]) + " entries");
                for (int j = 0; j < dims[a]; ++j) {
                    if (!value[i][j].is_number_integer() && !value[i][j].is_number_unsigned())
                        throw SchemaError("maps." + key + " entry (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") must be an integer");
                    long long raw = value[i][j].get<long long>();
                    long long red = ((raw % static_cast<long long>(p)) + p) % p;
                    m.set(i, j, static_cast<Scalar>(red));
                }
            }
            maps[e] = std::move(m);
        }
    }
    for (const auto& [key, value] : doc.items())
        if (key != "poset" && key != "p" && key != "dims" && key != "maps")
            throw SchemaError("unknown module field '" + key + "'");

    PersModule mod(std::move(host), p, std::move(dims), std::move(maps));
    CommutativityReport report = validate(mod);
    if (!report.ok) throw ValidationError(report.message);
    return mod;
}

std::string interval_key(const Poset& host, const Interval& I) {
    std::string key;
    for (std::size_t i = 0; i < I.members.size(); ++i) {
        if (i) key += ",";
        key += host.label(I.members[i]);
    }
    return key;
}

Json multiset_to_json(const Poset& host, const IntervalMultiset& ms) {
    Json out = Json::object();
    for (const auto& [I, mult] : ms.items) out[interval_key(host, I)] = mult;
    return out;
}

Json morphism_blocks_to_json(const Poset& host, const Morphism& f) {
    Json out = Json::object();
    for (int x = 0; x < host.size(); ++x) {
        const Matrix& m = f.block(x);
        if (m.rows() == 0 || m.cols() == 0) continue;
        Json rows = Json::array();
        for (int i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
            rows.push_back(row);
        }
        out[host.label(x)] = rows;
    }
    return out;
}

Json resolution_to_json(const Resolution& res) {
    const Poset& host = res.target.host();
    Json doc;
    doc["length"] = res.length();
    Json terms = Json::array();
    for (const auto& t : res.terms) terms.push_back(multiset_to_json(host, t));
    doc["terms"] = terms;
    Json maps = Json::array();
    for (const auto& f : res.maps) maps.push_back(morphism_blocks_to_json(host, f));
    doc["maps"] = maps;
    doc["reduce_support"] = res.reduced_support;
    doc["hom_solves"] = res.hom_solves;
    return doc;
}

Json cover_to_json(const Cover& cover) {
    const Poset& host = cover.target.host();
    Json doc;
    doc["summands"] = multiset_to_json(host, cover.source.multiset());
    doc["map"] = morphism_blocks_to_json(host, cover.map);
    return doc;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("parse error in '" + path + "': " + e.what());
    }
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

} // namespace intres
