#include "bihom/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bihom {

namespace {

using json = nlohmann::ordered_json;

Rational parse_value(const json& node, const std::string& where) {
    if (!node.is_string())
        throw ParseError(where + ": scalar must be a fraction string, not " +
                         std::string(node.type_name()));
    const std::string text = node.get<std::string>();
    auto value = parse_fraction(text);
    if (!value) throw ParseError(where + ": bad fraction literal \"" + text + "\"");
    return *value;
}

Mat parse_table(const json& node, int dim, const std::string& where) {
    if (!node.is_array() || static_cast<int>(node.size()) != dim)
        throw ValidationError(where + ": expected " + std::to_string(dim) + " rows");
    Mat m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const json& row = node[i];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw ValidationError(where + ": row " + std::to_string(i) + " must have " +
                                  std::to_string(dim) + " entries");
        for (int j = 0; j < dim; ++j)
            m.at(i, j) = parse_value(row[j], where + "[" + std::to_string(i) + "][" +
                                                 std::to_string(j) + "]");
    }
    return m;
}

json table_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_fraction_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

AlgebraKind kind_from_string(const std::string& s) {
    if (s == "associative") return AlgebraKind::associative_candidate;
    if (s == "lie") return AlgebraKind::lie_candidate;
    if (s == "unclassified") return AlgebraKind::unclassified;
    throw ValidationError("kind_hint: unknown tag \"" + s + "\"");
}

}  // namespace

std::string kind_to_string(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::associative_candidate: return "associative";
        case AlgebraKind::lie_candidate: return "lie";
        case AlgebraKind::unclassified: return "unclassified";
    }
    return "unclassified";
}

BiHomSuperalgebra parse_algebra_string(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document root must be an object");

    const std::string name = doc.value("name", std::string("algebra"));
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
        throw ParseError("dim: missing or not an integer");
    const int dim = doc["dim"].get<int>();
    if (dim < 0) throw ValidationError("dim: must be nonnegative");

    if (!doc.contains("parities") || !doc["parities"].is_array() ||
        static_cast<int>(doc["parities"].size()) != dim)
        throw ValidationError("parities: expected " + std::to_string(dim) + " bits");
    std::vector<Parity> parities;
    for (const auto& p : doc["parities"]) {
        if (!p.is_number_integer() || (p.get<int>() != 0 && p.get<int>() != 1))
            throw ValidationError("parities: entries must be 0 or 1");
        parities.emplace_back(p.get<int>());
    }
    const GradedSpace space(std::move(parities));

    if (!doc.contains("alpha") || !doc.contains("beta"))
        throw ParseError("alpha/beta tables are required");
    const Mat alpha_table = parse_table(doc["alpha"], dim, "alpha");
    const Mat beta_table = parse_table(doc["beta"], dim, "beta");
    if (!check_even(alpha_table, space)) throw ValidationError("alpha: cross-parity entry");
    if (!check_even(beta_table, space)) throw ValidationError("beta: cross-parity entry");

    std::vector<BilinearMap::Entry> entries;
    if (doc.contains("product")) {
        if (!doc["product"].is_array()) throw ParseError("product: expected an array");
        for (const auto& e : doc["product"]) {
            if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("k") ||
                !e.contains("value"))
                throw ParseError("product: entries need fields i, j, k, value");
            const int i = e["i"].get<int>();
            const int j = e["j"].get<int>();
            const int k = e["k"].get<int>();
            if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
                throw ValidationError("product: index out of range in entry (" +
                                      std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ")");
            entries.push_back({i, j, k, parse_value(e["value"], "product entry value")});
        }
    }
    BilinearMap product = BilinearMap::zero(space);
    try {
        product = BilinearMap::from_entries(space, entries);
    } catch (const StructuralError& e) {
        throw ValidationError(e.what());
    }

    AlgebraKind kind = AlgebraKind::unclassified;
    if (doc.contains("kind_hint")) kind = kind_from_string(doc["kind_hint"].get<std::string>());

    return BiHomSuperalgebra(name, space, std::move(product), EvenMap(space, alpha_table),
                             EvenMap(space, beta_table), kind);
}

BiHomSuperalgebra parse_algebra_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_algebra_string(buffer.str());
}

std::string serialize_algebra_string(const BiHomSuperalgebra& a) {
    json doc;
    doc["name"] = a.name();
    doc["dim"] = a.dim();
    json parities = json::array();
    for (int i = 0; i < a.dim(); ++i) parities.push_back(a.parity(i).bit());
    doc["parities"] = std::move(parities);
    doc["alpha"] = table_to_json(a.alpha().entries());
    doc["beta"] = table_to_json(a.beta().entries());
    json product = json::array();
    for (const auto& e : a.product().nonzero_entries()) {
        json entry;
        entry["i"] = e.i;
        entry["j"] = e.j;
        entry["k"] = e.k;
        entry["value"] = to_fraction_string(e.value);
        product.push_back(std::move(entry));
    }
    doc["product"] = std::move(product);
    if (a.kind() != AlgebraKind::unclassified) doc["kind_hint"] = kind_to_string(a.kind());
    return doc.dump(2) + "\n";
}

void serialize_algebra_file(const BiHomSuperalgebra& a, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << serialize_algebra_string(a);
    if (!out) throw ParseError("write failed: " + path);
}

EvenMap parse_map_file(const std::string& path, const GradedSpace& space) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    json doc;
    try {
        doc = json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries"))
        throw ParseError(path + ": map document needs an entries table");
    const Mat table = parse_table(doc["entries"], space.dim(), "entries");
    if (!check_even(table, space))
        throw ValidationError(path + ": map has a cross-parity entry");
    return EvenMap(space, table);
}

}  // namespace bihom
