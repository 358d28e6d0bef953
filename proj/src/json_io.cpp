#include "tableau_lab/json_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tableau_lab {

using nlohmann::json;

namespace {

int positive_int(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 1)
        throw ParseError(std::string(what) + " must be a positive integer");
    return j.get<int>();
}

std::vector<std::vector<int>> columns_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("\"columns\" must be an array of arrays");
    std::vector<std::vector<int>> cols;
    cols.reserve(j.size());
    for (const auto& col : j) {
        if (!col.is_array()) throw ParseError("\"columns\" must be an array of arrays");
        std::vector<int> entries;
        entries.reserve(col.size());
        for (const auto& v : col) entries.push_back(positive_int(v, "tableau entry"));
        cols.push_back(std::move(entries));
    }
    return cols;
}

}  // namespace

json to_json(const Tableau& t) {
    json cols = json::array();
    for (const auto& c : t.columns()) cols.push_back(c);
    return json{{"columns", std::move(cols)}, {"width", t.width()}};
}

json to_json(const Diagram& d) {
    return json{{"columns", d.columns()}};
}

json to_json(const Permutation& p) {
    return json(p.values());
}

Tableau tableau_from_json(const json& j) {
    if (!j.is_object() || !j.contains("columns"))
        throw ParseError("tableau JSON must be an object with a \"columns\" field");
    auto cols = columns_from_json(j.at("columns"));
    Tableau t;
    try {
        t = Tableau(std::move(cols));
    } catch (const StructureError& e) {
        throw ParseError(std::string("malformed tableau: ") + e.what());
    }
    if (j.contains("width")) {
        const json& wj = j.at("width");
        if (!wj.is_number_integer() || wj.get<long long>() < 0)
            throw ParseError("\"width\" must be a non-negative integer");
        if (wj.get<int>() < t.width())
            throw ParseError("\"width\" is smaller than the number of non-empty columns");
    }
    return t;
}

Diagram diagram_from_json(const json& j) {
    if (!j.is_object() || !j.contains("columns"))
        throw ParseError("diagram JSON must be an object with a \"columns\" field");
    const json& cols = j.at("columns");
    if (!cols.is_array()) throw ParseError("\"columns\" must be an array");
    std::vector<int> lens;
    lens.reserve(cols.size());
    for (const auto& v : cols) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw ParseError("column lengths must be non-negative integers");
        lens.push_back(v.get<int>());
    }
    try {
        return Diagram(std::move(lens));
    } catch (const StructureError& e) {
        throw ParseError(std::string("malformed diagram: ") + e.what());
    }
}

Permutation permutation_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("permutation JSON must be an array");
    std::vector<int> vals;
    vals.reserve(j.size());
    for (const auto& v : j) vals.push_back(positive_int(v, "permutation value"));
    try {
        return Permutation(std::move(vals));
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
}

Permutation permutation_from_string(const std::string& text) {
    std::istringstream is(text);
    std::vector<int> vals;
    int v = 0;
    while (is >> v) vals.push_back(v);
    if (!is.eof()) throw ParseError("permutation must be space-separated integers");
    try {
        return Permutation(std::move(vals));
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
}

Tableau parse_tableau_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    Tableau t = tableau_from_json(j);
    if (classify_tableau(t) == Classification::Invalid)
        throw ParseError(path + ": not a semistandard tableau: " + describe_violation(t));
    return t;
}

std::string canonical_dump(const json& j) { return j.dump(); }

}  // namespace tableau_lab
