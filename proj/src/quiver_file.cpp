#include "quivercount/quiver_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qc {

namespace {

using nlohmann::json;

std::vector<std::string> read_vertices(const json& j) {
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw QuiverParseError("'vertices' must be a non-empty array of names");
    std::vector<std::string> names;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw QuiverParseError("vertex names must be strings");
        names.push_back(v.get<std::string>());
    }
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size()) throw QuiverParseError("duplicate vertex name");
    return names;
}

int index_of(const std::vector<std::string>& names, const std::string& name,
             const std::string& what) {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    throw QuiverParseError(what + " references undeclared vertex '" + name + "'");
}

}  // namespace

QuiverJob parse_quiver_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw QuiverParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw QuiverParseError("quiver file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key != "vertices" && key != "arrows" && key != "theta" && key != "dim")
            throw QuiverParseError("unknown key '" + key + "'");
    }

    std::vector<std::string> names = read_vertices(j);

    if (!j.contains("arrows") || !j["arrows"].is_array())
        throw QuiverParseError("'arrows' must be an array of [source, target] pairs");
    std::vector<std::pair<int, int>> arrows;
    for (const auto& a : j["arrows"]) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
            throw QuiverParseError("each arrow must be a [source, target] pair of vertex names");
        arrows.emplace_back(index_of(names, a[0].get<std::string>(), "arrow"),
                            index_of(names, a[1].get<std::string>(), "arrow"));
    }

    Stability theta = Stability::zero(static_cast<int>(names.size()));
    if (j.contains("theta")) {
        if (!j["theta"].is_object()) throw QuiverParseError("'theta' must map vertices to integers");
        for (const auto& [name, value] : j["theta"].items()) {
            int idx = index_of(names, name, "theta");
            if (!value.is_number_integer()) throw QuiverParseError("theta values must be integers");
            theta.weights[static_cast<size_t>(idx)] = value.get<long long>();
        }
    }

    QuiverJob job{Quiver(names, std::move(arrows)), std::move(theta),
                  DimVector::zero(static_cast<int>(names.size())), false};

    if (j.contains("dim")) {
        if (!j["dim"].is_object()) throw QuiverParseError("'dim' must map vertices to integers");
        std::vector<int> entries(names.size(), 0);
        for (const auto& [name, value] : j["dim"].items()) {
            int idx = index_of(names, name, "dim");
            if (!value.is_number_integer() || value.get<long long>() < 0)
                throw QuiverParseError("dimension of '" + name + "' must be a nonnegative integer");
            entries[static_cast<size_t>(idx)] = value.get<int>();
        }
        job.dim = DimVector(std::move(entries));
        job.has_dim = true;
    }
    return job;
}

QuiverJob parse_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw QuiverParseError("cannot open quiver file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_quiver_text(buffer.str());
}

DimVector parse_dim_override(const std::string& spec, const Quiver& quiver) {
    std::vector<int> entries(static_cast<size_t>(quiver.vertex_count()), 0);
    std::istringstream stream(spec);
    std::string item;
    while (std::getline(stream, item, ',')) {
        size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw QuiverParseError("dimension entry '" + item + "' is not name=value");
        std::string name = item.substr(0, eq);
        int idx;
        try {
            idx = quiver.vertex_index(name);
        } catch (const std::invalid_argument& e) {
            throw QuiverParseError(e.what());
        }
        int value;
        try {
            size_t used = 0;
            value = std::stoi(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw QuiverParseError("dimension value in '" + item + "' is not an integer");
        }
        if (value < 0) throw QuiverParseError("dimension of '" + name + "' must be nonnegative");
        entries[static_cast<size_t>(idx)] = value;
    }
    return DimVector(std::move(entries));
}

}  // namespace qc
