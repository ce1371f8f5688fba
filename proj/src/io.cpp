#include "shc/io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace shc {

nlohmann::json tableau_to_json(const ShiftedTableau& t) {
    nlohmann::json j;
    j["shape"] = t.shape().parts();
    j["rows"] = t.rows();
    return j;
}

ShiftedTableau tableau_from_json(const nlohmann::json& j) {
    require(j.is_object() && j.contains("rows"), "tableau-json",
            "tableau JSON must be an object with a \"rows\" array");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j.at("rows")) {
        std::vector<int> r;
        for (const auto& v : row) {
            require(v.is_number_integer(), "tableau-json", "tableau entries must be integers");
            r.push_back(v.get<int>());
        }
        rows.push_back(std::move(r));
    }
    std::vector<int> parts;
    if (j.contains("shape")) {
        for (const auto& v : j.at("shape")) parts.push_back(v.get<int>());
    } else {
        for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    }
    Shape shape(parts);
    return ShiftedTableau(std::move(shape), std::move(rows));
}

std::string multichain_to_text(const Multichain& c) {
    std::string out;
    for (const Path& p : c.paths()) {
        out += p.empty() ? "-" : p.word();
        out += '\n';
    }
    return out;
}

Multichain multichain_from_text(const std::string& text) {
    std::vector<Path> paths;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty()) continue;
        paths.push_back(line == "-" ? Path{} : Path::parse(line));
    }
    require(!paths.empty(), "multichain-text", "multichain input has no paths");
    return Multichain(std::move(paths));
}

}  // namespace shc
