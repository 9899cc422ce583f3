#include "knotnum/serialize.hpp"

#include <json.hpp>

namespace knotnum {

std::string replaced_text(const std::vector<KnotExpr>& replaced) {
    std::string s;
    for (const auto& k : replaced) {
        if (!s.empty())
            s += ',';
        s += k.text();
    }
    return s;
}

std::string table_tsv(const ClassificationTable& table) {
    std::string out = "position\tknot\treplaced\n";
    for (const auto& [pos, k] : table.assignment()) {
        out += std::to_string(pos);
        out += '\t';
        out += k.text();
        out += '\t';
        out += replaced_text(table.replaced_at(pos));
        out += '\n';
    }
    return out;
}

std::string table_json(const ClassificationTable& table) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [pos, k] : table.assignment()) {
        nlohmann::ordered_json o;
        o["position"] = pos;
        o["knot"] = k.text();
        const auto r = table.replaced_at(pos);
        if (r.empty())
            o["replaced"] = nullptr;
        else
            o["replaced"] = replaced_text(r);
        o["step"] = pos < 2 ? 1 : step_of(pos).value();
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::string numbers_json(const std::vector<std::uint64_t>& values) {
    return nlohmann::json(values).dump();
}

} // namespace knotnum
