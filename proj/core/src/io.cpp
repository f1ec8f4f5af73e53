#include "ranklevel/io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ranklevel {

using nlohmann::json;

YoungDiagram parse_diagram(const std::string& text, int rows, int level) {
    std::vector<int> parts;
    if (!text.empty()) {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("bad diagram part: " + tok);
            parts.push_back(v);
        }
    }
    return {std::move(parts), rows, level};
}

WeightSystem parse_weight_system(const std::string& json_text, int rows, int level) {
    json j = json::parse(json_text);
    if (j.is_object()) {
        rows = j.at("r").get<int>();
        level = j.at("l").get<int>();
        const json& arr = j.at("diagrams");
        if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(arr.size()))
            throw std::invalid_argument("weight system n does not match diagrams");
        WeightSystem w(rows, level);
        for (const auto& e : arr) w.push_back(parse_diagram(e.get<std::string>(), rows, level));
        return w;
    }
    if (!j.is_array()) throw std::invalid_argument("weight system must be an array or object");
    WeightSystem w(rows, level);
    for (const auto& e : j) w.push_back(parse_diagram(e.get<std::string>(), rows, level));
    return w;
}

std::string weight_system_to_json(const WeightSystem& w) {
    json j;
    j["r"] = w.rows();
    j["l"] = w.level();
    j["n"] = w.points();
    json arr = json::array();
    for (const auto& d : w.diagrams()) arr.push_back(d.to_text());
    j["diagrams"] = std::move(arr);
    return j.dump();
}

std::string instance_to_json(const DualityInstance& inst) {
    json j;
    j["r"] = inst.r;
    j["l"] = inst.l;
    j["g"] = inst.g;
    j["d"] = inst.d;
    j["dd"] = inst.dd;
    j["weights"] = json::parse(weight_system_to_json(inst.weights));
    return j.dump();
}

DualityInstance parse_instance(const std::string& json_text) {
    json j = json::parse(json_text);
    WeightSystem w = parse_weight_system(j.at("weights").dump(), j.at("r").get<int>(),
                                         j.at("l").get<int>());
    return {j.at("r").get<int>(), j.at("l").get<int>(), j.at("g").get<int>(),
            j.at("d").get<long long>(), j.at("dd").get<long long>(), std::move(w)};
}

std::string plan_to_json(const NormalizationPlan& plan) {
    json j;
    j["original_points"] = plan.original_points;
    j["added_points"] = plan.added_points;
    j["r_rotations"] = plan.r_rotations;
    j["l_rotations"] = plan.l_rotations;
    j["twist"] = plan.twist;
    return j.dump();
}

NormalizationPlan parse_plan(const std::string& json_text) {
    json j = json::parse(json_text);
    NormalizationPlan p;
    p.original_points = j.at("original_points").get<int>();
    p.added_points = j.at("added_points").get<int>();
    p.r_rotations = j.at("r_rotations").get<std::vector<long long>>();
    p.l_rotations = j.at("l_rotations").get<std::vector<long long>>();
    p.twist = j.at("twist").get<long long>();
    return p;
}

}  // namespace ranklevel
