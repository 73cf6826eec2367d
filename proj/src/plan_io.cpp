#include "tricover/plan_io.hpp"

#include <json.hpp>

#include <fstream>

namespace tricover {

namespace {

using json = nlohmann::ordered_json;

Rational require_rational(const json& node, const char* field) {
    if (!node.is_string()) throw PlanIoError(std::string("plan: ") + field + " must be a string");
    auto parsed = parse_rational(node.get<std::string>());
    if (!parsed) throw PlanIoError(std::string("plan: bad rational in ") + field);
    return *parsed;
}

int require_int(const json& node, const char* field) {
    if (!node.is_number_integer()) {
        throw PlanIoError(std::string("plan: ") + field + " must be an integer");
    }
    return node.get<int>();
}

}  // namespace

std::string serialize_plan(const CoveringPlan& plan) {
    json doc;
    doc["version"] = 1;
    doc["n"] = plan.n;
    doc["d"] = format_rational(plan.d);
    doc["method"] = method_name(plan.method);
    if (plan.j) doc["j"] = *plan.j;
    doc["count"] = plan.count();
    json list = json::array();
    for (const Placement& p : plan.placements) {
        json item;
        item["o"] = p.orientation == Orientation::Up ? "U" : "D";
        item["x"] = format_rational(p.anchor.x);
        item["y"] = format_rational(p.anchor.y);
        list.push_back(std::move(item));
    }
    doc["placements"] = std::move(list);
    return doc.dump(2);
}

CoveringPlan parse_plan(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw PlanIoError("plan: not a JSON object");

    if (!doc.contains("version") || require_int(doc["version"], "version") != 1) {
        throw PlanIoError("plan: missing or unsupported version");
    }
    for (const char* field : {"n", "d", "method", "count", "placements"}) {
        if (!doc.contains(field)) throw PlanIoError(std::string("plan: missing ") + field);
    }

    CoveringPlan plan;
    plan.n = require_int(doc["n"], "n");
    if (plan.n < 1) throw PlanIoError("plan: n must be >= 1");
    plan.d = require_rational(doc["d"], "d");
    if (plan.d < 0 || plan.d >= 1) throw PlanIoError("plan: d must be in [0, 1)");

    if (!doc["method"].is_string()) throw PlanIoError("plan: method must be a string");
    auto method = method_from_name(doc["method"].get<std::string>());
    if (!method) throw PlanIoError("plan: unknown method");
    plan.method = *method;

    if (doc.contains("j")) plan.j = require_int(doc["j"], "j");

    if (!doc["placements"].is_array()) throw PlanIoError("plan: placements must be an array");
    for (const json& item : doc["placements"]) {
        if (!item.is_object() || !item.contains("o") || !item.contains("x") ||
            !item.contains("y")) {
            throw PlanIoError("plan: malformed placement");
        }
        if (!item["o"].is_string()) throw PlanIoError("plan: placement o must be a string");
        std::string o = item["o"].get<std::string>();
        if (o != "U" && o != "D") throw PlanIoError("plan: placement o must be U or D");
        Placement p;
        p.orientation = o == "U" ? Orientation::Up : Orientation::Down;
        p.anchor.x = require_rational(item["x"], "placement x");
        p.anchor.y = require_rational(item["y"], "placement y");
        plan.placements.push_back(std::move(p));
    }

    if (require_int(doc["count"], "count") != plan.count()) {
        throw PlanIoError("plan: count does not match placements");
    }
    return plan;
}

void save_plan(const CoveringPlan& plan, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw PlanIoError("plan: cannot write " + path);
    out << serialize_plan(plan) << '\n';
}

CoveringPlan load_plan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PlanIoError("plan: cannot read " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_plan(text);
}

}  // namespace tricover
