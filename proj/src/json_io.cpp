#include "toric/json_io.hpp"

#include <fstream>
#include <sstream>

namespace toric::io {
namespace {

double number_at(const json& j, const char* what) {
    if (!j.is_number()) throw ValidationError("InvalidInput", std::string(what) + " must be a number");
    return j.get<double>();
}

Point point_from(const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw ValidationError("InvalidInput", std::string(what) + " must be a coordinate array");
    Point p;
    for (const auto& c : j) p.push_back(number_at(c, what));
    return p;
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw ValidationError("InvalidInput", std::string("missing field \"") + name + "\"");
    return *it;
}

}  // namespace

json to_json(const ConvexBody& body) {
    json j;
    j["dim"] = body.dim();
    j["vertices"] = json::array();
    for (const auto& v : body.vertices()) j["vertices"].push_back(v);
    return j;
}

ConvexBody body_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("InvalidInput", "body must be a JSON object");
    int dim = int(number_at(field(j, "dim"), "dim"));
    const json& vs = field(j, "vertices");
    if (!vs.is_array()) throw ValidationError("InvalidInput", "vertices must be an array");
    std::vector<Point> pts;
    for (const auto& v : vs) pts.push_back(point_from(v, "vertex"));
    return ConvexBody(dim, pts);
}

json to_json(const DiscreteMeasure& mu) {
    json j;
    j["atoms"] = json::array();
    for (std::size_t i = 0; i < mu.atoms.size(); ++i)
        j["atoms"].push_back(json{{"x", mu.atoms[i]}, {"mass", mu.masses[i]}});
    return j;
}

DiscreteMeasure measure_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("InvalidInput", "measure must be a JSON object");
    const json& atoms = field(j, "atoms");
    if (!atoms.is_array()) throw ValidationError("InvalidInput", "atoms must be an array");
    DiscreteMeasure mu;
    for (const auto& a : atoms) {
        mu.atoms.push_back(point_from(field(a, "x"), "atom"));
        mu.masses.push_back(number_at(field(a, "mass"), "mass"));
    }
    return mu;
}

json to_json(const PLConvexFunction& h) {
    json j;
    j["body"] = to_json(h.body());
    j["nodes"] = json::array();
    for (const auto& x : h.nodes()) j["nodes"].push_back(x);
    j["values"] = h.values();
    return j;
}

PLConvexFunction pl_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("InvalidInput", "function must be a JSON object");
    ConvexBody body = body_from_json(field(j, "body"));
    const json& ns = field(j, "nodes");
    if (!ns.is_array()) throw ValidationError("InvalidInput", "nodes must be an array");
    std::vector<Point> nodes;
    for (const auto& x : ns) nodes.push_back(point_from(x, "node"));
    const json& vs = field(j, "values");
    if (!vs.is_array()) throw ValidationError("InvalidInput", "values must be an array");
    std::vector<double> values;
    for (const auto& v : vs) values.push_back(number_at(v, "value"));
    return PLConvexFunction(nodes, values, body);
}

json to_json(const CompactRegion& region) {
    json j;
    j["boxes"] = json::array();
    for (const auto& [lo, hi] : region.boxes) j["boxes"].push_back(json{{"lo", lo}, {"hi", hi}});
    return j;
}

CompactRegion region_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("InvalidInput", "region must be a JSON object");
    const json& boxes = field(j, "boxes");
    if (!boxes.is_array()) throw ValidationError("InvalidInput", "boxes must be an array");
    CompactRegion region;
    for (const auto& b : boxes)
        region.boxes.push_back({point_from(field(b, "lo"), "lo"), point_from(field(b, "hi"), "hi")});
    return region;
}

json to_json(const MAResult& result) {
    json j;
    j["masses"] = result.masses;
    j["total"] = result.total;
    j["boundary_remainder"] = result.boundary_remainder;
    return j;
}

json to_json(const SolveReport& report) {
    json j;
    j["solution"] = to_json(report.solution);
    j["residual"] = report.residual;
    j["iterations"] = report.iterations;
    j["normalization"] = report.normalization;
    return j;
}

json parse_input(const std::string& text) {
    std::string payload = text;
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw ValidationError("InvalidInput", "empty input");
    if (text[first] != '{' && text[first] != '[') {
        std::ifstream in(text);
        if (!in) throw ValidationError("InvalidInput", "cannot open input file: " + text);
        std::ostringstream ss;
        ss << in.rdbuf();
        payload = ss.str();
    }
    json j = json::parse(payload, nullptr, false);
    if (j.is_discarded()) throw ValidationError("InvalidInput", "malformed JSON input");
    return j;
}

}  // namespace toric::io
