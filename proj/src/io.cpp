#include "condgeo/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace condgeo {

namespace {

Rational ratFromJson(const Json& j) {
    if (j.is_string()) return parseRational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) {
        // Round-tripping doubles would silently lose exactness; require text.
        throw InputError("coordinates must be strings or integers, not floats: " + j.dump());
    }
    throw InputError("bad rational value: " + j.dump());
}

std::map<std::string, int> indexOf(const std::vector<std::string>& ids) {
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (!idx.emplace(ids[i], static_cast<int>(i)).second)
            throw InputError("duplicate id '" + ids[i] + "'");
    }
    return idx;
}

WorldSet idSet(const Json& arr, const std::map<std::string, int>& idx) {
    WorldSet s(static_cast<int>(idx.size()));
    if (!arr.is_array()) throw InputError("expected an array of ids: " + arr.dump());
    for (const Json& e : arr) {
        auto it = idx.find(e.get<std::string>());
        if (it == idx.end()) throw InputError("unknown id '" + e.get<std::string>() + "'");
        s.set(it->second);
    }
    return s;
}

Valuation valuationFromJson(const Json& j, const std::map<std::string, int>& idx) {
    Valuation v;
    if (j.is_null()) return v;
    if (!j.is_object()) throw InputError("valuation must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) v[it.key()] = idSet(it.value(), idx);
    return v;
}

Json idArray(const WorldSet& s, const std::vector<std::string>& ids) {
    Json arr = Json::array();
    for (int i : s.members()) arr.push_back(ids[i]);
    return arr;
}

}  // namespace

LoadedModel modelFromJson(const Json& j) {
    if (!j.is_object()) throw InputError("model file must be a JSON object");

    if (j.contains("points")) {
        std::vector<std::string> ids;
        std::vector<Point2> pts;
        for (const Json& p : j.at("points")) {
            ids.push_back(p.at("id").get<std::string>());
            pts.push_back({ratFromJson(p.at("x")), ratFromJson(p.at("y"))});
        }
        auto idx = indexOf(ids);
        Valuation v = valuationFromJson(j.value("valuation", Json()), idx);
        return makePlaneModel(std::move(ids), std::move(pts), std::move(v));
    }

    if (j.contains("worlds")) {
        std::vector<std::string> worlds = j.at("worlds").get<std::vector<std::string>>();
        auto idx = indexOf(worlds);
        SetFamily family;
        for (const Json& c : j.at("convex")) family.push_back(idSet(c, idx));
        auto checked = validate(worlds, std::move(family));
        if (auto* violation = std::get_if<Violation>(&checked))
            throw InputError("not a convex geometry: " + violation->describe(worlds));
        Valuation v = valuationFromJson(j.value("valuation", Json()), idx);
        return makeModel(std::get<ConvexGeometry>(std::move(checked)), std::move(v));
    }

    throw InputError("model file must contain either \"points\" or \"worlds\"");
}

LoadedModel loadModelFile(const std::string& path) {
    Json j;
    try {
        j = Json::parse(readFile(path));
    } catch (const Json::parse_error& e) {
        throw InputError("cannot parse " + path + ": " + e.what());
    }
    return modelFromJson(j);
}

Json geometryToJson(const ConvexGeometry& g) {
    Json j;
    j["worlds"] = g.worlds;
    Json family = Json::array();
    for (const WorldSet& c : g.convexSets) family.push_back(idArray(c, g.worlds));
    j["convex"] = family;
    return j;
}

Json abstractModelToJson(const AbstractModel& m) {
    Json j = geometryToJson(m.geometry);
    Json v = Json::object();
    for (const auto& [letter, set] : m.valuation) v[letter] = idArray(set, m.geometry.worlds);
    j["valuation"] = v;
    return j;
}

Json planeModelToJson(const PlaneModel& m) {
    Json j;
    Json pts = Json::array();
    for (int i = 0; i < m.size(); ++i) {
        pts.push_back({{"id", m.ids[i]},
                       {"x", rationalToString(m.points[i].x)},
                       {"y", rationalToString(m.points[i].y)}});
    }
    j["points"] = pts;
    Json v = Json::object();
    for (const auto& [letter, set] : m.valuation) v[letter] = idArray(set, m.ids);
    j["valuation"] = v;
    return j;
}

Json modelToJson(const LoadedModel& m) {
    if (const auto* a = std::get_if<AbstractModel>(&m)) return abstractModelToJson(*a);
    return planeModelToJson(std::get<PlaneModel>(m));
}

Json certificateToJson(const Certificate& c) {
    Json j;
    j["input"] = c.input;
    j["impossible"] = c.impossible;
    j["chains"] = c.chains;
    Json dirs = Json::array();
    for (const Point2& d : c.directions)
        dirs.push_back({{"x", rationalToString(d.x)}, {"y", rationalToString(d.y)}});
    j["directions"] = dirs;
    j["safety"] = rationalToString(c.safety);
    Json pts = Json::array();
    for (int i = 0; i < c.plane.size(); ++i) {
        pts.push_back({{"id", c.plane.ids[i]},
                       {"x", rationalToString(c.plane.points[i].x)},
                       {"y", rationalToString(c.plane.points[i].y)},
                       {"world", c.owners[i]}});
    }
    j["points"] = pts;
    j["verdict"] = c.verdictPass ? "pass" : "fail";
    Json truth = Json::array();
    for (const auto& row : c.truth)
        truth.push_back({{"formula", row.formula},
                         {"abstract", row.abstractTruth},
                         {"plane", row.planeTruth}});
    j["truth"] = truth;
    return j;
}

void writeFile(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open " + path + " for writing");
    out << contents;
    if (!out) throw InputError("failed writing " + path);
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace condgeo
