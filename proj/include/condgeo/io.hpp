#ifndef CONDGEO_IO_HPP
#define CONDGEO_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "condgeo/planar.hpp"
#include "condgeo/semantics.hpp"

namespace condgeo {

using Json = nlohmann::json;

// Model files are JSON. Abstract form:
//   {"worlds": [ids], "convex": [[ids]], "valuation": {letter: [ids]}}
// Plane form:
//   {"points": [{"id": str, "x": rat, "y": rat}], "valuation": {letter: [ids]}}
// where rat is a "num/den" string, an integer, or a decimal literal, all
// parsed exactly. Abstract files are validated on load.
using LoadedModel = std::variant<AbstractModel, PlaneModel>;

LoadedModel modelFromJson(const Json& j);
LoadedModel loadModelFile(const std::string& path);

Json abstractModelToJson(const AbstractModel& m);
Json planeModelToJson(const PlaneModel& m);
Json modelToJson(const LoadedModel& m);

Json geometryToJson(const ConvexGeometry& g);

// Record of one embed pipeline run; the verdict is pass and the truth table
// matches across both models by construction.
struct Certificate {
    Json input;
    std::vector<std::string> impossible;
    std::vector<std::vector<std::string>> chains;  // bottom to top, world ids
    std::vector<Point2> directions;
    Rational safety;
    PlaneModel plane;                 // with pulled-back valuation
    std::vector<std::string> owners;  // world id per plane point
    bool verdictPass = false;
    struct TruthRow {
        std::string formula;
        bool abstractTruth;
        bool planeTruth;
    };
    std::vector<TruthRow> truth;
};

Json certificateToJson(const Certificate& c);

void writeFile(const std::string& path, const std::string& contents);
std::string readFile(const std::string& path);

}  // namespace condgeo

#endif
