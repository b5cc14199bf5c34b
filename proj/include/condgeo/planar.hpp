#ifndef CONDGEO_PLANAR_HPP
#define CONDGEO_PLANAR_HPP

#include <optional>
#include <span>

#include "condgeo/decomposition.hpp"
#include "condgeo/morphism.hpp"
#include "condgeo/rational.hpp"
#include "condgeo/semantics.hpp"

namespace condgeo {

// Exact membership of p in the convex hull of pts; boundary counts as
// inside. Degenerate inputs (collinear sets, single points) are handled as
// segments and points.
bool pointInHull(const Point2& p, std::span<const Point2> pts);

// Hull vertices in counterclockwise order, collinear boundary points
// excluded. Collinear input collapses to its two endpoints.
std::vector<Point2> convexHull(std::span<const Point2> pts);

// Finite set of labeled points in the plane with a valuation. Convexity is
// the relative standard convexity of the point set.
struct PlaneModel {
    std::vector<std::string> ids;
    std::vector<Point2> points;
    Valuation valuation;

    int size() const { return static_cast<int>(ids.size()); }
    WorldSet ext(const PropPtr& f) const { return extension(f, size(), valuation); }
    std::vector<Point2> pointsOf(const WorldSet& s) const;
};

PlaneModel makePlaneModel(std::vector<std::string> ids, std::vector<Point2> points,
                          Valuation valuation);

inline constexpr int kPlaneGeometryGuard = 15;

// Materializes the relative convexity as an explicit set family: all C with
// C equal to its own hull trace. Guarded; the family may be exponential.
ConvexGeometry planeGeometry(const PlaneModel& m);

// {q in X | q not in hull(X minus q)}.
WorldSet planeExtremePoints(const PlaneModel& m, const WorldSet& x);

// m exact rational unit vectors near the angles 2*pi*j/m, via tangent
// half-angle with denominators bounded by precision. Pairwise distinct with
// the origin in their convex hull; retries with doubled precision otherwise.
std::vector<Point2> chooseDirections(int m, long precision = 10000);

// Largest pairwise dot product among the directions, and the safety radius
// n * max(0, c) / (1 - c); with c = cos(2*pi/m) this is the ideal-direction
// formula.
Rational maxPairwiseDot(const std::vector<Point2>& dirs);
Rational safetyFromMaxDot(int n, const Rational& maxDot);

struct Embedding {
    std::vector<Point2> directions;
    Rational safety;                      // s
    std::vector<std::vector<int>> ranks;  // ranks[j][worldIndex], top element rank 1
    long precisionUsed = 0;
};

struct EmbedResult {
    PlaneModel skeleton;  // ids "w@j", empty valuation
    Embedding meta;
    PointMap owner;       // point -> source world
    std::vector<LinearOrder> chains;
};

// Places each world on one ray per chain at radius s + rank; the owner map is
// a strong morphism onto the input geometry (verified, with precision
// retries). Chains default to decompose(g); a single chain is duplicated.
EmbedResult embed(const ConvexGeometry& g, std::optional<std::vector<LinearOrder>> chains = {},
                  long precision = 10000);

struct EmbeddingVerdict {
    bool pass = false;
    std::optional<WorldSet> witness;  // subset of the abstract ground set
    std::string detail;
};

// Exact certification: D is convex iff D equals the universal image of the
// hull trace of its preimage, over every D in the powerset of the ground set.
EmbeddingVerdict verifyEmbedding(const ConvexGeometry& g, const PlaneModel& skeleton,
                                 const PointMap& owner);

// Conditionals read as: the extreme points of the antecedent's extension lie
// in the consequent's extension.
bool evalPlaneConditional(const PlaneModel& m, const PropPtr& ant, const PropPtr& cons);
bool evalPlane(const PlaneModel& m, const StepPtr& f);

// Truth comparison across an embedding without materializing the plane-side
// family; requires the pulled-back valuation law.
TruthComparison comparePlaneTruth(const PlaneModel& plane, const PointMap& owner,
                                  const AbstractModel& abstract, std::span<const StepPtr> formulas);

// Standalone SVG with labeled points and an optional shaded hull of the
// highlight formula's extension; byte-identical across runs.
std::string renderSvg(const PlaneModel& m, const PropPtr* highlight = nullptr);

}  // namespace condgeo

#endif
