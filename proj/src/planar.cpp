#include "condgeo/planar.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace condgeo {

// ---------------------------------------------------------------------------
// Rational plumbing
// ---------------------------------------------------------------------------

Rational parseRational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.empty()) throw InputError("empty rational literal");

    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) throw InputError("zero denominator in '" + text + "'");
            return Rational(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(BigInt(s));

        std::string head = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("bad decimal literal '" + text + "'");
        bool negative = !head.empty() && head[0] == '-';
        if (head == "-" || head == "+") head += "0";
        if (head.empty()) head = "0";
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt whole(head);
        BigInt numerator = whole * scale + (negative ? -BigInt(frac) : BigInt(frac));
        return Rational(numerator, scale);
    } catch (const std::runtime_error&) {
        throw InputError("bad rational literal '" + text + "'");
    }
}

std::string rationalToString(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

std::string rationalToDecimal(const Rational& value, int digits) {
    BigInt num = numerator(value);
    BigInt den = denominator(value);
    bool negative = num < 0;
    if (negative) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = num * scale;
    BigInt q = scaled / den;
    if (2 * (scaled % den) >= den) ++q;  // half-up

    std::string body = BigInt(q / scale).str();
    std::string frac = BigInt(q % scale).str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    std::string out = (negative && (q != 0) ? "-" : "") + body;
    if (!frac.empty()) out += "." + frac;
    return out;
}

int orientation(const Point2& a, const Point2& b, const Point2& c) {
    Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sign(cross);
}

Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

// ---------------------------------------------------------------------------
// Hull membership
// ---------------------------------------------------------------------------

namespace {

bool lexLess(const Point2& a, const Point2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

// p on the closed segment [a, b], a != b assumed collinear with p checked.
bool onSegment(const Point2& p, const Point2& a, const Point2& b) {
    if (orientation(a, b, p) != 0) return false;
    Rational t = dot({p.x - a.x, p.y - a.y}, {b.x - a.x, b.y - a.y});
    Rational len2 = dot({b.x - a.x, b.y - a.y}, {b.x - a.x, b.y - a.y});
    return t >= 0 && t <= len2;
}

bool pointInConvexPolygon(const Point2& p, const std::vector<Point2>& hull) {
    if (hull.empty()) return false;
    if (hull.size() == 1) return p == hull[0];
    if (hull.size() == 2) return onSegment(p, hull[0], hull[1]);
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point2& a = hull[i];
        const Point2& b = hull[(i + 1) % hull.size()];
        if (orientation(a, b, p) < 0) return false;
    }
    return true;
}

}  // namespace

std::vector<Point2> convexHull(std::span<const Point2> pts) {
    std::vector<Point2> p(pts.begin(), pts.end());
    std::sort(p.begin(), p.end(), lexLess);
    p.erase(std::unique(p.begin(), p.end()), p.end());
    const std::size_t n = p.size();
    if (n <= 2) return p;

    // Andrew's monotone chain; strict turns only, so collinear boundary
    // points are dropped and the result is exactly the vertex set.
    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
        hull[k++] = p[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && orientation(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
        hull[k++] = p[i];
    }
    hull.resize(k - 1);
    return hull;
}

bool pointInHull(const Point2& p, std::span<const Point2> pts) {
    if (pts.empty()) return false;
    return pointInConvexPolygon(p, convexHull(pts));
}

// ---------------------------------------------------------------------------
// Plane models
// ---------------------------------------------------------------------------

std::vector<Point2> PlaneModel::pointsOf(const WorldSet& s) const {
    std::vector<Point2> out;
    for (int i : s.members()) out.push_back(points[i]);
    return out;
}

PlaneModel makePlaneModel(std::vector<std::string> ids, std::vector<Point2> points,
                          Valuation valuation) {
    if (ids.size() != points.size()) throw InputError("plane model id/point count mismatch");
    std::set<std::string> seen(ids.begin(), ids.end());
    if (seen.size() != ids.size()) throw InputError("plane model ids are not unique");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw InputError("plane model points '" + ids[i] + "' and '" + ids[j] +
                                 "' coincide");
    const int n = static_cast<int>(ids.size());
    for (const auto& [letter, set] : valuation)
        if (set.width() != n)
            throw InputError("valuation of '" + letter + "' does not match the point set");
    return PlaneModel{std::move(ids), std::move(points), std::move(valuation)};
}

ConvexGeometry planeGeometry(const PlaneModel& m) {
    const int n = m.size();
    if (n > kPlaneGeometryGuard)
        throw SizeGuardError("planeGeometry materializes up to 2^n sets; at most " +
                             std::to_string(kPlaneGeometryGuard) + " points allowed");

    SetFamily family;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        WorldSet s = WorldSet::fromMask(n, mask);
        std::vector<Point2> pts = m.pointsOf(s);
        std::vector<Point2> hullVts = convexHull(pts);
        bool fixed = true;
        for (int q = 0; q < n && fixed; ++q)
            if (!s.test(q) && pointInConvexPolygon(m.points[q], hullVts)) fixed = false;
        if (fixed) family.push_back(s);
    }
    family = normalizeFamily(std::move(family));

    // Traces of convex sets are intersection-closed with anti-exchange; the
    // full validation pass is re-run only while it is affordable.
    if (family.size() <= 1024) {
        auto checked = validate(m.ids, family);
        if (std::holds_alternative<Violation>(checked))
            throw InternalError("hull traces do not form a convex geometry");
        return std::get<ConvexGeometry>(std::move(checked));
    }
    return ConvexGeometry{m.ids, std::move(family)};
}

WorldSet planeExtremePoints(const PlaneModel& m, const WorldSet& x) {
    WorldSet out(m.size());
    for (int q : x.members()) {
        std::vector<Point2> others = m.pointsOf(x.without(q));
        if (!pointInHull(m.points[q], others)) out.set(q);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Directions and the ray embedding
// ---------------------------------------------------------------------------

std::vector<Point2> chooseDirections(int m, long precision) {
    if (m < 2) throw InputError("at least two directions are required");
    const long double pi = std::acos(-1.0L);

    for (;; precision *= 2) {
        std::vector<Point2> dirs;
        dirs.reserve(m);
        for (int j = 1; j <= m; ++j) {
            if (2 * j == m) {
                dirs.push_back({Rational(-1), Rational(0)});
                continue;
            }
            if (j == m) {
                dirs.push_back({Rational(1), Rational(0)});
                continue;
            }
            long double half = pi * j / m;  // theta_j / 2
            long long num = std::llround(std::tan(half) * precision);
            Rational t(num, precision);
            Rational t2 = t * t;
            dirs.push_back({(1 - t2) / (1 + t2), 2 * t / (1 + t2)});
        }

        bool distinct = true;
        for (int j = 0; j < m && distinct; ++j)
            for (int k = j + 1; k < m; ++k)
                if (dirs[j] == dirs[k]) {
                    distinct = false;
                    break;
                }
        if (!distinct) continue;
        if (!pointInHull({Rational(0), Rational(0)}, dirs)) continue;
        return dirs;
    }
}

Rational maxPairwiseDot(const std::vector<Point2>& dirs) {
    Rational c(-1);
    for (std::size_t j = 0; j < dirs.size(); ++j)
        for (std::size_t k = j + 1; k < dirs.size(); ++k)
            c = std::max(c, dot(dirs[j], dirs[k]));
    return c;
}

Rational safetyFromMaxDot(int n, const Rational& maxDot) {
    if (maxDot <= 0) return Rational(0);
    return Rational(n) * maxDot / (1 - maxDot);
}

namespace {

bool marginHolds(int n, const Rational& s, const std::vector<Point2>& dirs) {
    for (std::size_t j = 0; j < dirs.size(); ++j)
        for (std::size_t k = 0; k < dirs.size(); ++k) {
            if (j == k) continue;
            Rational d = dot(dirs[j], dirs[k]);
            if (d > 0 && (s + n) * d > s) return false;
        }
    return true;
}

}  // namespace

EmbedResult embed(const ConvexGeometry& g, std::optional<std::vector<LinearOrder>> chainsOpt,
                  long precision) {
    const int n = g.size();

    if (n == 0) {
        EmbedResult out;
        out.skeleton = PlaneModel{{}, {}, {}};
        out.owner = PointMap{{}, {}, {}};
        return out;
    }
    if (!g.hasEmpty())
        throw EmptySetRequiredError("embedding requires the empty set to be convex");

    std::vector<LinearOrder> chains = chainsOpt ? std::move(*chainsOpt) : decompose(g);
    if (chains.empty()) throw InputError("no chains given");
    for (const LinearOrder& order : chains) {
        std::vector<bool> seen(n, false);
        if (static_cast<int>(order.size()) != n)
            throw InputError("chain is not a permutation of the ground set");
        for (int i : order) {
            if (i < 0 || i >= n || seen[i])
                throw InputError("chain is not a permutation of the ground set");
            seen[i] = true;
        }
    }

    // The construction needs the chains' upset convexities to join to exactly
    // the input family; user-provided chains are checked up front.
    SetFamily joined{WorldSet::full(n)};
    for (const LinearOrder& order : chains)
        joined = joinFamilies(joined, chainUpsetFamily(n, order));
    if (joined != g.convexSets)
        throw InputError("chains do not decompose the geometry");

    if (chains.size() == 1) chains.push_back(chains[0]);
    const int m = static_cast<int>(chains.size());

    for (int attempt = 0; attempt < 8; ++attempt, precision *= 2) {
        std::vector<Point2> dirs = chooseDirections(m, precision);
        Rational s = safetyFromMaxDot(n, maxPairwiseDot(dirs));
        if (!marginHolds(n, s, dirs)) continue;

        // Rank counts from the top: chain[i] (bottom to top) has rank n - i.
        std::vector<std::vector<int>> ranks(m, std::vector<int>(n, 0));
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < n; ++i) ranks[j][chains[j][i]] = n - i;

        std::vector<std::string> ids;
        std::vector<Point2> pts;
        std::vector<int> ownerIdx;
        ids.reserve(n * m);
        for (int w = 0; w < n; ++w)
            for (int j = 0; j < m; ++j) {
                Rational radius = s + ranks[j][w];
                pts.push_back({radius * dirs[j].x, radius * dirs[j].y});
                ids.push_back(g.worlds[w] + "@" + std::to_string(j + 1));
                ownerIdx.push_back(w);
            }

        EmbedResult out;
        out.skeleton = makePlaneModel(std::move(ids), std::move(pts), {});
        out.owner = PointMap{out.skeleton.ids, g.worlds, std::move(ownerIdx)};
        out.meta = Embedding{std::move(dirs), std::move(s), std::move(ranks), precision};
        out.chains = chains;

        if (verifyEmbedding(g, out.skeleton, out.owner).pass) return out;
    }
    throw InternalError("embedding failed verification at every direction precision");
}

EmbeddingVerdict verifyEmbedding(const ConvexGeometry& g, const PlaneModel& skeleton,
                                 const PointMap& owner) {
    const int n = g.size();
    if (owner.target != g.worlds || owner.source != skeleton.ids)
        throw GroundSetMismatchError("owner map does not match the embedding");
    if (n > 20)
        throw BoundExceededError("embedding verification scans 2^n candidate sets; n > 20 refused");

    const int pointCount = skeleton.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        WorldSet d = WorldSet::fromMask(n, mask);

        std::vector<Point2> preimage;
        for (int i = 0; i < pointCount; ++i)
            if (d.test(owner.mapping[i])) preimage.push_back(skeleton.points[i]);

        std::vector<Point2> hullVts = convexHull(preimage);
        WorldSet trace(pointCount);
        for (int i = 0; i < pointCount; ++i)
            if (pointInConvexPolygon(skeleton.points[i], hullVts)) trace.set(i);

        WorldSet image = universalImage(owner, trace);
        bool convex = g.isConvex(d);
        if (convex && image != d)
            return {false, d, "convex set is not realized by the hull trace of its preimage"};
        if (!convex && image == d)
            return {false, d, "non-convex set arises as a universal image of a hull trace"};
    }
    return {true, std::nullopt, ""};
}

// ---------------------------------------------------------------------------
// Evaluation and truth comparison
// ---------------------------------------------------------------------------

bool evalPlaneConditional(const PlaneModel& m, const PropPtr& ant, const PropPtr& cons) {
    return planeExtremePoints(m, m.ext(ant)).isSubsetOf(m.ext(cons));
}

bool evalPlane(const PlaneModel& m, const StepPtr& f) {
    switch (f->kind) {
        case StepKind::Cond: return evalPlaneConditional(m, f->ant, f->cons);
        case StepKind::Not: return !evalPlane(m, f->lhs);
        case StepKind::And: return evalPlane(m, f->lhs) && evalPlane(m, f->rhs);
        case StepKind::Or: return evalPlane(m, f->lhs) || evalPlane(m, f->rhs);
        case StepKind::Implies: return !evalPlane(m, f->lhs) || evalPlane(m, f->rhs);
        case StepKind::Iff: return evalPlane(m, f->lhs) == evalPlane(m, f->rhs);
    }
    throw InternalError("unreachable");
}

TruthComparison comparePlaneTruth(const PlaneModel& plane, const PointMap& owner,
                                  const AbstractModel& abstract, std::span<const StepPtr> formulas) {
    if (owner.source != plane.ids || owner.target != abstract.geometry.worlds)
        throw GroundSetMismatchError("owner map does not match the models");

    for (const auto& [letter, target] : abstract.valuation) {
        auto it = plane.valuation.find(letter);
        if (it == plane.valuation.end() || it->second != owner.preimage(target))
            throw PreconditionFailedError("valuation law V(" + letter +
                                          ") = r^-1(V'(" + letter + ")) fails");
    }
    for (const auto& [letter, v] : plane.valuation)
        if (!abstract.valuation.count(letter))
            throw PreconditionFailedError("valuation law: letter '" + letter +
                                          "' missing from the abstract model");

    TruthComparison out;
    for (const StepPtr& formula : formulas) {
        TruthComparison::Row row;
        row.formula = formula;
        row.inSource = evalPlane(plane, formula);
        row.inTarget = evalOneStep(abstract, formula);
        if (row.inSource != row.inTarget) out.allAgree = false;
        out.rows.push_back(std::move(row));
    }
    return out;
}

// ---------------------------------------------------------------------------
// SVG output
// ---------------------------------------------------------------------------

namespace {

std::string dec(const Rational& r) { return rationalToDecimal(r, 6); }

}  // namespace

std::string renderSvg(const PlaneModel& m, const PropPtr* highlight) {
    std::ostringstream svg;

    Rational minX(0), maxX(100), minY(0), maxY(100);
    if (!m.points.empty()) {
        minX = maxX = m.points[0].x;
        minY = maxY = m.points[0].y;
        for (const Point2& p : m.points) {
            minX = std::min(minX, p.x);
            maxX = std::max(maxX, p.x);
            minY = std::min(minY, p.y);
            maxY = std::max(maxY, p.y);
        }
    }
    Rational width = maxX - minX;
    Rational height = maxY - minY;
    if (width == 0) width = 1;
    if (height == 0) height = 1;
    Rational marginX = width / 10;
    Rational marginY = height / 10;
    Rational extent = std::max(width, height);

    // SVG's y axis points down; plot with y negated.
    auto flipY = [](const Rational& y) { return -y; };

    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << dec(minX - marginX) << " " << dec(flipY(maxY) - marginY) << " "
        << dec(width + 2 * marginX) << " " << dec(height + 2 * marginY) << "\">\n";

    if (highlight != nullptr && !m.points.empty()) {
        WorldSet region = m.ext(*highlight);
        std::vector<Point2> hullVts = convexHull(m.pointsOf(region));
        if (hullVts.size() >= 2) {
            svg << "  <polygon points=\"";
            for (std::size_t i = 0; i < hullVts.size(); ++i) {
                if (i) svg << " ";
                svg << dec(hullVts[i].x) << "," << dec(flipY(hullVts[i].y));
            }
            svg << "\" fill=\"#d8d8d8\" stroke=\"#888888\" stroke-width=\""
                << dec(extent / 200) << "\"/>\n";
        }
    }

    Rational r = extent / 60;
    Rational fontSize = extent / 20;
    for (int i = 0; i < m.size(); ++i) {
        const Point2& p = m.points[i];
        svg << "  <circle cx=\"" << dec(p.x) << "\" cy=\"" << dec(flipY(p.y)) << "\" r=\""
            << dec(r) << "\" fill=\"#222222\"/>\n";
        svg << "  <text x=\"" << dec(p.x + 2 * r) << "\" y=\"" << dec(flipY(p.y) - 2 * r)
            << "\" font-size=\"" << dec(fontSize) << "\" font-family=\"sans-serif\">" << m.ids[i]
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace condgeo
