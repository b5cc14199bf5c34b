#ifndef CONDGEO_CONVEXITY_HPP
#define CONDGEO_CONVEXITY_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "condgeo/errors.hpp"
#include "condgeo/worldset.hpp"

namespace condgeo {

// Sorted, deduplicated family of subsets of a common ground set.
using SetFamily = std::vector<WorldSet>;

SetFamily normalizeFamily(SetFamily family);
bool familyContains(const SetFamily& family, const WorldSet& s);

// Finite convex geometry: the ground set W is always a member (empty
// intersection convention), the family is intersection-closed and has the
// anti-exchange property. The empty set need not be a member.
struct ConvexGeometry {
    std::vector<std::string> worlds;
    SetFamily convexSets;  // sorted, deduplicated

    int size() const { return static_cast<int>(worlds.size()); }
    bool isConvex(const WorldSet& s) const { return familyContains(convexSets, s); }
    bool hasEmpty() const;

    bool operator==(const ConvexGeometry& o) const {
        return worlds == o.worlds && convexSets == o.convexSets;
    }
};

struct Violation {
    enum class Clause { FullSetMissing, Intersection, AntiExchange };
    Clause clause;
    // Intersection: the pair (a, b) whose intersection is missing.
    // AntiExchange: the set a and the pair (x, y) that no member separates.
    WorldSet a, b;
    int x = -1, y = -1;

    std::string describe(const std::vector<std::string>& worlds) const;
};

// Checks all three convex-geometry clauses; returns the geometry or the first
// violation found (full set, then intersection closure, then anti-exchange).
std::variant<ConvexGeometry, Violation> validate(std::vector<std::string> worlds, SetFamily family);

// As validate, but throws InputError on violation.
ConvexGeometry makeGeometry(std::vector<std::string> worlds, SetFamily family);

// Least convex superset of X: the intersection of all members containing X.
WorldSet hull(const ConvexGeometry& g, const WorldSet& x);

// {x in X | x not in hull(X minus x)}.
WorldSet extremePoints(const ConvexGeometry& g, const WorldSet& x);

// Complements of the convex sets.
SetFamily feasibleSets(const ConvexGeometry& g);

// Traces of the convex sets on X, re-indexed to ground set X.
ConvexGeometry relativeConvexity(const ConvexGeometry& g, const WorldSet& x);

// Finite poset; upward[i] is the set of elements above element i (incl. i).
struct Poset {
    std::vector<std::string> elements;
    std::vector<WorldSet> upward;

    int size() const { return static_cast<int>(elements.size()); }
    bool leq(int i, int j) const { return upward[i].test(j); }
};

// Validates reflexivity, transitivity and antisymmetry.
Poset makePoset(std::vector<std::string> elements, const std::vector<std::vector<bool>>& leq);

// The upward closed sets of the order, as a convex geometry.
ConvexGeometry upsetConvexity(const Poset& p);

// All pairwise intersections of members; the lattice join of geometries on a
// shared ground set. Result is re-validated.
ConvexGeometry join(const ConvexGeometry& a, const ConvexGeometry& b);

// Join on raw families without the validation pass (internal work holds the
// invariant by construction).
SetFamily joinFamilies(const SetFamily& a, const SetFamily& b);

inline constexpr int kEnumerationBound = 5;

// Emits every convex geometry on the given canonical ground set exactly once
// (DFS over intersection-closed families containing W, then anti-exchange
// filtered). Return false from the callback to stop early.
void enumerateGeometries(int n, bool requireEmpty,
                         const std::function<bool(const ConvexGeometry&)>& emit);
void enumerateGeometries(std::vector<std::string> worlds, bool requireEmpty,
                         const std::function<bool(const ConvexGeometry&)>& emit);

std::vector<ConvexGeometry> allGeometries(int n, bool requireEmpty);

}  // namespace condgeo

#endif
