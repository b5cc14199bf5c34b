#ifndef CONDGEO_MORPHISM_HPP
#define CONDGEO_MORPHISM_HPP

#include <optional>
#include <span>

#include "condgeo/convexity.hpp"
#include "condgeo/semantics.hpp"

namespace condgeo {

// Total function between ground sets, by position index.
struct PointMap {
    std::vector<std::string> source;
    std::vector<std::string> target;
    std::vector<int> mapping;  // mapping[i] = index into target

    int sourceSize() const { return static_cast<int>(source.size()); }
    int targetSize() const { return static_cast<int>(target.size()); }

    static PointMap identity(const std::vector<std::string>& ground);
    WorldSet preimage(const WorldSet& z) const;  // f^-1(Z), Z within target
};

PointMap makePointMap(std::vector<std::string> source, std::vector<std::string> target,
                      std::vector<int> mapping);

// {u | f^-1({u}) within Y} and {u | f^-1({u}) meets Y}.
WorldSet universalImage(const PointMap& f, const WorldSet& y);
WorldSet existentialImage(const PointMap& f, const WorldSet& y);

struct MorphismVerdict {
    bool morphism = false;
    bool strong = false;
    std::optional<WorldSet> witness;  // offending convex set (src side for
                                      // morphism failure, tgt side for strong)
    std::string detail;
};

// Morphism: universal images of convex sets are convex. Strong: additionally
// every target convex set arises as such an image.
MorphismVerdict checkMorphism(const PointMap& f, const ConvexGeometry& src,
                              const ConvexGeometry& tgt, bool strong);

struct Elimination {
    AbstractModel model;    // ground set W minus the impossible worlds
    PointMap embedding;     // inclusion back into the original ground set
    WorldSet removed;       // the impossible worlds, within the original
    bool allImpossible = false;
};

// Drops the worlds contained in every convex set. The restricted model has
// the empty set convex and the inclusion is a strong morphism into the input.
Elimination eliminateImpossible(const AbstractModel& m);

struct BackConditionVerdict {
    bool morphism = false;
    bool strong = false;
    std::string detail;
};

// The two bounded-morphism style conditions on maps between posets,
// equivalent to checkMorphism on the upset convexities.
BackConditionVerdict posetBackCondition(const PointMap& f, const Poset& src, const Poset& tgt,
                                        bool strong);

struct TruthComparison {
    struct Row {
        StepPtr formula;
        bool inSource = false;
        bool inTarget = false;
    };
    std::vector<Row> rows;
    bool allAgree = true;
};

// For a strong morphism with pulled-back valuation, every one-step formula
// has the same truth value in both models; a discrepancy is an internal bug.
TruthComparison compareTruth(const PointMap& f, const AbstractModel& m, const AbstractModel& mPrime,
                             std::span<const StepPtr> formulas);

}  // namespace condgeo

#endif
