#include "condgeo/morphism.hpp"

#include <algorithm>
#include <cassert>

namespace condgeo {

PointMap PointMap::identity(const std::vector<std::string>& ground) {
    std::vector<int> mapping(ground.size());
    for (std::size_t i = 0; i < ground.size(); ++i) mapping[i] = static_cast<int>(i);
    return PointMap{ground, ground, std::move(mapping)};
}

WorldSet PointMap::preimage(const WorldSet& z) const {
    assert(z.width() == targetSize());
    WorldSet out(sourceSize());
    for (int i = 0; i < sourceSize(); ++i)
        if (z.test(mapping[i])) out.set(i);
    return out;
}

PointMap makePointMap(std::vector<std::string> source, std::vector<std::string> target,
                      std::vector<int> mapping) {
    if (mapping.size() != source.size())
        throw InputError("point map is not total on its source");
    for (int t : mapping)
        if (t < 0 || t >= static_cast<int>(target.size()))
            throw InputError("point map image outside the target ground set");
    return PointMap{std::move(source), std::move(target), std::move(mapping)};
}

WorldSet universalImage(const PointMap& f, const WorldSet& y) {
    assert(y.width() == f.sourceSize());
    WorldSet out = WorldSet::full(f.targetSize());
    for (int i = 0; i < f.sourceSize(); ++i)
        if (!y.test(i)) out.reset(f.mapping[i]);
    // Targets with empty preimage stay in; f^-1({u}) is then trivially within Y.
    return out;
}

WorldSet existentialImage(const PointMap& f, const WorldSet& y) {
    assert(y.width() == f.sourceSize());
    WorldSet out(f.targetSize());
    for (int i : y.members()) out.set(f.mapping[i]);
    return out;
}

MorphismVerdict checkMorphism(const PointMap& f, const ConvexGeometry& src,
                              const ConvexGeometry& tgt, bool strong) {
    if (f.source != src.worlds || f.target != tgt.worlds)
        throw GroundSetMismatchError("point map does not match the geometries' ground sets");

    MorphismVerdict verdict;
    verdict.morphism = true;

    SetFamily images;
    for (const WorldSet& c : src.convexSets) {
        WorldSet img = universalImage(f, c);
        images.push_back(img);
        if (!tgt.isConvex(img)) {
            verdict.morphism = false;
            verdict.witness = c;
            verdict.detail = "universal image of a convex set is not convex in the target";
            return verdict;
        }
    }

    if (!strong) return verdict;

    images = normalizeFamily(std::move(images));
    verdict.strong = true;
    for (const WorldSet& d : tgt.convexSets) {
        if (!familyContains(images, d)) {
            verdict.strong = false;
            verdict.witness = d;
            verdict.detail = "target convex set is not a universal image";
            return verdict;
        }
    }
    return verdict;
}

Elimination eliminateImpossible(const AbstractModel& m) {
    const int n = m.size();
    WorldSet impossible = WorldSet::full(n);
    for (const WorldSet& c : m.geometry.convexSets) impossible &= c;

    WorldSet possible = impossible.complement();
    ConvexGeometry restricted = relativeConvexity(m.geometry, possible);

    auto keep = possible.members();
    Valuation valuation;
    for (const auto& [letter, set] : m.valuation) {
        WorldSet v(static_cast<int>(keep.size()));
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (set.test(keep[j])) v.set(static_cast<int>(j));
        valuation[letter] = v;
    }

    std::vector<int> inclusion(keep.begin(), keep.end());
    PointMap embedding{restricted.worlds, m.geometry.worlds, std::move(inclusion)};

    Elimination out;
    out.model = AbstractModel{std::move(restricted), std::move(valuation)};
    out.embedding = std::move(embedding);
    out.removed = impossible;
    out.allImpossible = possible.none() && n > 0;
    return out;
}

BackConditionVerdict posetBackCondition(const PointMap& f, const Poset& src, const Poset& tgt,
                                        bool strong) {
    if (f.source != src.elements || f.target != tgt.elements)
        throw GroundSetMismatchError("point map does not match the posets' ground sets");

    BackConditionVerdict verdict;

    // For all w and u' <= f(w) there is a u <= w with f(u) = u'.
    verdict.morphism = true;
    for (int w = 0; w < src.size() && verdict.morphism; ++w) {
        for (int uprime = 0; uprime < tgt.size(); ++uprime) {
            if (!tgt.leq(uprime, f.mapping[w])) continue;
            bool found = false;
            for (int u = 0; u < src.size(); ++u) {
                if (src.leq(u, w) && f.mapping[u] == uprime) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                verdict.morphism = false;
                verdict.detail = "back condition fails for " + src.elements[w] + " over " +
                                 tgt.elements[uprime];
                break;
            }
        }
    }
    if (!verdict.morphism || !strong) return verdict;

    // For all u there is a w with f(w) = u whose lower set maps below u.
    verdict.strong = true;
    for (int u = 0; u < tgt.size(); ++u) {
        bool found = false;
        for (int w = 0; w < src.size() && !found; ++w) {
            if (f.mapping[w] != u) continue;
            bool good = true;
            for (int wprime = 0; wprime < src.size(); ++wprime) {
                if (src.leq(wprime, w) && !tgt.leq(f.mapping[wprime], u)) {
                    good = false;
                    break;
                }
            }
            found = good;
        }
        if (!found) {
            verdict.strong = false;
            verdict.detail = "no witness above the lower set for " + tgt.elements[u];
            return verdict;
        }
    }
    return verdict;
}

TruthComparison compareTruth(const PointMap& f, const AbstractModel& m, const AbstractModel& mPrime,
                             std::span<const StepPtr> formulas) {
    MorphismVerdict mv = checkMorphism(f, m.geometry, mPrime.geometry, true);
    if (!mv.morphism || !mv.strong)
        throw PreconditionFailedError("compareTruth requires a strong morphism: " + mv.detail);

    for (const auto& [letter, vPrime] : mPrime.valuation) {
        auto it = m.valuation.find(letter);
        if (it == m.valuation.end() || it->second != f.preimage(vPrime))
            throw PreconditionFailedError("valuation law V(" + letter +
                                          ") = f^-1(V'(" + letter + ")) fails");
    }
    for (const auto& [letter, v] : m.valuation)
        if (!mPrime.valuation.count(letter))
            throw PreconditionFailedError("valuation law: letter '" + letter +
                                          "' missing from the target model");

    TruthComparison out;
    for (const StepPtr& formula : formulas) {
        TruthComparison::Row row;
        row.formula = formula;
        row.inSource = evalOneStep(m, formula);
        row.inTarget = evalOneStep(mPrime, formula);
        if (row.inSource != row.inTarget) out.allAgree = false;
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace condgeo
