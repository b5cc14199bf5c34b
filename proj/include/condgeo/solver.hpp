#ifndef CONDGEO_SOLVER_HPP
#define CONDGEO_SOLVER_HPP

#include <cstdint>
#include <optional>

#include "condgeo/planar.hpp"
#include "condgeo/semantics.hpp"

namespace condgeo {

struct ModelClassSpec {
    enum class Kind { AllGeometries, LineModels, ChainUpsets, PosetUpsets };
    Kind kind;
    int bound;

    static ModelClassSpec allGeometries(int maxWorlds) { return {Kind::AllGeometries, maxWorlds}; }
    static ModelClassSpec lineModels(int maxPoints) { return {Kind::LineModels, maxPoints}; }
    static ModelClassSpec chainUpsets(int maxWorlds) { return {Kind::ChainUpsets, maxWorlds}; }
    static ModelClassSpec posetUpsets(int maxWorlds) { return {Kind::PosetUpsets, maxWorlds}; }
};

inline constexpr int kAllGeometriesBound = 5;
inline constexpr int kLineModelsBound = 8;
inline constexpr int kPosetBound = 5;
inline constexpr long kDefaultBudget = 100000;

// Every emitted countermodel is re-evaluated to false before emission. Line
// countermodels are materialized as collinear plane models so that they can
// be checked by the plane evaluator directly.
struct Verdict {
    enum class Kind { Valid, Countermodel, Unknown };
    Kind kind = Kind::Unknown;
    bool exhaustive = false;  // Valid only: complete guarantee vs bounded sweep
    std::optional<AbstractModel> abstractCounter;
    std::optional<PlaneModel> planeCounter;
    std::string note;

    bool valid() const { return kind == Kind::Valid; }
    bool refuted() const { return kind == Kind::Countermodel; }
};

// Complete decision at up to two letters: the canonical world set of all
// assignments with the canonical valuation, over every convex geometry on it.
Verdict decideValiditySmall(const StepPtr& f);

// Bounded-exhaustive sweep over one model class; Valid verdicts are relative
// to the bound.
Verdict decideClassValidity(const StepPtr& f, const ModelClassSpec& cls);

// Randomized sound refuter: joins of random chains with random valuations.
// Deterministic for a fixed seed; Unknown on budget exhaustion.
Verdict findCountermodel(const StepPtr& f, long budget = kDefaultBudget, std::uint64_t seed = 0);

// Canonical assignment worlds over a letter set: one world per assignment,
// valuation V(p) = worlds where p holds.
struct CanonicalWorlds {
    std::vector<std::string> worlds;
    Valuation valuation;
};
CanonicalWorlds canonicalAssignmentWorlds(const std::vector<std::string>& letters);

}  // namespace condgeo

#endif
