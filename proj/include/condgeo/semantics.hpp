#ifndef CONDGEO_SEMANTICS_HPP
#define CONDGEO_SEMANTICS_HPP

#include "condgeo/convexity.hpp"
#include "condgeo/formula.hpp"

namespace condgeo {

// Model based on a finite convex geometry. Truth of one-step formulas is
// model-global; there is no world of evaluation.
struct AbstractModel {
    ConvexGeometry geometry;
    Valuation valuation;

    int size() const { return geometry.size(); }
    WorldSet ext(const PropPtr& f) const { return extension(f, size(), valuation); }
};

AbstractModel makeModel(ConvexGeometry geometry, Valuation valuation);

// Three equivalent readings of the semantic clause for the conditional.
// Extreme is the default: all models here are finite.
enum class Clause { General, Feasible, Extreme };

bool evalConditional(const AbstractModel& m, const PropPtr& ant, const PropPtr& cons,
                     Clause clause = Clause::Extreme);

bool evalOneStep(const AbstractModel& m, const StepPtr& f, Clause clause = Clause::Extreme);

}  // namespace condgeo

#endif
