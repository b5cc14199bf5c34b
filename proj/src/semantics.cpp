#include "condgeo/semantics.hpp"

namespace condgeo {

AbstractModel makeModel(ConvexGeometry geometry, Valuation valuation) {
    const int n = geometry.size();
    for (const auto& [letter, set] : valuation)
        if (set.width() != n)
            throw InputError("valuation of '" + letter + "' does not match the ground set");
    return AbstractModel{std::move(geometry), std::move(valuation)};
}

namespace {

// For all C with ant not within C there is a D above C that still misses part
// of ant and covers ant up to cons.
bool generalClause(const ConvexGeometry& g, const WorldSet& ant, const WorldSet& cons) {
    for (const WorldSet& c : g.convexSets) {
        if (ant.isSubsetOf(c)) continue;
        bool found = false;
        for (const WorldSet& d : g.convexSets) {
            if (!c.isSubsetOf(d) || ant.isSubsetOf(d)) continue;
            if (ant.minus(d).isSubsetOf(cons)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// The dual clause over the feasible sets.
bool feasibleClause(const ConvexGeometry& g, const WorldSet& ant, const WorldSet& cons) {
    SetFamily feasible = feasibleSets(g);
    for (const WorldSet& f : feasible) {
        if (!f.intersects(ant)) continue;
        bool found = false;
        for (const WorldSet& gset : feasible) {
            if (!gset.isSubsetOf(f) || !gset.intersects(ant)) continue;
            if ((gset & ant).isSubsetOf(cons)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

bool evalConditional(const AbstractModel& m, const PropPtr& ant, const PropPtr& cons, Clause clause) {
    WorldSet a = m.ext(ant);
    WorldSet c = m.ext(cons);
    switch (clause) {
        case Clause::General: return generalClause(m.geometry, a, c);
        case Clause::Feasible: return feasibleClause(m.geometry, a, c);
        case Clause::Extreme: return extremePoints(m.geometry, a).isSubsetOf(c);
    }
    throw InternalError("unreachable");
}

bool evalOneStep(const AbstractModel& m, const StepPtr& f, Clause clause) {
    switch (f->kind) {
        case StepKind::Cond: return evalConditional(m, f->ant, f->cons, clause);
        case StepKind::Not: return !evalOneStep(m, f->lhs, clause);
        case StepKind::And: return evalOneStep(m, f->lhs, clause) && evalOneStep(m, f->rhs, clause);
        case StepKind::Or: return evalOneStep(m, f->lhs, clause) || evalOneStep(m, f->rhs, clause);
        case StepKind::Implies: return !evalOneStep(m, f->lhs, clause) || evalOneStep(m, f->rhs, clause);
        case StepKind::Iff: return evalOneStep(m, f->lhs, clause) == evalOneStep(m, f->rhs, clause);
    }
    throw InternalError("unreachable");
}

}  // namespace condgeo
