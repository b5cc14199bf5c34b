#include "condgeo/solver.hpp"

#include <algorithm>
#include <random>

namespace condgeo {

CanonicalWorlds canonicalAssignmentWorlds(const std::vector<std::string>& letters) {
    const int k = static_cast<int>(letters.size());
    const int n = 1 << k;

    CanonicalWorlds out;
    for (int mask = 0; mask < n; ++mask) {
        if (k == 0) {
            out.worlds.push_back("w");
            break;
        }
        std::string id;
        for (int i = 0; i < k; ++i) {
            if (i) id += ",";
            id += (mask >> i) & 1 ? letters[i] : "~" + letters[i];
        }
        out.worlds.push_back(id);
    }
    for (int i = 0; i < k; ++i) {
        WorldSet v(n);
        for (int mask = 0; mask < n; ++mask)
            if ((mask >> i) & 1) v.set(mask);
        out.valuation[letters[i]] = v;
    }
    return out;
}

Verdict decideValiditySmall(const StepPtr& f) {
    std::vector<std::string> letters = lettersOf(f);
    if (letters.size() > 2)
        throw TooManyLettersError("complete decision is available for at most two letters");

    CanonicalWorlds canon = canonicalAssignmentWorlds(letters);

    Verdict verdict;
    verdict.kind = Verdict::Kind::Valid;
    verdict.exhaustive = true;
    verdict.note = "every convex geometry on the canonical assignment worlds";

    enumerateGeometries(canon.worlds, false, [&](const ConvexGeometry& g) {
        AbstractModel model{g, canon.valuation};
        if (!evalOneStep(model, f)) {
            if (evalOneStep(model, f)) throw InternalError("countermodel failed re-evaluation");
            verdict.kind = Verdict::Kind::Countermodel;
            verdict.exhaustive = false;
            verdict.abstractCounter = std::move(model);
            verdict.note = "canonical-world countermodel";
            return false;
        }
        return true;
    });
    return verdict;
}

namespace {

// Boolean skeleton evaluation with a pluggable conditional reading.
template <typename CondEval>
bool evalWith(const StepPtr& f, const CondEval& cond) {
    switch (f->kind) {
        case StepKind::Cond: return cond(f->ant, f->cons);
        case StepKind::Not: return !evalWith(f->lhs, cond);
        case StepKind::And: return evalWith(f->lhs, cond) && evalWith(f->rhs, cond);
        case StepKind::Or: return evalWith(f->lhs, cond) || evalWith(f->rhs, cond);
        case StepKind::Implies: return !evalWith(f->lhs, cond) || evalWith(f->rhs, cond);
        case StepKind::Iff: return evalWith(f->lhs, cond) == evalWith(f->rhs, cond);
    }
    throw InternalError("unreachable");
}

std::vector<std::string> positionIds(int k, const std::string& prefix) {
    std::vector<std::string> ids;
    for (int i = 0; i < k; ++i) ids.push_back(prefix + std::to_string(i));
    return ids;
}

Valuation profileValuation(const std::vector<std::string>& letters, const std::vector<int>& profiles) {
    const int k = static_cast<int>(profiles.size());
    Valuation v;
    for (std::size_t li = 0; li < letters.size(); ++li) {
        WorldSet s(k);
        for (int pos = 0; pos < k; ++pos)
            if ((profiles[pos] >> li) & 1) s.set(pos);
        v[letters[li]] = s;
    }
    return v;
}

// Left-to-right letter-profile sequences determine line models completely.
// Extreme points of a nonempty set on the line are its two endpoints.
Verdict sweepLineModels(const StepPtr& f, const std::vector<std::string>& letters, int bound) {
    const int profileCount = 1 << letters.size();

    for (int k = 1; k <= bound; ++k) {
        std::vector<int> profiles(k, 0);
        for (;;) {
            // Reflection is a convexity isomorphism; keep one representative.
            bool canonical = true;
            for (int i = 0, j = k - 1; i < j; ++i, --j) {
                if (profiles[i] != profiles[j]) {
                    canonical = profiles[i] < profiles[j];
                    break;
                }
            }
            if (canonical) {
                Valuation v = profileValuation(letters, profiles);
                auto cond = [&](const PropPtr& ant, const PropPtr& cons) {
                    WorldSet a = extension(ant, k, v);
                    if (a.none()) return true;
                    WorldSet c = extension(cons, k, v);
                    auto ms = a.members();
                    return c.test(ms.front()) && c.test(ms.back());
                };
                if (!evalWith(f, cond)) {
                    std::vector<Point2> pts;
                    for (int i = 0; i < k; ++i) pts.push_back({Rational(i), Rational(0)});
                    PlaneModel counter = makePlaneModel(positionIds(k, "x"), std::move(pts), v);
                    if (evalPlane(counter, f))
                        throw InternalError("line countermodel failed plane re-evaluation");
                    Verdict verdict;
                    verdict.kind = Verdict::Kind::Countermodel;
                    verdict.planeCounter = std::move(counter);
                    verdict.note = "line model with " + std::to_string(k) + " points";
                    return verdict;
                }
            }
            int pos = 0;
            while (pos < k && ++profiles[pos] == profileCount) profiles[pos++] = 0;
            if (pos == k) break;
        }
    }
    Verdict verdict;
    verdict.kind = Verdict::Kind::Valid;
    verdict.note = "no countermodel among line models with at most " + std::to_string(bound) +
                   " points (bounded)";
    return verdict;
}

Poset chainPoset(int k) {
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) leq[i][j] = true;
    return makePoset(positionIds(k, "c"), leq);
}

// On a chain the extreme points of a set form the singleton of its minimum.
Verdict sweepChainUpsets(const StepPtr& f, const std::vector<std::string>& letters, int bound) {
    const int profileCount = 1 << letters.size();

    for (int k = 1; k <= bound; ++k) {
        std::vector<int> profiles(k, 0);
        for (;;) {
            Valuation v = profileValuation(letters, profiles);
            auto cond = [&](const PropPtr& ant, const PropPtr& cons) {
                WorldSet a = extension(ant, k, v);
                if (a.none()) return true;
                return extension(cons, k, v).test(a.members().front());
            };
            if (!evalWith(f, cond)) {
                AbstractModel counter{upsetConvexity(chainPoset(k)), v};
                if (evalOneStep(counter, f))
                    throw InternalError("chain countermodel failed re-evaluation");
                Verdict verdict;
                verdict.kind = Verdict::Kind::Countermodel;
                verdict.abstractCounter = std::move(counter);
                verdict.note = "chain model with " + std::to_string(k) + " worlds";
                return verdict;
            }
            int pos = 0;
            while (pos < k && ++profiles[pos] == profileCount) profiles[pos++] = 0;
            if (pos == k) break;
        }
    }
    Verdict verdict;
    verdict.kind = Verdict::Kind::Valid;
    verdict.note = "no countermodel among chain models with at most " + std::to_string(bound) +
                   " worlds (bounded)";
    return verdict;
}

template <typename Fn>
void forEachPoset(int n, const Fn& fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<int> choice(pairs.size(), 0);  // 0 incomparable, 1 i<j, 2 j<i
    for (;;) {
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i) leq[i][i] = true;
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            if (choice[t] == 1) leq[pairs[t].first][pairs[t].second] = true;
            if (choice[t] == 2) leq[pairs[t].second][pairs[t].first] = true;
        }
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i)
            for (int j = 0; j < n && transitive; ++j) {
                if (!leq[i][j]) continue;
                for (int k = 0; k < n; ++k)
                    if (leq[j][k] && !leq[i][k]) {
                        transitive = false;
                        break;
                    }
            }
        if (transitive) fn(leq);

        std::size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] == 3) choice[pos++] = 0;
        if (pos == choice.size()) break;
    }
}

Verdict sweepPosetUpsets(const StepPtr& f, const std::vector<std::string>& letters, int bound) {
    const int profileCount = 1 << letters.size();

    for (int n = 1; n <= bound; ++n) {
        std::optional<Verdict> found;
        forEachPoset(n, [&](const std::vector<std::vector<bool>>& leq) {
            if (found) return;
            Poset p = makePoset(positionIds(n, "v"), leq);
            std::vector<int> profiles(n, 0);
            for (;;) {
                Valuation v = profileValuation(letters, profiles);
                auto cond = [&](const PropPtr& ant, const PropPtr& cons) {
                    WorldSet a = extension(ant, n, v);
                    if (a.none()) return true;
                    WorldSet c = extension(cons, n, v);
                    for (int x : a.members()) {
                        bool minimal = true;
                        for (int y : a.members())
                            if (y != x && p.leq(y, x)) {
                                minimal = false;
                                break;
                            }
                        if (minimal && !c.test(x)) return false;
                    }
                    return true;
                };
                if (!evalWith(f, cond)) {
                    AbstractModel counter{upsetConvexity(p), v};
                    if (evalOneStep(counter, f))
                        throw InternalError("poset countermodel failed re-evaluation");
                    Verdict verdict;
                    verdict.kind = Verdict::Kind::Countermodel;
                    verdict.abstractCounter = std::move(counter);
                    verdict.note = "poset model with " + std::to_string(n) + " worlds";
                    found = std::move(verdict);
                    return;
                }
                int pos = 0;
                while (pos < n && ++profiles[pos] == profileCount) profiles[pos++] = 0;
                if (pos == n) break;
            }
        });
        if (found) return *found;
    }
    Verdict verdict;
    verdict.kind = Verdict::Kind::Valid;
    verdict.note = "no countermodel among poset models with at most " + std::to_string(bound) +
                   " worlds (bounded)";
    return verdict;
}

Verdict sweepAllGeometries(const StepPtr& f, const std::vector<std::string>& letters, int bound) {
    for (int n = 1; n <= bound; ++n) {
        std::optional<Verdict> found;
        enumerateGeometries(n, false, [&](const ConvexGeometry& g) {
            std::vector<int> masks(letters.size(), 0);
            const int maskCount = 1 << n;
            for (;;) {
                Valuation v;
                for (std::size_t li = 0; li < letters.size(); ++li)
                    v[letters[li]] = WorldSet::fromMask(n, static_cast<std::uint64_t>(masks[li]));
                AbstractModel model{g, std::move(v)};
                if (!evalOneStep(model, f)) {
                    if (evalOneStep(model, f)) throw InternalError("countermodel failed re-evaluation");
                    Verdict verdict;
                    verdict.kind = Verdict::Kind::Countermodel;
                    verdict.abstractCounter = std::move(model);
                    verdict.note = "geometry with " + std::to_string(n) + " worlds";
                    found = std::move(verdict);
                    return false;
                }
                std::size_t pos = 0;
                while (pos < masks.size() && ++masks[pos] == maskCount) masks[pos++] = 0;
                if (pos == masks.size()) break;
            }
            return true;
        });
        if (found) return *found;
    }
    Verdict verdict;
    verdict.kind = Verdict::Kind::Valid;
    verdict.note = "no countermodel among geometries with at most " + std::to_string(bound) +
                   " worlds (bounded)";
    return verdict;
}

}  // namespace

Verdict decideClassValidity(const StepPtr& f, const ModelClassSpec& cls) {
    std::vector<std::string> letters = lettersOf(f);
    if (cls.bound < 1) throw BoundExceededError("class bound must be at least 1");

    switch (cls.kind) {
        case ModelClassSpec::Kind::AllGeometries:
            if (cls.bound > kAllGeometriesBound)
                throw BoundExceededError("AllGeometries bound exceeds " +
                                         std::to_string(kAllGeometriesBound));
            return sweepAllGeometries(f, letters, cls.bound);
        case ModelClassSpec::Kind::LineModels:
            if (cls.bound > kLineModelsBound)
                throw BoundExceededError("LineModels bound exceeds " +
                                         std::to_string(kLineModelsBound));
            return sweepLineModels(f, letters, cls.bound);
        case ModelClassSpec::Kind::ChainUpsets:
            if (cls.bound > kPosetBound)
                throw BoundExceededError("ChainUpsets bound exceeds " + std::to_string(kPosetBound));
            return sweepChainUpsets(f, letters, cls.bound);
        case ModelClassSpec::Kind::PosetUpsets:
            if (cls.bound > kPosetBound)
                throw BoundExceededError("PosetUpsets bound exceeds " + std::to_string(kPosetBound));
            return sweepPosetUpsets(f, letters, cls.bound);
    }
    throw InternalError("unreachable");
}

Verdict findCountermodel(const StepPtr& f, long budget, std::uint64_t seed) {
    std::vector<std::string> letters = lettersOf(f);
    std::mt19937_64 rng(seed);

    for (long iter = 0; iter < budget; ++iter) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const int chainCount = 2 + static_cast<int>(rng() % 3);

        SetFamily family{WorldSet::full(n)};
        LinearOrder base(n);
        for (int i = 0; i < n; ++i) base[i] = i;
        for (int c = 0; c < chainCount; ++c) {
            LinearOrder order = base;
            std::shuffle(order.begin(), order.end(), rng);
            family = joinFamilies(family, chainUpsetFamily(n, order));
        }

        std::vector<std::string> worlds;
        for (int i = 0; i < n; ++i) worlds.push_back("w" + std::to_string(i));
        ConvexGeometry g{std::move(worlds), std::move(family)};

        // Letter extensions are biased small; countermodels in this logic
        // tend to have few witnesses per letter.
        Valuation v;
        for (const auto& letter : letters) {
            WorldSet s(n);
            int size = 1;
            while (size < n && rng() % 2) ++size;
            for (int k = 0; k < size; ++k) s.set(static_cast<int>(rng() % n));
            v[letter] = s;
        }

        AbstractModel model{std::move(g), std::move(v)};
        if (!evalOneStep(model, f)) {
            if (evalOneStep(model, f)) throw InternalError("countermodel failed re-evaluation");
            Verdict verdict;
            verdict.kind = Verdict::Kind::Countermodel;
            verdict.abstractCounter = std::move(model);
            verdict.note = "randomized search, iteration " + std::to_string(iter);
            return verdict;
        }
    }

    Verdict verdict;
    verdict.kind = Verdict::Kind::Unknown;
    verdict.note = "budget of " + std::to_string(budget) + " iterations exhausted";
    return verdict;
}

}  // namespace condgeo
