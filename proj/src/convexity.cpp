#include "condgeo/convexity.hpp"

#include <algorithm>
#include <cassert>

namespace condgeo {

SetFamily normalizeFamily(SetFamily family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
}

bool familyContains(const SetFamily& family, const WorldSet& s) {
    return std::binary_search(family.begin(), family.end(), s);
}

bool ConvexGeometry::hasEmpty() const {
    return isConvex(WorldSet::empty(size()));
}

std::string Violation::describe(const std::vector<std::string>& worlds) const {
    auto fmt = [&](const WorldSet& s) {
        std::string out = "{";
        bool first = true;
        for (int i : s.members()) {
            if (!first) out += ",";
            out += worlds[i];
            first = false;
        }
        return out + "}";
    };
    switch (clause) {
        case Clause::FullSetMissing:
            return "the full ground set is not a member";
        case Clause::Intersection:
            return "intersection of " + fmt(a) + " and " + fmt(b) + " is not a member";
        case Clause::AntiExchange:
            return "anti-exchange fails for " + fmt(a) + " with " + worlds[x] + ", " + worlds[y];
    }
    return "";
}

std::variant<ConvexGeometry, Violation> validate(std::vector<std::string> worlds, SetFamily family) {
    const int n = static_cast<int>(worlds.size());
    family = normalizeFamily(std::move(family));
    const WorldSet full = WorldSet::full(n);

    if (!familyContains(family, full))
        return Violation{Violation::Clause::FullSetMissing, {}, {}, -1, -1};

    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            WorldSet meet = family[i] & family[j];
            if (!familyContains(family, meet))
                return Violation{Violation::Clause::Intersection, family[i], family[j], -1, -1};
        }

    for (const WorldSet& c : family) {
        WorldSet outside = c.complement();
        auto out = outside.members();
        for (std::size_t xi = 0; xi < out.size(); ++xi)
            for (std::size_t yi = xi + 1; yi < out.size(); ++yi) {
                int x = out[xi], y = out[yi];
                bool separated = false;
                for (const WorldSet& d : family) {
                    if (!c.isSubsetOf(d)) continue;
                    if (d.test(x) != d.test(y)) {
                        separated = true;
                        break;
                    }
                }
                if (!separated)
                    return Violation{Violation::Clause::AntiExchange, c, {}, x, y};
            }
    }

    return ConvexGeometry{std::move(worlds), std::move(family)};
}

ConvexGeometry makeGeometry(std::vector<std::string> worlds, SetFamily family) {
    auto result = validate(worlds, std::move(family));
    if (auto* violation = std::get_if<Violation>(&result))
        throw InputError("not a convex geometry: " + violation->describe(worlds));
    return std::get<ConvexGeometry>(std::move(result));
}

WorldSet hull(const ConvexGeometry& g, const WorldSet& x) {
    assert(x.width() == g.size());
    WorldSet acc = WorldSet::full(g.size());
    for (const WorldSet& c : g.convexSets)
        if (x.isSubsetOf(c)) acc &= c;
    return acc;
}

WorldSet extremePoints(const ConvexGeometry& g, const WorldSet& x) {
    WorldSet out(g.size());
    for (int i : x.members())
        if (!hull(g, x.without(i)).test(i)) out.set(i);
    return out;
}

SetFamily feasibleSets(const ConvexGeometry& g) {
    SetFamily out;
    out.reserve(g.convexSets.size());
    for (const WorldSet& c : g.convexSets) out.push_back(c.complement());
    return normalizeFamily(std::move(out));
}

ConvexGeometry relativeConvexity(const ConvexGeometry& g, const WorldSet& x) {
    assert(x.width() == g.size());
    auto keep = x.members();
    const int m = static_cast<int>(keep.size());

    std::vector<std::string> labels;
    labels.reserve(m);
    for (int i : keep) labels.push_back(g.worlds[i]);

    SetFamily traces;
    for (const WorldSet& c : g.convexSets) {
        WorldSet t(m);
        for (int j = 0; j < m; ++j)
            if (c.test(keep[j])) t.set(j);
        traces.push_back(t);
    }

    auto result = validate(std::move(labels), std::move(traces));
    if (std::holds_alternative<Violation>(result))
        throw InternalError("relative convexity is not a convex geometry");
    return std::get<ConvexGeometry>(std::move(result));
}

Poset makePoset(std::vector<std::string> elements, const std::vector<std::vector<bool>>& leq) {
    const int n = static_cast<int>(elements.size());
    if (static_cast<int>(leq.size()) != n)
        throw InputError("poset relation has wrong dimensions");
    for (const auto& row : leq)
        if (static_cast<int>(row.size()) != n)
            throw InputError("poset relation has wrong dimensions");

    for (int i = 0; i < n; ++i)
        if (!leq[i][i]) throw InputError("poset relation is not reflexive");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j && leq[i][j] && leq[j][i])
                throw InputError("poset relation is not antisymmetric");
            if (!leq[i][j]) continue;
            for (int k = 0; k < n; ++k)
                if (leq[j][k] && !leq[i][k]) throw InputError("poset relation is not transitive");
        }

    Poset p;
    p.elements = std::move(elements);
    p.upward.assign(n, WorldSet(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq[i][j]) p.upward[i].set(j);
    return p;
}

ConvexGeometry upsetConvexity(const Poset& p) {
    const int n = p.size();
    if (n > 20) throw BoundExceededError("upsetConvexity enumerates 2^n candidate sets; n > 20 refused");

    SetFamily upsets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        WorldSet s = WorldSet::fromMask(n, mask);
        bool closed = true;
        for (int i : s.members()) {
            if (!p.upward[i].isSubsetOf(s)) {
                closed = false;
                break;
            }
        }
        if (closed) upsets.push_back(s);
    }

    auto result = validate(p.elements, std::move(upsets));
    if (std::holds_alternative<Violation>(result))
        throw InternalError("upset convexity is not a convex geometry");
    return std::get<ConvexGeometry>(std::move(result));
}

SetFamily joinFamilies(const SetFamily& a, const SetFamily& b) {
    SetFamily out;
    out.reserve(a.size() * b.size());
    for (const WorldSet& c : a)
        for (const WorldSet& d : b) out.push_back(c & d);
    return normalizeFamily(std::move(out));
}

ConvexGeometry join(const ConvexGeometry& a, const ConvexGeometry& b) {
    if (a.worlds != b.worlds)
        throw GroundSetMismatchError("join requires identical ground sets");
    auto result = validate(a.worlds, joinFamilies(a.convexSets, b.convexSets));
    if (std::holds_alternative<Violation>(result))
        throw InternalError("join of convex geometries is not a convex geometry");
    return std::get<ConvexGeometry>(std::move(result));
}

// ---------------------------------------------------------------------------
// Enumeration. Subsets are processed by decreasing cardinality, so the
// intersection of two incomparable decided sets always lies further down the
// order and can be recorded as forced.
// ---------------------------------------------------------------------------

namespace {

struct Enumerator {
    int n;
    bool requireEmpty;
    const std::function<bool(const ConvexGeometry&)>& emit;
    const std::vector<std::string>& worlds;

    std::vector<std::uint32_t> order;        // subset masks, full set first
    std::vector<int> position;               // mask -> index in order
    std::vector<bool> forced;                // by order index
    std::vector<std::uint32_t> included;     // masks currently in the family
    bool stopped = false;

    bool hasAntiExchange(const std::vector<std::uint32_t>& family) const {
        for (std::uint32_t c : family) {
            std::uint32_t outside = ~c & ((std::uint32_t{1} << n) - 1);
            for (int x = 0; x < n; ++x) {
                if (!((outside >> x) & 1)) continue;
                for (int y = x + 1; y < n; ++y) {
                    if (!((outside >> y) & 1)) continue;
                    bool separated = false;
                    for (std::uint32_t d : family) {
                        if ((c & ~d) != 0) continue;  // need c subset of d
                        if (((d >> x) & 1) != ((d >> y) & 1)) {
                            separated = true;
                            break;
                        }
                    }
                    if (!separated) return false;
                }
            }
        }
        return true;
    }

    void finish() {
        if (requireEmpty &&
            std::find(included.begin(), included.end(), 0u) == included.end())
            return;
        if (!hasAntiExchange(included)) return;
        SetFamily family;
        family.reserve(included.size());
        for (std::uint32_t m : included) family.push_back(WorldSet::fromMask(n, m));
        ConvexGeometry g{worlds, normalizeFamily(std::move(family))};
        if (!emit(g)) stopped = true;
    }

    void recurse(std::size_t idx) {
        if (stopped) return;
        if (idx == order.size()) {
            finish();
            return;
        }
        std::uint32_t s = order[idx];

        // Branch: include s. Record intersections with current members as
        // forced; they all live at later positions.
        {
            std::vector<int> marked;
            for (std::uint32_t t : included) {
                std::uint32_t u = s & t;
                if (u == s || u == t) continue;
                int pu = position[u];
                assert(pu > static_cast<int>(idx));
                if (!forced[pu]) {
                    forced[pu] = true;
                    marked.push_back(pu);
                }
            }
            included.push_back(s);
            recurse(idx + 1);
            included.pop_back();
            for (int pu : marked) forced[pu] = false;
        }
        if (stopped) return;

        // Branch: exclude s, unless some earlier inclusion forces it.
        if (!forced[idx]) recurse(idx + 1);
    }
};

std::vector<std::string> canonicalWorlds(int n) {
    std::vector<std::string> w;
    w.reserve(n);
    for (int i = 0; i < n; ++i) w.push_back("w" + std::to_string(i));
    return w;
}

}  // namespace

void enumerateGeometries(std::vector<std::string> worlds, bool requireEmpty,
                         const std::function<bool(const ConvexGeometry&)>& emit) {
    const int n = static_cast<int>(worlds.size());
    if (n > kEnumerationBound)
        throw BoundExceededError("geometry enumeration is bounded at n = " +
                                 std::to_string(kEnumerationBound));

    const std::uint32_t total = std::uint32_t{1} << n;
    std::vector<std::uint32_t> order;
    for (std::uint32_t m = 0; m < total; ++m) order.push_back(m);
    std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa > pb;
        return a < b;
    });
    assert(order[0] == total - 1);

    std::vector<int> position(total, 0);
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);

    Enumerator e{n, requireEmpty, emit, worlds, std::move(order), std::move(position),
                 std::vector<bool>(total, false), {}, false};
    e.included.push_back(total - 1);  // W is always a member
    e.recurse(1);
}

void enumerateGeometries(int n, bool requireEmpty,
                         const std::function<bool(const ConvexGeometry&)>& emit) {
    enumerateGeometries(canonicalWorlds(n), requireEmpty, emit);
}

std::vector<ConvexGeometry> allGeometries(int n, bool requireEmpty) {
    std::vector<ConvexGeometry> out;
    enumerateGeometries(n, requireEmpty, [&](const ConvexGeometry& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

}  // namespace condgeo
