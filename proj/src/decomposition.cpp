#include "condgeo/decomposition.hpp"

#include <algorithm>

namespace condgeo {

namespace {

struct ShellingDfs {
    const ConvexGeometry& g;
    const std::function<bool(const LinearOrder&)>& emit;
    LinearOrder removal;
    bool stopped = false;

    void run(const WorldSet& remaining) {
        if (stopped) return;
        if (remaining.none()) {
            if (!emit(removal)) stopped = true;
            return;
        }
        for (int i : extremePoints(g, remaining).members()) {
            removal.push_back(i);
            run(remaining.without(i));
            removal.pop_back();
            if (stopped) return;
        }
    }
};

}  // namespace

void shellingOrders(const ConvexGeometry& g, const std::function<bool(const LinearOrder&)>& emit) {
    if (!g.hasEmpty())
        throw EmptySetRequiredError("shelling orders require the empty set to be convex");
    ShellingDfs dfs{g, emit, {}, false};
    dfs.run(WorldSet::full(g.size()));
}

std::vector<LinearOrder> allShellingOrders(const ConvexGeometry& g) {
    std::vector<LinearOrder> out;
    shellingOrders(g, [&](const LinearOrder& o) {
        out.push_back(o);
        return true;
    });
    return out;
}

SetFamily chainUpsetFamily(int n, const LinearOrder& order) {
    SetFamily family;
    family.reserve(n + 1);
    WorldSet acc(n);
    family.push_back(acc);
    // Suffixes of the bottom-to-top list: upward closed sets of the chain.
    for (int k = n - 1; k >= 0; --k) {
        acc.set(order[k]);
        family.push_back(acc);
    }
    return normalizeFamily(std::move(family));
}

ConvexGeometry chainUpsetGeometry(const ConvexGeometry& g, const LinearOrder& order) {
    return ConvexGeometry{g.worlds, chainUpsetFamily(g.size(), order)};
}

std::vector<LinearOrder> decompose(const ConvexGeometry& g) {
    if (!g.hasEmpty())
        throw EmptySetRequiredError("decomposition requires the empty set to be convex");

    const int n = g.size();
    std::vector<LinearOrder> chains;
    SetFamily current{WorldSet::full(n)};  // identity of the join

    if (n == 0) return chains;

    bool done = false;
    shellingOrders(g, [&](const LinearOrder& order) {
        SetFamily joined = joinFamilies(current, chainUpsetFamily(n, order));
        if (joined != current) {
            chains.push_back(order);
            current = std::move(joined);
        }
        if (current == g.convexSets) {
            done = true;
            return false;
        }
        return true;
    });

    if (!done)
        throw InternalError("shelling orders exhausted before the join reached the input family");
    return chains;
}

}  // namespace condgeo
