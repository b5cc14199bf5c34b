#ifndef CONDGEO_DECOMPOSITION_HPP
#define CONDGEO_DECOMPOSITION_HPP

#include "condgeo/convexity.hpp"

namespace condgeo {

// Linear order on the full ground set, listed bottom to top. A shelling
// order removes an extreme point of the remaining set at each step; the
// removal sequence read in order is the chain from least to greatest.
using LinearOrder = std::vector<int>;

// Emits every shelling order exactly once, in lexicographic order of the
// bottom-to-top lists. Requires the empty set to be convex. Return false
// from the callback to stop.
void shellingOrders(const ConvexGeometry& g, const std::function<bool(const LinearOrder&)>& emit);

std::vector<LinearOrder> allShellingOrders(const ConvexGeometry& g);

// Upward closed sets of the chain (suffix sets plus the empty set).
SetFamily chainUpsetFamily(int n, const LinearOrder& order);
ConvexGeometry chainUpsetGeometry(const ConvexGeometry& g, const LinearOrder& order);

// Greedy cover: walk the shelling stream, keep a chain iff it grows the
// running join, stop once the join equals the input family. The result's
// upset convexities join back to exactly the input geometry.
std::vector<LinearOrder> decompose(const ConvexGeometry& g);

}  // namespace condgeo

#endif
