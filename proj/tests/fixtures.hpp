#ifndef CONDGEO_TESTS_FIXTURES_HPP
#define CONDGEO_TESTS_FIXTURES_HPP

#include "condgeo/decomposition.hpp"
#include "condgeo/planar.hpp"
#include "condgeo/semantics.hpp"

namespace condgeo::fixtures {

// Four-world model with nine convex sets; worlds ordered pq, pq', p'q, p'q'.
inline ConvexGeometry nineSetGeometry() {
    std::vector<std::string> worlds{"pq", "pq'", "p'q", "p'q'"};
    SetFamily family;
    for (std::uint64_t mask : {0x0ull, 0x4ull, 0x8ull, 0x5ull, 0x6ull, 0xcull, 0xdull, 0xeull, 0xfull})
        family.push_back(WorldSet::fromMask(4, mask));
    return makeGeometry(std::move(worlds), std::move(family));
}

inline AbstractModel nineSetModel() {
    Valuation v;
    v["p"] = WorldSet::fromMask(4, 0b0011);  // pq, pq'
    v["q"] = WorldSet::fromMask(4, 0b0101);  // pq, p'q
    return makeModel(nineSetGeometry(), std::move(v));
}

// Three linear orders whose upset convexities join to the nine-set family;
// listed bottom to top.
inline std::vector<LinearOrder> nineSetChains() {
    return {
        {1, 3, 0, 2},  // pq' < p'q' < pq < p'q
        {0, 3, 1, 2},  // pq < p'q' < pq' < p'q
        {0, 1, 2, 3},  // pq < pq' < p'q < p'q'
    };
}

inline StepPtr sixConjunctFormula() {
    return parse("(T ~> p) & (q ~> p) & (~(p <-> q) ~> p) & ~(~q ~> p)"
                 " & ~((p <-> q) ~> p) & ~(~p ~> ~q)")
        .level1();
}

// Five points in the plane; x, y, z, u, v in this order.
inline PlaneModel fivePointModel() {
    std::vector<std::string> ids{"x", "y", "z", "u", "v"};
    std::vector<Point2> pts{
        {Rational(0), Rational(5)},
        {Rational(4), Rational(5)},
        {Rational(12, 5), Rational(3)},
        {Rational(19, 10), Rational(43, 10)},
        {Rational(6, 5), Rational(3, 2)},
    };
    Valuation v;
    v["p"] = WorldSet::fromMask(5, 0b01101);  // x, z, u
    v["q"] = WorldSet::fromMask(5, 0b01011);  // x, y, u
    v["r"] = WorldSet::fromMask(5, 0b00111);  // x, y, z
    return makePlaneModel(std::move(ids), std::move(pts), std::move(v));
}

inline std::vector<std::string> fivePointTrueConditionals() {
    return {"(p | q) ~> r", "(~p | ~q) ~> ~p", "T ~> (q <-> r)"};
}

inline std::vector<std::string> fivePointFalseConditionals() {
    return {"p ~> r", "~r ~> ~q", "T ~> r"};
}

// Joins of random chains are convex geometries with the empty set convex.
template <typename Rng>
ConvexGeometry randomChainJoinGeometry(Rng& rng, int n, int chainCount) {
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
    return ConvexGeometry{std::move(worlds), std::move(family)};
}

template <typename Rng>
AbstractModel randomModel(Rng& rng, int maxWorlds, const std::vector<std::string>& letters) {
    int n = 1 + static_cast<int>(rng() % maxWorlds);
    int chains = 1 + static_cast<int>(rng() % 3);
    ConvexGeometry g = randomChainJoinGeometry(rng, n, chains);
    Valuation v;
    for (const auto& letter : letters)
        v[letter] = WorldSet::fromMask(n, rng() & ((std::uint64_t{1} << n) - 1));
    return AbstractModel{std::move(g), std::move(v)};
}

}  // namespace condgeo::fixtures

#endif
