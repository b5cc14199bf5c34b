#include <doctest.h>

#include <cstdint>
#include <set>

#include "fixtures.hpp"

using namespace condgeo;

namespace {

// Brute-force check of the three axioms straight from their definitions, kept
// independent of validate() and of the enumeration DFS.
bool isConvexGeometryBruteForce(int n, const std::set<std::uint32_t>& family) {
    const std::uint32_t full = (1u << n) - 1;
    if (!family.count(full)) return false;
    for (std::uint32_t a : family)
        for (std::uint32_t b : family)
            if (!family.count(a & b)) return false;
    for (std::uint32_t c : family)
        for (int x = 0; x < n; ++x) {
            if ((c >> x) & 1) continue;
            for (int y = x + 1; y < n; ++y) {
                if ((c >> y) & 1) continue;
                bool separated = false;
                for (std::uint32_t d : family) {
                    if ((c & ~d) != 0) continue;
                    if (((d >> x) & 1) != ((d >> y) & 1)) separated = true;
                }
                if (!separated) return false;
            }
        }
    return true;
}

// All families over an n-element ground set, axioms checked directly.
std::pair<int, int> bruteForceCounts(int n) {
    const int subsets = 1 << n;
    const std::uint64_t familyCount = 1ull << subsets;
    int total = 0, withEmpty = 0;
    for (std::uint64_t bits = 0; bits < familyCount; ++bits) {
        std::set<std::uint32_t> family;
        for (int s = 0; s < subsets; ++s)
            if ((bits >> s) & 1) family.insert(static_cast<std::uint32_t>(s));
        if (!isConvexGeometryBruteForce(n, family)) continue;
        ++total;
        if (family.count(0)) ++withEmpty;
    }
    return {total, withEmpty};
}

WorldSet ws(int n, std::uint64_t mask) { return WorldSet::fromMask(n, mask); }

}  // namespace

TEST_SUITE("convexity") {

TEST_CASE("validate accepts the nine-set example") {
    auto result = validate({"pq", "pq'", "p'q", "p'q'"},
                           {ws(4, 0x0), ws(4, 0x4), ws(4, 0x8), ws(4, 0x5), ws(4, 0x6),
                            ws(4, 0xc), ws(4, 0xd), ws(4, 0xe), ws(4, 0xf)});
    REQUIRE(std::holds_alternative<ConvexGeometry>(result));
    CHECK(std::get<ConvexGeometry>(result).convexSets.size() == 9);
}

TEST_CASE("validate reports a missing intersection with a witness") {
    auto result = validate({"a", "b", "c"}, {ws(3, 0b111), ws(3, 0b001), ws(3, 0b010)});
    REQUIRE(std::holds_alternative<Violation>(result));
    const Violation& v = std::get<Violation>(result);
    CHECK(v.clause == Violation::Clause::Intersection);
    CHECK(((v.a == ws(3, 0b001) && v.b == ws(3, 0b010)) ||
           (v.a == ws(3, 0b010) && v.b == ws(3, 0b001))));
}

TEST_CASE("validate reports an anti-exchange violation with a witness") {
    auto result = validate({"a", "b"}, {ws(2, 0b11), ws(2, 0b00)});
    REQUIRE(std::holds_alternative<Violation>(result));
    const Violation& v = std::get<Violation>(result);
    CHECK(v.clause == Violation::Clause::AntiExchange);
    CHECK(v.a == ws(2, 0b00));
    CHECK(v.x == 0);
    CHECK(v.y == 1);
}

TEST_CASE("validate requires the full set") {
    auto result = validate({"a"}, {ws(1, 0b0)});
    REQUIRE(std::holds_alternative<Violation>(result));
    CHECK(std::get<Violation>(result).clause == Violation::Clause::FullSetMissing);
}

TEST_CASE("hull on the nine-set example") {
    ConvexGeometry g = fixtures::nineSetGeometry();
    CHECK(hull(g, ws(4, 0xf)) == ws(4, 0xf));
    CHECK(hull(g, ws(4, 0x0)) == ws(4, 0x0));      // empty set is a member here
    CHECK(hull(g, ws(4, 0b0001)) == ws(4, 0b0101)); // co({pq}) = {pq, p'q}
    CHECK(g.isConvex(hull(g, ws(4, 0b1001))));
}

TEST_CASE("extreme points of the nine-set example ground set") {
    ConvexGeometry g = fixtures::nineSetGeometry();
    // W minus pq and W minus pq' are members, the other co-singletons are not.
    CHECK(extremePoints(g, ws(4, 0xf)) == ws(4, 0b0011));
    CHECK(extremePoints(g, ws(4, 0x0)) == ws(4, 0x0));
}

TEST_CASE("extreme points match the intersection reformulation") {
    // ex(X) equals the intersection of all Y within X whose hull covers X.
    for (int n = 1; n <= 3; ++n) {
        enumerateGeometries(n, false, [&](const ConvexGeometry& g) {
            for (std::uint32_t xm = 0; xm < (1u << n); ++xm) {
                WorldSet x = ws(n, xm);
                WorldSet viaHull = WorldSet::full(n);
                for (std::uint32_t ym = 0; ym < (1u << n); ++ym) {
                    WorldSet y = ws(n, ym);
                    if (!y.isSubsetOf(x)) continue;
                    if (x.isSubsetOf(hull(g, y))) viaHull &= y;
                }
                CHECK(extremePoints(g, x) == viaHull);
            }
            return true;
        });
    }
}

TEST_CASE("smoothness equivalence") {
    for (int n = 1; n <= 3; ++n) {
        enumerateGeometries(n, false, [&](const ConvexGeometry& g) {
            for (std::uint32_t km = 0; km < (1u << n); ++km)
                for (std::uint32_t xm = 0; xm < (1u << n); ++xm) {
                    WorldSet k = ws(n, km), x = ws(n, xm);
                    bool lhs = extremePoints(g, k).isSubsetOf(x);
                    bool rhs = k.isSubsetOf(hull(g, k & x));
                    CHECK(lhs == rhs);
                }
            return true;
        });
    }
}

TEST_CASE("hull is a closure operator") {
    for (int n = 1; n <= 4; ++n) {
        enumerateGeometries(n, false, [&](const ConvexGeometry& g) {
            for (std::uint32_t xm = 0; xm < (1u << n); ++xm) {
                WorldSet x = ws(n, xm);
                WorldSet hx = hull(g, x);
                CHECK(x.isSubsetOf(hx));
                CHECK(hull(g, hx) == hx);
                for (std::uint32_t ym = xm;; ym = (ym + 1) | xm) {  // supersets of x
                    if (ym >= (1u << n)) break;
                    if ((ym & xm) == xm) CHECK(hx.isSubsetOf(hull(g, ws(n, ym))));
                    if (ym == (1u << n) - 1) break;
                }
            }
            return true;
        });
    }
}

TEST_CASE("feasible sets are the complements") {
    ConvexGeometry g = fixtures::nineSetGeometry();
    SetFamily feasible = feasibleSets(g);
    CHECK(feasible.size() == 9);
    CHECK(familyContains(feasible, ws(4, 0x0)));
    CHECK(familyContains(feasible, ws(4, 0xf)));
    // Double complement gives back the original family.
    SetFamily back;
    for (const WorldSet& f : feasible) back.push_back(f.complement());
    CHECK(normalizeFamily(back) == g.convexSets);
}

TEST_CASE("relative convexity") {
    ConvexGeometry g = fixtures::nineSetGeometry();
    SUBCASE("on the whole ground set it is the identity") {
        CHECK(relativeConvexity(g, ws(4, 0xf)) == g);
    }
    SUBCASE("on the empty set") {
        ConvexGeometry r = relativeConvexity(g, ws(4, 0x0));
        CHECK(r.size() == 0);
        CHECK(r.convexSets == SetFamily{WorldSet(0)});
    }
    SUBCASE("traces always validate") {
        for (std::uint32_t xm = 0; xm < 16; ++xm)
            CHECK_NOTHROW(relativeConvexity(g, ws(4, xm)));
    }
}

TEST_CASE("upset convexity of small posets") {
    SUBCASE("two-element antichain has all four subsets") {
        Poset p = makePoset({"a", "b"}, {{true, false}, {false, true}});
        CHECK(upsetConvexity(p).convexSets.size() == 4);
    }
    SUBCASE("two-chain a < b") {
        Poset p = makePoset({"a", "b"}, {{true, true}, {false, true}});
        ConvexGeometry g = upsetConvexity(p);
        SetFamily expected{ws(2, 0b00), ws(2, 0b10), ws(2, 0b11)};
        CHECK(g.convexSets == normalizeFamily(expected));
    }
    SUBCASE("a four-element chain has five nested upsets") {
        // pq' < p'q' < pq < p'q over elements ordered pq, pq', p'q, p'q'.
        std::vector<int> rankBottomUp{1, 3, 0, 2};
        std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) leq[rankBottomUp[i]][rankBottomUp[j]] = true;
        Poset p = makePoset({"pq", "pq'", "p'q", "p'q'"}, leq);
        ConvexGeometry g = upsetConvexity(p);
        SetFamily expected{ws(4, 0x0), ws(4, 0b0100), ws(4, 0b0101), ws(4, 0b1101), ws(4, 0xf)};
        CHECK(g.convexSets == normalizeFamily(expected));
    }
}

TEST_CASE("upset extreme points are the minimal elements") {
    // Exhaustive over posets on up to 3 elements via relation matrices.
    for (int n = 1; n <= 3; ++n) {
        int pairCount = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        int combos = 1;
        for (int t = 0; t < pairCount; ++t) combos *= 3;
        for (int code = 0; code < combos; ++code) {
            std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
            for (int i = 0; i < n; ++i) leq[i][i] = true;
            int c = code;
            for (const auto& [i, j] : pairs) {
                int choice = c % 3;
                c /= 3;
                if (choice == 1) leq[i][j] = true;
                if (choice == 2) leq[j][i] = true;
            }
            Poset p;
            try {
                std::vector<std::string> names;
                for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
                p = makePoset(names, leq);
            } catch (const InputError&) {
                continue;  // not transitive
            }
            ConvexGeometry g = upsetConvexity(p);
            for (std::uint32_t xm = 0; xm < (1u << n); ++xm) {
                WorldSet x = ws(n, xm);
                WorldSet minimal(n);
                for (int i : x.members()) {
                    bool isMin = true;
                    for (int j : x.members())
                        if (j != i && p.leq(j, i)) isMin = false;
                    if (isMin) minimal.set(i);
                }
                CHECK(extremePoints(g, x) == minimal);
            }
        }
    }
}

TEST_CASE("join basics") {
    ConvexGeometry g = fixtures::nineSetGeometry();
    ConvexGeometry identity{g.worlds, {ws(4, 0xf)}};
    CHECK(join(g, identity) == g);
    CHECK(join(g, g) == g);

    ConvexGeometry other{{"a"}, {ws(1, 1)}};
    CHECK_THROWS_AS(join(g, other), GroundSetMismatchError);
}

TEST_CASE("join of the three chains gives the nine-set example") {
    ConvexGeometry g = fixtures::nineSetGeometry();
    auto chains = fixtures::nineSetChains();
    ConvexGeometry acc{g.worlds, {ws(4, 0xf)}};
    for (const LinearOrder& order : chains)
        acc = join(acc, chainUpsetGeometry(g, order));
    CHECK(acc == g);
}

TEST_CASE("join is associative, commutative, idempotent") {
    auto geometries = allGeometries(2, false);
    REQUIRE(geometries.size() == 6);
    for (const auto& a : geometries)
        for (const auto& b : geometries) {
            CHECK(join(a, b) == join(b, a));
            CHECK(join(a, a) == a);
            for (const auto& c : geometries)
                CHECK(join(join(a, b), c) == join(a, join(b, c)));
        }
}

TEST_CASE("enumeration counts for n = 1 and n = 2") {
    CHECK(allGeometries(1, false).size() == 2);
    CHECK(allGeometries(1, true).size() == 1);
    CHECK(allGeometries(2, false).size() == 6);
    CHECK(allGeometries(2, true).size() == 3);
}

TEST_CASE("enumeration agrees with brute force on n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        auto [total, withEmpty] = bruteForceCounts(n);
        CHECK(static_cast<int>(allGeometries(n, false).size()) == total);
        CHECK(static_cast<int>(allGeometries(n, true).size()) == withEmpty);
    }
}

TEST_CASE("every enumerated geometry passes validate and is unique") {
    for (int n = 1; n <= 4; ++n) {
        std::set<SetFamily> seen;
        enumerateGeometries(n, false, [&](const ConvexGeometry& g) {
            CHECK(std::holds_alternative<ConvexGeometry>(validate(g.worlds, g.convexSets)));
            CHECK(seen.insert(g.convexSets).second);
            return true;
        });
    }
}

TEST_CASE("enumeration bound") {
    CHECK_THROWS_AS(enumerateGeometries(6, false, [](const ConvexGeometry&) { return true; }),
                    BoundExceededError);
}

}  // TEST_SUITE
