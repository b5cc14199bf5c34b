#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace condgeo;

namespace {

const std::vector<std::string> kSystemPFormulas = {
    "p ~> p",                                          // Id
    "(p ~> q) & (p ~> r) -> (p ~> q & r)",             // And
    "(p ~> q) & (p ~> r) -> (p & r ~> q)",             // CM
    "(p ~> q) & (r ~> q) -> (p | r ~> q)",             // Or
    "(p ~> q & r) -> (p & q ~> r)",                    // WCM
    "(p & q ~> r) -> (p ~> ~q | r)",                   // S
    "(p ~> q) & (p & q ~> r) -> (p ~> r)",             // CCut
    "(p ~> q) & (q ~> r) -> (p | q ~> r)",             // CCut'
};

std::vector<PropPtr> conditionalsAtoms() {
    return {mkLetter("p"), mkLetter("q"), mkNot(mkLetter("p")), mkNot(mkLetter("q"))};
}

}  // namespace

TEST_SUITE("semantics") {

TEST_CASE("nine-set model satisfies the six-conjunct formula") {
    AbstractModel m = fixtures::nineSetModel();
    StepPtr alpha = fixtures::sixConjunctFormula();
    for (Clause clause : {Clause::Extreme, Clause::General, Clause::Feasible})
        CHECK(evalOneStep(m, alpha, clause));

    // The six conjuncts one by one.
    auto cond = [&](const char* text) { return parse(text).level1(); };
    CHECK(evalOneStep(m, cond("T ~> p")));
    CHECK(evalOneStep(m, cond("q ~> p")));
    CHECK(evalOneStep(m, cond("~(p <-> q) ~> p")));
    CHECK(!evalOneStep(m, cond("~q ~> p")));
    CHECK(!evalOneStep(m, cond("(p <-> q) ~> p")));
    CHECK(!evalOneStep(m, cond("~p ~> ~q")));
}

TEST_CASE("identity conditional holds everywhere") {
    std::mt19937_64 rng(11);
    StepPtr id = parse("p ~> p").level1();
    for (int trial = 0; trial < 200; ++trial) {
        AbstractModel m = fixtures::randomModel(rng, 6, {"p"});
        CHECK(evalOneStep(m, id));
    }
}

TEST_CASE("antecedents inside the impossible core satisfy phi ~> F") {
    // Geometry on {a, b} whose every member contains b.
    ConvexGeometry g = makeGeometry({"a", "b"}, {WorldSet::fromMask(2, 0b10), WorldSet::fromMask(2, 0b11)});
    Valuation v;
    v["p"] = WorldSet::fromMask(2, 0b10);  // within the intersection of all members
    AbstractModel m = makeModel(g, v);
    for (Clause clause : {Clause::Extreme, Clause::General, Clause::Feasible})
        CHECK(evalConditional(m, mkLetter("p"), mkBot(), clause));
    CHECK(!evalConditional(m, mkTop(), mkBot(), Clause::Extreme));
}

TEST_CASE("the three clauses agree on small geometries, exhaustively") {
    auto atoms = conditionalsAtoms();
    for (int n = 1; n <= 3; ++n) {
        enumerateGeometries(n, false, [&](const ConvexGeometry& g) {
            for (std::uint32_t pm = 0; pm < (1u << n); ++pm)
                for (std::uint32_t qm = 0; qm < (1u << n); ++qm) {
                    Valuation v;
                    v["p"] = WorldSet::fromMask(n, pm);
                    v["q"] = WorldSet::fromMask(n, qm);
                    AbstractModel m{g, v};
                    for (const PropPtr& ant : atoms)
                        for (const PropPtr& cons : atoms) {
                            bool extreme = evalConditional(m, ant, cons, Clause::Extreme);
                            bool general = evalConditional(m, ant, cons, Clause::General);
                            bool feasible = evalConditional(m, ant, cons, Clause::Feasible);
                            CHECK(extreme == general);
                            CHECK(general == feasible);
                        }
                }
            return true;
        });
    }
}

TEST_CASE("the three clauses agree on four worlds, sampled valuations") {
    auto atoms = conditionalsAtoms();
    std::mt19937_64 rng(7);
    enumerateGeometries(4, false, [&](const ConvexGeometry& g) {
        for (int trial = 0; trial < 4; ++trial) {
            Valuation v;
            v["p"] = WorldSet::fromMask(4, rng() & 0xf);
            v["q"] = WorldSet::fromMask(4, rng() & 0xf);
            AbstractModel m{g, v};
            for (const PropPtr& ant : atoms)
                for (const PropPtr& cons : atoms) {
                    bool extreme = evalConditional(m, ant, cons, Clause::Extreme);
                    CHECK(extreme == evalConditional(m, ant, cons, Clause::General));
                    CHECK(extreme == evalConditional(m, ant, cons, Clause::Feasible));
                }
        }
        return true;
    });
}

TEST_CASE("soundness of System P on random models") {
    std::vector<StepPtr> formulas;
    for (const auto& text : kSystemPFormulas) formulas.push_back(parse(text).level1());

    std::mt19937_64 rng(20240818);
    for (int trial = 0; trial < 10000; ++trial) {
        AbstractModel m = fixtures::randomModel(rng, 6, {"p", "q", "r"});
        for (const StepPtr& f : formulas) CHECK(evalOneStep(m, f));
    }
}

TEST_CASE("semantic right weakening") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 2000; ++trial) {
        AbstractModel m = fixtures::randomModel(rng, 6, {"p", "q", "r"});
        PropPtr phi = mkLetter("p");
        PropPtr psi = mkAnd(mkLetter("q"), mkLetter("r"));
        PropPtr chi = mkLetter("q");  // psi implies chi pointwise
        REQUIRE(m.ext(psi).isSubsetOf(m.ext(chi)));
        if (evalConditional(m, phi, psi)) CHECK(evalConditional(m, phi, chi));
    }
}

TEST_CASE("poset bridge: upset semantics equals minimal-element semantics") {
    auto atoms = conditionalsAtoms();
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        int combos = 1;
        for (std::size_t t = 0; t < pairs.size(); ++t) combos *= 3;
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
                for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
                p = makePoset(names, leq);
            } catch (const InputError&) {
                continue;
            }
            ConvexGeometry g = upsetConvexity(p);
            for (std::uint32_t pm = 0; pm < (1u << n); ++pm)
                for (std::uint32_t qm = 0; qm < (1u << n); ++qm) {
                    Valuation v;
                    v["p"] = WorldSet::fromMask(n, pm);
                    v["q"] = WorldSet::fromMask(n, qm);
                    AbstractModel m{g, v};
                    for (const PropPtr& ant : atoms)
                        for (const PropPtr& cons : atoms) {
                            WorldSet a = m.ext(ant);
                            WorldSet co = m.ext(cons);
                            bool viaMinimal = true;
                            for (int x : a.members()) {
                                bool minimal = true;
                                for (int y : a.members())
                                    if (y != x && p.leq(y, x)) minimal = false;
                                if (minimal && !co.test(x)) viaMinimal = false;
                            }
                            CHECK(evalConditional(m, ant, cons) == viaMinimal);
                        }
                }
        }
    }
}

}  // TEST_SUITE
