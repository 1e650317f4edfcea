#include <doctest.h>

#include "boundsat/dimacs.hpp"
#include "boundsat/oracle.hpp"
#include "boundsat/solver.hpp"
#include "helpers.hpp"

using namespace boundsat;

namespace {
CnfFormula psi() { return parse_dimacs("p cnf 2 2\n1 2 0\n-1 2 0\n"); }
} // namespace

TEST_CASE("psi is SAT with b=true under the static heuristic") {
    SolveResult res = Solver().solve(psi());
    REQUIRE(res.sat);
    CHECK(res.model.get(2) == Value::True);
    CHECK(evaluate(psi(), res.model) == EvalResult::Sat);
    // static mode decides the lowest-index variable, negative phase
    REQUIRE_FALSE(res.decision_sequence.empty());
    CHECK(res.decision_sequence.front() == -1);
}

TEST_CASE("direct contradiction is UNSAT at level 0") {
    SolveResult res = Solver().solve(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n"));
    CHECK_FALSE(res.sat);
    CHECK(res.stats.decisions == 0);
    CHECK(res.final_conflict_vars == std::vector<int>{1});
}

TEST_CASE("empty clause is UNSAT") {
    CnfFormula f;
    f.num_vars = 1;
    f.clauses = {Clause(std::vector<Lit>{})};
    CHECK_FALSE(Solver().solve(f).sat);
}

TEST_CASE("replaying the paper's conflicting assignment learns the unit clause (b)") {
    // Decide b=false; (a|b) propagates a=true; (~a|b) conflicts. First-UIP
    // resolution of (~a|b) with (a|b) on a yields the unit clause (b).
    SolverConfig cfg;
    cfg.forced_decisions = {-2};
    SolveResult res = Solver().solve(psi(), cfg);
    REQUIRE(res.sat);
    CHECK(res.model.get(2) == Value::True);
    CHECK(res.stats.conflicts == 1);
    REQUIRE(res.learned.size() == 1);
    CHECK(res.learned[0].clause == Clause({Lit(2, true)}));
    CHECK(res.learned[0].backjump_level == 0);
    CHECK(res.learned[0].asserting == Lit(2, true));
}

TEST_CASE("first-UIP on the chain example learns (~x4)") {
    // {(~x1|x2), (~x1|x3), (~x2|~x3|x4), (~x4|x5), (~x4|~x5)}, decide x1.
    CnfFormula f = parse_dimacs("p cnf 5 5\n-1 2 0\n-1 3 0\n-2 -3 4 0\n-4 5 0\n-4 -5 0\n");
    SolverConfig cfg;
    cfg.forced_decisions = {1};
    SolveResult res = Solver().solve(f, cfg);
    REQUIRE(res.sat);
    REQUIRE(res.learned.size() >= 1);
    CHECK(res.learned[0].clause == Clause({Lit(4, false)}));
    CHECK(res.learned[0].backjump_level == 0);
    CHECK(entails(f, res.learned[0].clause));
}

TEST_CASE("unit propagation: alpha with a,b,c false implies d") {
    CnfFormula f = parse_dimacs("p cnf 4 4\n1 2 3 4 0\n-1 0\n-2 0\n-3 0\n");
    SolveResult res = Solver().solve(f);
    REQUIRE(res.sat);
    CHECK(res.model.get(4) == Value::True);
    CHECK(res.stats.decisions == 0); // everything forced at level 0
}

TEST_CASE("learned clauses are asserting and entailed") {
    std::mt19937_64 rng(0x5eed03);
    for (int i = 0; i < 50; ++i) {
        CnfFormula f = testutil::random_3cnf(rng, 6, 30); // UNSAT-biased ratio
        SolveResult res = Solver().solve(f);
        for (const LearnedClauseRecord& rec : res.learned) {
            int at_conflict_level = 0;
            for (int lv : rec.levels)
                if (lv == rec.conflict_level) ++at_conflict_level;
            CHECK(at_conflict_level == 1);
            CHECK(entails(f, rec.clause));
            CHECK_FALSE(rec.clause.tautological());
        }
    }
}

TEST_CASE("solve agrees with brute force on random instances") {
    std::mt19937_64 rng(0x5eed04);
    for (int i = 0; i < 200; ++i) {
        CnfFormula f = testutil::random_3cnf(rng, 8, 1 + static_cast<int>(rng() % 40));
        bool expect = brute_force_solve(f).has_value();
        SolverConfig cfg;
        cfg.heuristic = i % 2 ? Heuristic::Vsids : Heuristic::Static;
        cfg.restarts = i % 4 == 1 ? RestartMode::Luby : RestartMode::Off;
        SolveResult res = Solver().solve(f, cfg);
        CHECK(res.sat == expect);
        if (res.sat) CHECK(evaluate(f, res.model) == EvalResult::Sat);
    }
}

TEST_CASE("vsids decides the bumped variable after a conflict") {
    CnfFormula f = parse_dimacs("p cnf 5 5\n-1 2 0\n-1 3 0\n-2 -3 4 0\n-4 5 0\n-4 -5 0\n");
    SolverConfig cfg;
    cfg.heuristic = Heuristic::Vsids;
    cfg.forced_decisions = {1};
    SolveResult res = Solver().solve(f, cfg);
    REQUIRE(res.sat);
    // conflict analysis bumped x4 and x5; after backjumping, ~x4 is asserted,
    // so the highest-activity unassigned variable is x5
    REQUIRE(res.decision_sequence.size() >= 2);
    CHECK(std::abs(res.decision_sequence[1]) == 5);
}

TEST_CASE("graph snapshots") {
    SUBCASE("empty trail gives an empty graph") {
        ImplicationGraph g;
        CHECK(export_dot(g) == "digraph G {\n}\n");
    }

    SUBCASE("alpha propagation graph has 4 nodes and 3 edges") {
        CnfFormula f = parse_dimacs("p cnf 4 4\n1 2 3 4 0\n-1 0\n-2 0\n-3 0\n");
        SolverConfig cfg;
        cfg.capture_graphs = true;
        SolveResult res = Solver().solve(f, cfg);
        REQUIRE(res.final_graph.has_value());
        const ImplicationGraph& g = *res.final_graph;
        CHECK(g.nodes.size() == 4);
        CHECK(g.edges.size() == 3);
        CHECK_FALSE(g.has_conflict);
        // edges ~a -> d, ~b -> d, ~c -> d labeled with the alpha clause (id 0)
        for (const auto& e : g.edges) {
            CHECK(g.nodes[e.to].lit == Lit(4, true));
            CHECK(e.clause_id == 0);
        }
        CHECK(testutil::dot_parses(export_dot(g)));
    }

    SUBCASE("conflict graph has a single falsum node") {
        SolverConfig cfg;
        cfg.capture_graphs = true;
        SolveResult res = Solver().solve(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n"), cfg);
        REQUIRE(res.snapshots.size() == 1);
        const ImplicationGraph& g = res.snapshots[0];
        CHECK(g.has_conflict);
        std::string dot = export_dot(g);
        CHECK(testutil::dot_parses(dot));
        std::size_t first = dot.find("\xE2\x8A\xA5");
        CHECK(first != std::string::npos);
        CHECK(dot.find("\xE2\x8A\xA5", first + 1) == std::string::npos);
    }

    SUBCASE("snapshots are acyclic with in-degree-0 decisions") {
        std::mt19937_64 rng(0x5eed05);
        for (int i = 0; i < 30; ++i) {
            CnfFormula f = testutil::random_3cnf(rng, 7, 25);
            SolverConfig cfg;
            cfg.capture_graphs = true;
            SolveResult res = Solver().solve(f, cfg);
            for (const ImplicationGraph& g : res.snapshots) {
                std::vector<int> indeg(g.nodes.size() + 1, 0);
                for (const auto& e : g.edges) {
                    CHECK(e.from < e.to); // trail order: edges point forward, hence acyclic
                    ++indeg[e.to];
                }
                // a decision is the first trail entry of its level
                int prev_level = 0;
                for (std::size_t n = 0; n < g.nodes.size(); ++n) {
                    if (g.nodes[n].level > prev_level) CHECK(indeg[n] == 0);
                    prev_level = g.nodes[n].level;
                }
            }
        }
    }
}

TEST_CASE("one snapshot per conflict when capturing") {
    std::mt19937_64 rng(0x5eed06);
    for (int i = 0; i < 20; ++i) {
        CnfFormula f = testutil::random_3cnf(rng, 6, 28);
        SolverConfig cfg;
        cfg.capture_graphs = true;
        SolveResult res = Solver().solve(f, cfg);
        CHECK(res.snapshots.size() == res.stats.conflicts);
    }
}

TEST_CASE("identical formula, config and seed give identical results") {
    std::mt19937_64 rng(0x5eed07);
    CnfFormula f = testutil::random_3cnf(rng, 10, 42);
    SolverConfig cfg;
    cfg.heuristic = Heuristic::Vsids;
    cfg.seed = 1234;
    cfg.capture_graphs = true;
    SolveResult a = Solver().solve(f, cfg);
    SolveResult b = Solver().solve(f, cfg);
    CHECK(a.sat == b.sat);
    CHECK(a.stats.decisions == b.stats.decisions);
    CHECK(a.stats.propagations == b.stats.propagations);
    CHECK(a.stats.conflicts == b.stats.conflicts);
    CHECK(a.model == b.model);
    CHECK(a.decision_sequence == b.decision_sequence);
    REQUIRE(a.snapshots.size() == b.snapshots.size());
    for (std::size_t i = 0; i < a.snapshots.size(); ++i)
        CHECK(export_dot(a.snapshots[i]) == export_dot(b.snapshots[i]));
}

TEST_CASE("tautological input clauses do not affect solving") {
    CnfFormula f = parse_dimacs("p cnf 2 2\n1 -1 0\n2 0\n");
    SolveResult res = Solver().solve(f);
    REQUIRE(res.sat);
    CHECK(res.model.get(2) == Value::True);
}
