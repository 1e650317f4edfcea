#ifndef BOUNDSAT_SOLVER_HPP
#define BOUNDSAT_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boundsat/types.hpp"

namespace boundsat {

enum class Heuristic { Static, Vsids };
enum class RestartMode { Off, Luby };

struct SolverConfig {
    Heuristic heuristic = Heuristic::Static;
    RestartMode restarts = RestartMode::Off;
    bool capture_graphs = false; // snapshot the implication graph at each conflict
    std::uint64_t seed = 0;      // VSIDS tie randomization; 0 = lowest-index tie-break

    // Decisions replayed in order (DIMACS literals) before the heuristic
    // takes over; literals whose variable is already assigned are skipped.
    std::vector<int> forced_decisions;
};

struct SolverStats {
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t conflicts = 0;
    std::uint64_t learned = 0;
};

/// Snapshot of the assignment trail as a DAG: decisions have in-degree 0,
/// implied literals have one in-edge per other literal of their antecedent.
struct ImplicationGraph {
    struct Node {
        Lit lit;
        int level;
    };
    struct Edge {
        int from;      // node index
        int to;        // node index, or conflict_node()
        int clause_id; // label
    };

    std::vector<Node> nodes; // trail order
    std::vector<Edge> edges;
    bool has_conflict = false;
    int conflict_clause_id = -1;

    int conflict_node() const { return static_cast<int>(nodes.size()); }
};

/// Deterministic DOT rendering; nodes labeled "lit@level", conflict "⊥".
std::string export_dot(const ImplicationGraph& g);

struct LearnedClauseRecord {
    Clause clause;
    Lit asserting;      // the single conflict-level literal (negated into the clause)
    int backjump_level; // second-highest level in the clause, 0 for units
    std::vector<int> levels; // decision level of each clause literal at learning time
    int conflict_level = 0;
};

struct SolveResult {
    bool sat = false;
    Assignment model; // total on SAT, empty otherwise
    SolverStats stats;
    std::vector<int> decision_sequence; // DIMACS literals, in decision order
    std::vector<LearnedClauseRecord> learned;
    std::vector<ImplicationGraph> snapshots; // one per conflict when capturing
    std::optional<ImplicationGraph> final_graph; // state at termination when capturing

    // On UNSAT: variables involved in the final level-0 conflict (the
    // conflict clause and the antecedents reachable from it).
    std::vector<int> final_conflict_vars;
};

class Solver {
  public:
    SolveResult solve(const CnfFormula& f, const SolverConfig& config = {});
};

} // namespace boundsat

#endif
