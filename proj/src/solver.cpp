#include "boundsat/solver.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace boundsat {

namespace {

// Literal codes: var << 1 | sign, sign 1 = negated.
inline int code_of(Lit l) { return (l.var << 1) | (l.pos ? 0 : 1); }
inline int neg_code(int c) { return c ^ 1; }
inline int var_of(int c) { return c >> 1; }
inline bool sign_of(int c) { return c & 1; } // true = negated
inline Lit lit_of(int c) { return Lit(var_of(c), !sign_of(c)); }

// Luby restart sequence: 1 1 2 1 1 2 4 ...
std::uint64_t luby(std::uint64_t i) {
    std::uint64_t k = 1;
    while ((std::uint64_t{1} << k) - 1 < i + 1) ++k;
    while ((std::uint64_t{1} << k) - 1 != i + 1) {
        --k;
        i -= (std::uint64_t{1} << k) - 1;
    }
    return std::uint64_t{1} << (k - 1);
}

struct Engine {
    const SolverConfig& cfg;
    int nv;
    bool ok = true;

    std::vector<std::vector<int>> clauses; // literal codes; index = clause id
    std::vector<int> unit_clauses;         // ids of size-1 input clauses
    std::vector<std::vector<int>> watches; // watches[code]: clauses watching that literal

    std::vector<std::int8_t> val; // per var: 0 undef, 1 true, -1 false
    std::vector<int> lvl;         // per var
    std::vector<int> reason;      // per var: antecedent clause id, -1 for decisions
    std::vector<bool> phase;      // saved polarity, initial false
    std::vector<int> trail;       // assigned literal codes
    std::vector<int> trail_lim;   // trail index at each decision level
    std::size_t qhead = 0;

    std::vector<double> activity;
    double var_inc = 1.0;
    static constexpr double kDecay = 0.95;

    std::size_t forced_cursor = 0;
    std::mt19937_64 rng;

    SolveResult out;

    explicit Engine(const CnfFormula& f, const SolverConfig& c) : cfg(c), nv(f.num_vars), rng(c.seed) {
        f.check();
        watches.assign(2 * (nv + 1), {});
        val.assign(nv + 1, 0);
        lvl.assign(nv + 1, 0);
        reason.assign(nv + 1, -1);
        phase.assign(nv + 1, false);
        activity.assign(nv + 1, 0.0);
        for (const Clause& c2 : f.clauses) {
            if (c2.tautological()) continue; // satisfied under every total assignment
            add_clause(c2);
        }
    }

    void add_clause(const Clause& c) {
        std::vector<int> codes;
        codes.reserve(c.size());
        for (const Lit& l : c.lits()) codes.push_back(code_of(l));
        int id = static_cast<int>(clauses.size());
        clauses.push_back(std::move(codes));
        const auto& cl = clauses.back();
        if (cl.empty()) {
            ok = false;
        } else if (cl.size() == 1) {
            unit_clauses.push_back(id);
        } else {
            watches[cl[0]].push_back(id);
            watches[cl[1]].push_back(id);
        }
    }

    int level() const { return static_cast<int>(trail_lim.size()); }

    bool is_true(int code) const {
        std::int8_t v = val[var_of(code)];
        return sign_of(code) ? v == -1 : v == 1;
    }
    bool is_false(int code) const {
        std::int8_t v = val[var_of(code)];
        return sign_of(code) ? v == 1 : v == -1;
    }
    bool assigned(int v) const { return val[v] != 0; }

    void enqueue(int code, int why) {
        int v = var_of(code);
        val[v] = sign_of(code) ? -1 : 1;
        lvl[v] = level();
        reason[v] = why;
        trail.push_back(code);
        if (why >= 0) ++out.stats.propagations;
    }

    // Two-watched-literal BCP to fixpoint. Returns conflict clause id or -1.
    int propagate() {
        while (qhead < trail.size()) {
            int p = trail[qhead++];
            int fl = neg_code(p); // became false
            auto& ws = watches[fl];
            std::size_t i = 0, j = 0;
            while (i < ws.size()) {
                int ci = ws[i];
                auto& c = clauses[ci];
                if (c[0] == fl) std::swap(c[0], c[1]);
                if (is_true(c[0])) {
                    ws[j++] = ws[i++];
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < c.size(); ++k) {
                    if (!is_false(c[k])) {
                        std::swap(c[1], c[k]);
                        watches[c[1]].push_back(ci);
                        ++i; // dropped from this watch list
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                ws[j++] = ws[i++];
                if (is_false(c[0])) {
                    while (i < ws.size()) ws[j++] = ws[i++];
                    ws.resize(j);
                    qhead = trail.size();
                    return ci;
                }
                enqueue(c[0], ci);
            }
            ws.resize(j);
        }
        return -1;
    }

    void bump(int v) {
        activity[v] += var_inc;
        if (activity[v] > 1e100) {
            for (int u = 1; u <= nv; ++u) activity[u] *= 1e-100;
            var_inc *= 1e-100;
        }
    }

    // First-UIP conflict analysis. Returns the learned clause as literal
    // codes, asserting literal first, and the backjump level.
    std::pair<std::vector<int>, int> analyze(int confl) {
        std::vector<int> learnt{0}; // slot 0 = asserting literal
        std::vector<char> seen(nv + 1, 0);
        int counter = 0;
        int p = -1;
        int idx = static_cast<int>(trail.size()) - 1;
        int ci = confl;
        do {
            for (int q : clauses[ci]) {
                if (p != -1 && q == p) continue; // resolved pivot
                int v = var_of(q);
                if (seen[v] || lvl[v] == 0) continue;
                seen[v] = 1;
                bump(v);
                if (lvl[v] >= level())
                    ++counter;
                else
                    learnt.push_back(q);
            }
            while (!seen[var_of(trail[idx])]) --idx;
            p = trail[idx];
            ci = reason[var_of(p)];
            seen[var_of(p)] = 0;
            --idx;
            --counter;
        } while (counter > 0);
        learnt[0] = neg_code(p);

        int bj = 0;
        std::size_t bj_pos = 1;
        for (std::size_t k = 1; k < learnt.size(); ++k) {
            if (lvl[var_of(learnt[k])] > bj) {
                bj = lvl[var_of(learnt[k])];
                bj_pos = k;
            }
        }
        if (learnt.size() > 1) std::swap(learnt[1], learnt[bj_pos]);
        return {std::move(learnt), bj};
    }

    void backjump(int target) {
        if (target >= level()) return;
        int keep = trail_lim[target];
        for (int i = static_cast<int>(trail.size()) - 1; i >= keep; --i) {
            int v = var_of(trail[i]);
            phase[v] = val[v] == 1;
            val[v] = 0;
            reason[v] = -1;
            trail.pop_back();
        }
        trail_lim.resize(target);
        qhead = trail.size();
    }

    // Next decision literal, or 0 when the assignment is total.
    int pick_decision() {
        while (forced_cursor < cfg.forced_decisions.size()) {
            Lit l = Lit::from_dimacs(cfg.forced_decisions[forced_cursor++]);
            if (l.var <= nv && !assigned(l.var)) return code_of(l);
        }
        if (cfg.heuristic == Heuristic::Static) {
            for (int v = 1; v <= nv; ++v)
                if (!assigned(v)) return (v << 1) | (phase[v] ? 0 : 1);
            return 0;
        }
        double best = -1.0;
        std::vector<int> ties;
        for (int v = 1; v <= nv; ++v) {
            if (assigned(v)) continue;
            if (activity[v] > best) {
                best = activity[v];
                ties.clear();
            }
            if (activity[v] == best) ties.push_back(v);
        }
        if (ties.empty()) return 0;
        int v = cfg.seed != 0 ? ties[rng() % ties.size()] : ties.front();
        return (v << 1) | (phase[v] ? 0 : 1);
    }

    ImplicationGraph snapshot(int confl) const {
        ImplicationGraph g;
        std::vector<int> node_of(nv + 1, -1);
        for (std::size_t t = 0; t < trail.size(); ++t) {
            int v = var_of(trail[t]);
            node_of[v] = static_cast<int>(t);
            g.nodes.push_back({lit_of(trail[t]), lvl[v]});
        }
        for (std::size_t t = 0; t < trail.size(); ++t) {
            int r = reason[var_of(trail[t])];
            if (r < 0) continue;
            for (int q : clauses[r]) {
                if (q == trail[t]) continue;
                g.edges.push_back({node_of[var_of(q)], static_cast<int>(t), r});
            }
        }
        if (confl >= 0) {
            g.has_conflict = true;
            g.conflict_clause_id = confl;
            for (int q : clauses[confl])
                g.edges.push_back({node_of[var_of(q)], g.conflict_node(), confl});
        }
        return g;
    }

    // Variables reachable from a conflict clause through antecedents; fills
    // final_conflict_vars for level-0 UNSAT reporting.
    void collect_final_conflict(int confl) {
        std::vector<char> seen(nv + 1, 0);
        std::vector<int> stack;
        for (int q : clauses[confl])
            if (!seen[var_of(q)]) {
                seen[var_of(q)] = 1;
                stack.push_back(var_of(q));
            }
        std::vector<int> order = stack;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            int r = assigned(v) ? reason[v] : -1;
            if (r < 0) continue;
            for (int q : clauses[r]) {
                int u = var_of(q);
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                    order.push_back(u);
                }
            }
        }
        std::sort(order.begin(), order.end());
        out.final_conflict_vars = std::move(order);
    }

    Clause clause_from_codes(const std::vector<int>& codes) const {
        std::vector<Lit> lits;
        lits.reserve(codes.size());
        for (int c : codes) lits.push_back(lit_of(c));
        return Clause(std::move(lits));
    }

    SolveResult run() {
        if (!ok) {
            out.sat = false;
            return out;
        }
        // Level-0 units from the input formula.
        for (int id : unit_clauses) {
            int c = clauses[id][0];
            if (is_false(c)) {
                if (cfg.capture_graphs) {
                    out.snapshots.push_back(snapshot(id));
                    out.final_graph = out.snapshots.back();
                }
                ++out.stats.conflicts;
                collect_final_conflict(id);
                out.sat = false;
                return out;
            }
            if (!is_true(c)) enqueue(c, id);
        }

        std::uint64_t conflicts_since_restart = 0;
        std::uint64_t restart_count = 0;
        for (;;) {
            int confl = propagate();
            if (confl >= 0) {
                ++out.stats.conflicts;
                if (cfg.capture_graphs) out.snapshots.push_back(snapshot(confl));
                if (level() == 0) {
                    if (cfg.capture_graphs) out.final_graph = snapshot(confl);
                    collect_final_conflict(confl);
                    out.sat = false;
                    return out;
                }
                auto [learnt, bj] = analyze(confl);
                var_inc /= kDecay;
                ++out.stats.learned;
                LearnedClauseRecord rec{clause_from_codes(learnt), lit_of(learnt[0]), bj, {},
                                        level()};
                for (int c : learnt) rec.levels.push_back(lvl[var_of(c)]);
                out.learned.push_back(std::move(rec));
                int id = static_cast<int>(clauses.size());
                clauses.push_back(learnt);
                if (learnt.size() >= 2) {
                    watches[learnt[0]].push_back(id);
                    watches[learnt[1]].push_back(id);
                }
                backjump(bj);
                enqueue(learnt[0], id);
                ++conflicts_since_restart;
            } else {
                if (cfg.restarts == RestartMode::Luby &&
                    conflicts_since_restart >= 64 * luby(restart_count)) {
                    ++restart_count;
                    conflicts_since_restart = 0;
                    backjump(0);
                    continue;
                }
                int d = pick_decision();
                if (d == 0) {
                    if (cfg.capture_graphs) out.final_graph = snapshot(-1);
                    out.sat = true;
                    out.model = Assignment(nv);
                    for (int v = 1; v <= nv; ++v)
                        out.model.set(v, val[v] == 1 ? Value::True : Value::False);
                    return out;
                }
                ++out.stats.decisions;
                out.decision_sequence.push_back(lit_of(d).to_dimacs());
                trail_lim.push_back(static_cast<int>(trail.size()));
                enqueue(d, -1);
            }
        }
    }
};

} // namespace

SolveResult Solver::solve(const CnfFormula& f, const SolverConfig& config) {
    Engine e(f, config);
    return e.run();
}

std::string export_dot(const ImplicationGraph& g) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        out << "  n" << i << " [label=\"" << g.nodes[i].lit.to_dimacs() << '@'
            << g.nodes[i].level << "\"];\n";
    if (g.has_conflict) out << "  conflict [label=\"\xE2\x8A\xA5\"];\n";
    for (const auto& e : g.edges) {
        out << "  n" << e.from << " -> ";
        if (e.to == g.conflict_node() && g.has_conflict)
            out << "conflict";
        else
            out << 'n' << e.to;
        out << " [label=\"C" << e.clause_id << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace boundsat
