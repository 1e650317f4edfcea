#ifndef BOUNDSAT_TEST_HELPERS_HPP
#define BOUNDSAT_TEST_HELPERS_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "boundsat/bool_expr.hpp"
#include "boundsat/oracle.hpp"
#include "boundsat/types.hpp"

namespace testutil {

using namespace boundsat;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string data_path(const std::string& name) {
    return std::string(BSAT_DATA_DIR) + "/" + name;
}

/// Random k-CNF-ish formula: clause lengths 1..3, distinct variables per clause.
inline CnfFormula random_formula(std::mt19937_64& rng, int max_vars, int max_clauses) {
    std::uniform_int_distribution<int> nv(1, max_vars);
    CnfFormula f;
    f.num_vars = nv(rng);
    std::uniform_int_distribution<int> nc(0, max_clauses);
    std::uniform_int_distribution<int> len(1, 3);
    std::uniform_int_distribution<int> var(1, f.num_vars);
    std::uniform_int_distribution<int> coin(0, 1);
    int clauses = nc(rng);
    for (int i = 0; i < clauses; ++i) {
        std::vector<Lit> lits;
        int l = len(rng);
        for (int k = 0; k < l; ++k) lits.push_back(Lit(var(rng), coin(rng) == 1));
        f.clauses.push_back(Clause(std::move(lits)));
    }
    return f;
}

/// 3-CNF with fixed variable count; ratio drives toward UNSAT when high.
inline CnfFormula random_3cnf(std::mt19937_64& rng, int num_vars, int num_clauses) {
    CnfFormula f;
    f.num_vars = num_vars;
    std::uniform_int_distribution<int> var(1, num_vars);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < num_clauses; ++i) {
        std::vector<Lit> lits;
        for (int k = 0; k < 3; ++k) lits.push_back(Lit(var(rng), coin(rng) == 1));
        f.clauses.push_back(Clause(std::move(lits)));
    }
    return f;
}

inline BoolExpr random_expr(std::mt19937_64& rng, int num_vars, int depth) {
    std::uniform_int_distribution<int> kind(0, depth <= 0 ? 0 : 3);
    std::uniform_int_distribution<int> var(1, num_vars);
    std::uniform_int_distribution<int> fan(2, 3);
    switch (kind(rng)) {
    case 0:
        return BoolExpr::leaf(var(rng));
    case 1:
        return BoolExpr::negate(random_expr(rng, num_vars, depth - 1));
    case 2:
    case 3: {
        std::vector<BoolExpr> cs;
        int n = fan(rng);
        for (int i = 0; i < n; ++i) cs.push_back(random_expr(rng, num_vars, depth - 1));
        return kind(rng) % 2 ? BoolExpr::conj(std::move(cs)) : BoolExpr::disj(std::move(cs));
    }
    }
    return BoolExpr::leaf(1);
}

inline Assignment assignment_from_bits(int num_vars, std::uint32_t bits) {
    Assignment a(num_vars);
    for (int v = 1; v <= num_vars; ++v)
        a.set(v, (bits >> (v - 1)) & 1u ? Value::True : Value::False);
    return a;
}

/// Projected-model-set equality between an expression and its Tseitin CNF:
/// for every assignment of the original variables, the expression holds iff
/// some extension over the auxiliaries satisfies the CNF.
inline bool tseitin_projection_equal(const BoolExpr& e, const CnfConversion& conv, int num_orig) {
    int aux = conv.formula.num_vars - num_orig;
    for (std::uint32_t bits = 0; bits < (1u << num_orig); ++bits) {
        Assignment base = assignment_from_bits(conv.formula.num_vars, bits);
        bool expr_val = e.eval(base);
        bool cnf_model = false;
        for (std::uint32_t ab = 0; ab < (1u << aux) && !cnf_model; ++ab) {
            Assignment a = base;
            for (int k = 0; k < aux; ++k)
                a.set(num_orig + 1 + k, (ab >> k) & 1u ? Value::True : Value::False);
            cnf_model = evaluate(conv.formula, a) == EvalResult::Sat;
        }
        if (expr_val != cnf_model) return false;
    }
    return true;
}

/// Truth-table equivalence over variables 1..num_vars.
inline bool equivalent(const BoolExpr& a, const BoolExpr& b, int num_vars) {
    for (std::uint32_t bits = 0; bits < (1u << num_vars); ++bits) {
        Assignment as = assignment_from_bits(num_vars, bits);
        if (a.eval(as) != b.eval(as)) return false;
    }
    return true;
}

inline bool cnf_matches_expr(const CnfFormula& f, const BoolExpr& e, int num_vars) {
    for (std::uint32_t bits = 0; bits < (1u << num_vars); ++bits) {
        Assignment a = assignment_from_bits(std::max(num_vars, f.num_vars), bits);
        bool ev = e.eval(a);
        bool fv = evaluate(f, a) == EvalResult::Sat;
        if (ev != fv) return false;
    }
    return true;
}

/// Minimal DOT syntax check for the shapes export_dot emits.
inline bool dot_parses(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "digraph G {") return false;
    bool closed = false;
    while (std::getline(in, line)) {
        if (closed) return false; // trailing content
        if (line == "}") {
            closed = true;
            continue;
        }
        if (line.rfind("  ", 0) != 0) return false;
        std::string body = line.substr(2);
        if (body.empty() || body.back() != ';') return false;
        body.pop_back();
        auto bracket = body.find(" [label=\"");
        if (bracket == std::string::npos || body.back() != ']') return false;
        std::string head = body.substr(0, bracket);
        std::string label = body.substr(bracket + 9);
        if (label.size() < 2 || label.compare(label.size() - 2, 2, "\"]") != 0) return false;
        auto arrow = head.find(" -> ");
        auto is_id = [](const std::string& s) {
            if (s.empty()) return false;
            for (char c : s)
                if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
            return true;
        };
        if (arrow == std::string::npos) {
            if (!is_id(head)) return false;
        } else {
            if (!is_id(head.substr(0, arrow)) || !is_id(head.substr(arrow + 4))) return false;
        }
    }
    return closed;
}

} // namespace testutil

#endif
