#include "boundsat/oracle.hpp"

#include <cstdint>

namespace boundsat {

EvalResult evaluate(const CnfFormula& f, const Assignment& a) {
    bool any_undetermined = false;
    for (const Clause& c : f.clauses) {
        bool has_true = false;
        bool all_false = true;
        for (const Lit& l : c.lits()) {
            Value v = a.of(l);
            if (v == Value::True) {
                has_true = true;
                all_false = false;
                break;
            }
            if (v == Value::Unassigned) all_false = false;
        }
        if (has_true) continue;
        if (all_false) return EvalResult::Unsat; // empty clause lands here too
        any_undetermined = true;
    }
    return any_undetermined ? EvalResult::Undetermined : EvalResult::Sat;
}

namespace {

void check_guard(int num_vars) {
    if (num_vars > kBruteForceMaxVars)
        throw std::invalid_argument("brute-force oracle limited to " +
                                    std::to_string(kBruteForceMaxVars) + " variables, got " +
                                    std::to_string(num_vars));
}

Assignment from_bits(int num_vars, std::uint32_t bits) {
    Assignment a(num_vars);
    for (int v = 1; v <= num_vars; ++v)
        a.set(v, (bits >> (v - 1)) & 1u ? Value::True : Value::False);
    return a;
}

} // namespace

std::optional<Assignment> brute_force_solve(const CnfFormula& f) {
    check_guard(f.num_vars);
    std::uint64_t total = std::uint64_t{1} << f.num_vars;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        Assignment a = from_bits(f.num_vars, static_cast<std::uint32_t>(bits));
        if (evaluate(f, a) == EvalResult::Sat) return a;
    }
    return std::nullopt;
}

bool entails(const CnfFormula& f, const Clause& c) {
    check_guard(f.num_vars);
    int num_vars = f.num_vars;
    for (const Lit& l : c.lits())
        if (l.var > num_vars) num_vars = l.var;
    check_guard(num_vars);
    std::uint64_t total = std::uint64_t{1} << num_vars;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        Assignment a = from_bits(num_vars, static_cast<std::uint32_t>(bits));
        if (evaluate(f, a) != EvalResult::Sat) continue;
        bool sat_c = false;
        for (const Lit& l : c.lits())
            if (a.of(l) == Value::True) {
                sat_c = true;
                break;
            }
        if (!sat_c) return false;
    }
    return true;
}

} // namespace boundsat
