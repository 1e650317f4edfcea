#include "boundsat/encoder.hpp"

#include <algorithm>

namespace boundsat {

BoundMap::BoundMap(const Scenario& s) {
    int next = 1;
    for (const MonitoredVariable& v : s.variables) {
        literals_.push_back({v.name, Side::Lower, next++});
        literals_.push_back({v.name, Side::Upper, next++});
    }
}

int BoundMap::var_for(const std::string& variable, Side side) const {
    for (const BoundLiteral& b : literals_)
        if (b.variable == variable && b.side == side) return b.sat_var;
    return 0;
}

std::vector<bool> valuate_bounds(const Scenario& s, const DisturbanceCase& d, const BoundMap& m) {
    std::vector<bool> val(static_cast<std::size_t>(m.size()), true);
    for (const auto& [name, observed] : d.observed) {
        const MonitoredVariable* v = s.find_variable(name);
        if (!v) throw ScenarioError("observed entry references unknown variable '" + name + "'");
        val[m.var_for(name, Side::Lower) - 1] = v->safe.lo <= observed.lo;
        val[m.var_for(name, Side::Upper) - 1] = observed.hi <= v->safe.hi;
    }
    return val;
}

BoolExpr build_safety_expr(const Scenario&, const BoundMap& m) {
    std::vector<BoolExpr> lits;
    lits.reserve(static_cast<std::size_t>(m.size()));
    for (const BoundLiteral& b : m.literals()) lits.push_back(BoolExpr::leaf(b.sat_var));
    return BoolExpr::conj(std::move(lits));
}

BoolExpr build_paper_domain_expr(const Scenario&, const DomainSpec& spec, const BoundMap& m) {
    auto build_subdomain = [&](const SubDomain& sd) {
        std::vector<BoolExpr> terms;
        for (const auto& conj : sd.terms) {
            std::vector<BoolExpr> lits;
            for (const DomainLiteralRef& ref : conj) {
                int v = m.var_for(ref.variable, ref.side);
                if (v == 0)
                    throw ScenarioError("domain spec references unknown bound literal '" +
                                        ref.variable + " " + side_name(ref.side) + "'");
                BoolExpr leaf = BoolExpr::leaf(v);
                lits.push_back(ref.negated ? BoolExpr::negate(std::move(leaf)) : std::move(leaf));
            }
            terms.push_back(BoolExpr::conj(std::move(lits)));
        }
        return BoolExpr::disj(std::move(terms));
    };

    auto subdomain_by_name = [&](const std::string& name) -> const SubDomain& {
        for (const SubDomain& sd : spec.subdomains)
            if (sd.name == name) return sd;
        throw ScenarioError("composition references unknown subdomain '" + name + "'");
    };

    std::vector<BoolExpr> groups;
    for (const auto& g : spec.groups) {
        std::vector<BoolExpr> members;
        for (const std::string& name : g) members.push_back(build_subdomain(subdomain_by_name(name)));
        groups.push_back(spec.form == CompositionForm::AndOfOrs
                             ? BoolExpr::disj(std::move(members))
                             : BoolExpr::conj(std::move(members)));
    }
    return spec.form == CompositionForm::AndOfOrs ? BoolExpr::conj(std::move(groups))
                                                  : BoolExpr::disj(std::move(groups));
}

EncodedProblem encode(const Scenario& s, const DisturbanceCase& d, EncodeMode mode) {
    EncodedProblem p;
    p.mode = mode;
    p.bound_map = BoundMap(s);
    p.num_bound_vars = p.bound_map.size();

    BoolExpr requirement;
    CnfMethod method;
    if (mode == EncodeMode::Strict) {
        requirement = build_safety_expr(s, p.bound_map);
        method = CnfMethod::Distributive; // conjunction of literals: unit clauses, no auxiliaries
    } else {
        if (!s.domain_spec)
            throw ScenarioError("paper mode requires a domain_spec in the scenario");
        requirement = build_paper_domain_expr(s, *s.domain_spec, p.bound_map);
        method = CnfMethod::Tseitin;
    }

    CnfConversion conv = to_cnf(requirement, method, p.num_bound_vars);
    p.formula = std::move(conv.formula);
    p.formula.num_vars = std::max(p.formula.num_vars, p.num_bound_vars);

    std::vector<bool> val = valuate_bounds(s, d, p.bound_map);
    for (int v = 1; v <= p.num_bound_vars; ++v)
        p.formula.clauses.push_back(Clause({Lit(v, val[v - 1])}));
    return p;
}

} // namespace boundsat
