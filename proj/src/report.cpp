#include "boundsat/report.hpp"

#include <sstream>

#include <json.hpp>

namespace boundsat {

namespace {

std::vector<std::string> domains_naming(const Scenario& s, const std::string& variable, Side side) {
    std::vector<std::string> out;
    if (!s.domain_spec) return out;
    for (const SubDomain& sd : s.domain_spec->subdomains) {
        bool found = false;
        for (const auto& term : sd.terms)
            for (const DomainLiteralRef& ref : term)
                if (ref.variable == variable && ref.side == side) found = true;
        if (found) out.push_back(sd.name);
    }
    return out;
}

ViolatedBound make_violation(const Scenario& s, const DisturbanceCase& d,
                             const BoundLiteral& b, bool with_domains) {
    const MonitoredVariable* v = s.find_variable(b.variable);
    Interval observed = v->safe;
    for (const auto& [name, iv] : d.observed)
        if (name == b.variable) observed = iv;
    ViolatedBound out;
    out.variable = b.variable;
    out.side = b.side;
    out.safe_value = b.side == Side::Lower ? v->safe.lo : v->safe.hi;
    out.observed_value = b.side == Side::Lower ? observed.lo : observed.hi;
    out.unit = v->unit;
    out.disturbance = d.id;
    if (with_domains) out.domains = domains_naming(s, b.variable, b.side);
    return out;
}

} // namespace

ConflictReport analyze_case(const Scenario& s, const DisturbanceCase& d, EncodeMode mode,
                            const SolverConfig& config, bool want_graph) {
    EncodedProblem p = encode(s, d, mode);
    SolverConfig cfg = config;
    cfg.capture_graphs = cfg.capture_graphs || want_graph;
    SolveResult res = Solver().solve(p.formula, cfg);

    ConflictReport r;
    r.scenario = s.name;
    r.disturbance = d.id;
    r.mode = mode;
    r.conflict = !res.sat;
    r.solver_stats = res.stats;

    std::vector<bool> val = valuate_bounds(s, d, p.bound_map);
    if (mode == EncodeMode::Strict) {
        // Valuation is the explanation; the solver outcome is the gate.
        for (const BoundLiteral& b : p.bound_map.literals())
            if (!val[b.sat_var - 1]) r.violations.push_back(make_violation(s, d, b, false));
    } else if (r.conflict) {
        for (int v : res.final_conflict_vars) {
            if (p.is_auxiliary(v) || val[v - 1]) continue;
            r.violations.push_back(make_violation(s, d, p.bound_map.at(v), true));
        }
    }

    if (want_graph && res.final_graph) r.graph_dot = export_dot(*res.final_graph);
    return r;
}

std::string render_text(const ConflictReport& r) {
    std::ostringstream out;
    out << "scenario " << r.scenario << ", disturbance " << r.disturbance << ", mode "
        << (r.mode == EncodeMode::Strict ? "strict" : "paper") << '\n';
    if (!r.conflict) {
        out << "NO CONFLICT\n";
    } else {
        out << "CONFLICT (" << r.violations.size() << " violated bound"
            << (r.violations.size() == 1 ? "" : "s") << ")\n";
        for (const ViolatedBound& v : r.violations) {
            out << v.variable << ' ' << side_name(v.side) << " bound violated: safe "
                << v.safe_value.str() << v.unit << ", observed " << v.observed_value.str()
                << v.unit << " under " << v.disturbance;
            if (!v.domains.empty()) {
                out << " [";
                for (std::size_t i = 0; i < v.domains.size(); ++i)
                    out << (i ? ", " : "") << v.domains[i];
                out << ']';
            }
            out << '\n';
        }
    }
    out << "stats: decisions=" << r.solver_stats.decisions
        << " propagations=" << r.solver_stats.propagations
        << " conflicts=" << r.solver_stats.conflicts << " learned=" << r.solver_stats.learned
        << '\n';
    return out.str();
}

std::string render_json(const ConflictReport& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["scenario"] = r.scenario;
    j["disturbance"] = r.disturbance;
    j["mode"] = r.mode == EncodeMode::Strict ? "strict" : "paper";
    j["outcome"] = r.conflict ? "conflict" : "no_conflict";
    j["violations"] = nlohmann::ordered_json::array();
    for (const ViolatedBound& v : r.violations) {
        nlohmann::ordered_json jv;
        jv["variable"] = v.variable;
        jv["side"] = side_name(v.side);
        jv["safe"] = v.safe_value.str();
        jv["observed"] = v.observed_value.str();
        jv["unit"] = v.unit;
        jv["disturbance"] = v.disturbance;
        if (!v.domains.empty()) jv["domains"] = v.domains;
        j["violations"].push_back(std::move(jv));
    }
    j["solver_stats"] = {{"decisions", r.solver_stats.decisions},
                         {"propagations", r.solver_stats.propagations},
                         {"conflicts", r.solver_stats.conflicts},
                         {"learned", r.solver_stats.learned}};
    if (r.graph_dot) j["graph_dot"] = *r.graph_dot;
    return j.dump(2) + "\n";
}

} // namespace boundsat
