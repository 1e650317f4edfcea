#include "boundsat/scenario.hpp"

#include <set>

#include <json.hpp>

namespace boundsat {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ScenarioError("scenario: " + msg); }

void check_fields(const json& obj, const std::string& where, std::set<std::string> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) fail(where + ": unknown field '" + it.key() + "'");
}

Rational parse_number(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Rational::from_decimal(j.get<std::string>());
        } catch (const std::exception& e) {
            fail(where + ": " + e.what());
        }
    }
    if (j.is_number_float())
        fail(where + ": non-integer numbers must be written as decimal strings");
    fail(where + ": expected integer or decimal string");
}

Interval parse_interval(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) fail(where + ": expected [lo, hi]");
    Interval iv{parse_number(j[0], where), parse_number(j[1], where)};
    if (iv.hi < iv.lo) fail(where + ": lo > hi");
    return iv;
}

Side parse_side(const json& j, const std::string& where) {
    std::string s = j.get<std::string>();
    if (s == "lower") return Side::Lower;
    if (s == "upper") return Side::Upper;
    fail(where + ": side must be 'lower' or 'upper'");
}

DomainSpec parse_domain_spec(const json& j, const Scenario& s) {
    check_fields(j, "domain_spec", {"subdomains", "composition"});
    DomainSpec spec;
    std::set<std::string> names;
    for (const json& sd : j.at("subdomains")) {
        check_fields(sd, "subdomain", {"name", "terms"});
        SubDomain sub;
        sub.name = sd.at("name").get<std::string>();
        if (!names.insert(sub.name).second) fail("duplicate subdomain '" + sub.name + "'");
        for (const json& term : sd.at("terms")) {
            std::vector<DomainLiteralRef> conj;
            for (const json& lr : term) {
                check_fields(lr, "literal ref", {"var", "side", "negate"});
                DomainLiteralRef ref;
                ref.variable = lr.at("var").get<std::string>();
                if (!s.find_variable(ref.variable))
                    fail("domain_spec references unknown variable '" + ref.variable + "'");
                ref.side = parse_side(lr.at("side"), "literal ref");
                if (lr.contains("negate")) ref.negated = lr.at("negate").get<bool>();
                conj.push_back(std::move(ref));
            }
            sub.terms.push_back(std::move(conj));
        }
        spec.subdomains.push_back(std::move(sub));
    }
    const json& comp = j.at("composition");
    check_fields(comp, "composition", {"form", "groups"});
    std::string form = comp.at("form").get<std::string>();
    if (form == "and_of_ors")
        spec.form = CompositionForm::AndOfOrs;
    else if (form == "or_of_ands")
        spec.form = CompositionForm::OrOfAnds;
    else
        fail("composition form must be 'and_of_ors' or 'or_of_ands'");
    for (const json& g : comp.at("groups")) {
        std::vector<std::string> group;
        for (const json& n : g) {
            std::string name = n.get<std::string>();
            if (!names.count(name)) fail("composition references unknown subdomain '" + name + "'");
            group.push_back(std::move(name));
        }
        spec.groups.push_back(std::move(group));
    }
    return spec;
}

} // namespace

const MonitoredVariable* Scenario::find_variable(const std::string& n) const {
    for (const MonitoredVariable& v : variables)
        if (v.name == n) return &v;
    return nullptr;
}

const DisturbanceCase* Scenario::find_disturbance(const std::string& id) const {
    for (const DisturbanceCase& d : disturbances)
        if (d.id == id) return &d;
    return nullptr;
}

Scenario load_scenario(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(e.what());
    }
    if (!root.is_object()) fail("top level must be an object");
    check_fields(root, "scenario", {"name", "variables", "disturbances", "domain_spec"});

    Scenario s;
    s.name = root.at("name").get<std::string>();

    std::set<std::string> var_names;
    for (const json& jv : root.at("variables")) {
        check_fields(jv, "variable", {"name", "unit", "safe"});
        MonitoredVariable v;
        v.name = jv.at("name").get<std::string>();
        if (!var_names.insert(v.name).second) fail("duplicate variable name '" + v.name + "'");
        v.unit = jv.at("unit").get<std::string>();
        v.safe = parse_interval(jv.at("safe"), "variable '" + v.name + "' safe interval");
        s.variables.push_back(std::move(v));
    }

    if (root.contains("disturbances")) {
        std::set<std::string> ids;
        for (const json& jd : root.at("disturbances")) {
            check_fields(jd, "disturbance", {"id", "observed"});
            DisturbanceCase d;
            d.id = jd.at("id").get<std::string>();
            if (!ids.insert(d.id).second) fail("duplicate disturbance id '" + d.id + "'");
            const json& obs = jd.at("observed");
            // keep scenario declaration order for determinism
            for (const MonitoredVariable& v : s.variables)
                if (obs.contains(v.name))
                    d.observed.emplace_back(
                        v.name, parse_interval(obs.at(v.name),
                                               "observed interval for '" + v.name + "'"));
            for (auto it = obs.begin(); it != obs.end(); ++it)
                if (!s.find_variable(it.key()))
                    fail("disturbance '" + d.id + "' observes unknown variable '" + it.key() + "'");
            s.disturbances.push_back(std::move(d));
        }
    }

    if (root.contains("domain_spec")) s.domain_spec = parse_domain_spec(root.at("domain_spec"), s);
    return s;
}

} // namespace boundsat
