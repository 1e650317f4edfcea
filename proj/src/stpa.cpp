#include "boundsat/stpa.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include <json.hpp>

namespace boundsat {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw CatalogError("catalog: " + msg); }

void check_fields(const json& obj, const std::string& where, std::set<std::string> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) fail(where + ": unknown field '" + it.key() + "'");
}

bool matches_prefix_number(const std::string& id, const std::string& prefix) {
    if (id.size() <= prefix.size() || id.compare(0, prefix.size(), prefix) != 0) return false;
    for (std::size_t i = prefix.size(); i < id.size(); ++i) {
        char c = id[i];
        if ((c < '0' || c > '9') && c != '.') return false;
    }
    return true;
}

ActionType parse_action_type(const std::string& s) {
    if (s == "not_provided") return ActionType::NotProvided;
    if (s == "provided") return ActionType::Provided;
    if (s == "too_early_late") return ActionType::TooEarlyLate;
    if (s == "stopped_early_late") return ActionType::StoppedEarlyLate;
    fail("unknown action type '" + s + "'");
}

Cia parse_cia(const std::string& s) {
    if (s == "confidentiality") return Cia::Confidentiality;
    if (s == "integrity") return Cia::Integrity;
    if (s == "availability") return Cia::Availability;
    fail("unknown cia '" + s + "'");
}

template <typename T>
void check_unique(std::set<std::string>& ids, const T& item) {
    if (!ids.insert(item.id).second) fail("duplicate id '" + item.id + "'");
}

} // namespace

StpaCatalog load_catalog(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(e.what());
    }
    if (!root.is_object()) fail("top level must be an object");
    check_fields(root, "catalog",
                 {"contexts", "losses", "hazards", "control_actions", "ucas", "threats",
                  "constraints"});

    StpaCatalog c;
    c.contexts.push_back("any");
    if (root.contains("contexts"))
        for (const json& j : root.at("contexts")) {
            std::string tag = j.get<std::string>();
            if (std::find(c.contexts.begin(), c.contexts.end(), tag) == c.contexts.end())
                c.contexts.push_back(tag);
        }

    std::set<std::string> ids;

    if (root.contains("losses"))
        for (const json& j : root.at("losses")) {
            check_fields(j, "loss", {"id", "description"});
            Loss l{j.at("id").get<std::string>(), j.at("description").get<std::string>()};
            if (!matches_prefix_number(l.id, "L-")) fail("malformed loss id '" + l.id + "'");
            check_unique(ids, l);
            c.losses.push_back(std::move(l));
        }

    auto loss_exists = [&](const std::string& id) {
        return std::any_of(c.losses.begin(), c.losses.end(),
                           [&](const Loss& l) { return l.id == id; });
    };

    if (root.contains("hazards"))
        for (const json& j : root.at("hazards")) {
            check_fields(j, "hazard", {"id", "description", "leads_to"});
            Hazard h;
            h.id = j.at("id").get<std::string>();
            if (!matches_prefix_number(h.id, "H-")) fail("malformed hazard id '" + h.id + "'");
            check_unique(ids, h);
            h.description = j.at("description").get<std::string>();
            for (const json& r : j.at("leads_to")) {
                std::string lid = r.get<std::string>();
                if (!loss_exists(lid)) fail("hazard " + h.id + " references unknown loss '" + lid + "'");
                h.leads_to.push_back(std::move(lid));
            }
            if (h.leads_to.empty()) fail("hazard " + h.id + " has empty leads_to");
            c.hazards.push_back(std::move(h));
        }

    auto hazard_exists = [&](const std::string& id) {
        return std::any_of(c.hazards.begin(), c.hazards.end(),
                           [&](const Hazard& h) { return h.id == id; });
    };
    auto context_declared = [&](const std::string& tag) {
        return std::find(c.contexts.begin(), c.contexts.end(), tag) != c.contexts.end();
    };

    if (root.contains("control_actions"))
        for (const json& j : root.at("control_actions")) {
            check_fields(j, "control action", {"id", "description", "impact"});
            ControlAction ca;
            ca.id = j.at("id").get<std::string>();
            if (!matches_prefix_number(ca.id, "CA-")) fail("malformed control action id '" + ca.id + "'");
            check_unique(ids, ca);
            ca.description = j.at("description").get<std::string>();
            if (j.contains("impact"))
                for (auto ctx = j.at("impact").begin(); ctx != j.at("impact").end(); ++ctx) {
                    if (!context_declared(ctx.key()))
                        fail(ca.id + ": undeclared context '" + ctx.key() + "'");
                    for (auto at = ctx.value().begin(); at != ctx.value().end(); ++at) {
                        ActionType type = parse_action_type(at.key());
                        const json& je = at.value();
                        check_fields(je, ca.id + " impact entry", {"status", "hazards"});
                        ImpactEntry entry;
                        std::string status = je.at("status").get<std::string>();
                        if (status == "hazardous")
                            entry.status = ImpactStatus::Hazardous;
                        else if (status == "not_applicable")
                            entry.status = ImpactStatus::NotApplicable;
                        else if (status == "safe")
                            entry.status = ImpactStatus::Safe;
                        else
                            fail(ca.id + ": unknown impact status '" + status + "'");
                        if (je.contains("hazards"))
                            for (const json& r : je.at("hazards")) {
                                std::string hid = r.get<std::string>();
                                if (!hazard_exists(hid))
                                    fail(ca.id + " references unknown hazard '" + hid + "'");
                                entry.hazards.push_back(std::move(hid));
                            }
                        if (entry.status == ImpactStatus::Hazardous && entry.hazards.empty())
                            fail(ca.id + ": hazardous entry without hazard refs");
                        ca.impact[ctx.key()][type] = std::move(entry);
                    }
                }
            c.control_actions.push_back(std::move(ca));
        }

    auto ca_exists = [&](const std::string& id) {
        return std::any_of(c.control_actions.begin(), c.control_actions.end(),
                           [&](const ControlAction& a) { return a.id == id; });
    };

    if (root.contains("ucas"))
        for (const json& j : root.at("ucas")) {
            check_fields(j, "uca", {"id", "control_action", "description", "causes"});
            UnsafeControlAction u;
            u.id = j.at("id").get<std::string>();
            if (!matches_prefix_number(u.id, "UCA-")) fail("malformed uca id '" + u.id + "'");
            check_unique(ids, u);
            u.control_action = j.at("control_action").get<std::string>();
            if (!ca_exists(u.control_action))
                fail(u.id + " references unknown control action '" + u.control_action + "'");
            u.description = j.at("description").get<std::string>();
            if (j.contains("causes"))
                for (const json& jc : j.at("causes")) {
                    check_fields(jc, "cause", {"id", "description"});
                    CauseEntry cs{jc.at("id").get<std::string>(),
                                  jc.at("description").get<std::string>()};
                    if (!matches_prefix_number(cs.id, "CS-"))
                        fail("malformed cause id '" + cs.id + "'");
                    u.causes.push_back(std::move(cs));
                }
            c.ucas.push_back(std::move(u));
        }

    if (root.contains("threats"))
        for (const json& j : root.at("threats")) {
            check_fields(j, "threat", {"id", "cia", "description", "scenarios"});
            Threat t;
            t.id = j.at("id").get<std::string>();
            check_unique(ids, t);
            t.cia = parse_cia(j.at("cia").get<std::string>());
            const char* prefix = t.cia == Cia::Confidentiality ? "SCT-C-"
                                 : t.cia == Cia::Integrity     ? "SCT-I-"
                                                               : "SCT-A-";
            if (!matches_prefix_number(t.id, prefix))
                fail("threat id '" + t.id + "' inconsistent with cia field");
            t.description = j.at("description").get<std::string>();
            if (j.contains("scenarios"))
                for (const json& sc : j.at("scenarios")) t.scenarios.push_back(sc.get<std::string>());
            c.threats.push_back(std::move(t));
        }

    auto threat_exists = [&](const std::string& id) {
        return std::any_of(c.threats.begin(), c.threats.end(),
                           [&](const Threat& t) { return t.id == id; });
    };

    if (root.contains("constraints"))
        for (const json& j : root.at("constraints")) {
            check_fields(j, "constraint", {"id", "kind", "description", "addresses"});
            ConstraintReq r;
            r.id = j.at("id").get<std::string>();
            if (r.id.compare(0, 3, "SC-") != 0) fail("malformed constraint id '" + r.id + "'");
            check_unique(ids, r);
            std::string kind = j.at("kind").get<std::string>();
            if (kind == "safety")
                r.kind = ConstraintKind::Safety;
            else if (kind == "security")
                r.kind = ConstraintKind::Security;
            else
                fail(r.id + ": kind must be 'safety' or 'security'");
            r.description = j.at("description").get<std::string>();
            for (const json& a : j.at("addresses")) {
                std::string ref = a.get<std::string>();
                if (!hazard_exists(ref) && !threat_exists(ref))
                    fail(r.id + " addresses unknown hazard/threat '" + ref + "'");
                r.addresses.push_back(std::move(ref));
            }
            if (r.addresses.empty()) fail(r.id + " addresses nothing");
            c.constraints.push_back(std::move(r));
        }

    return c;
}

ValidationReport validate_traceability(const StpaCatalog& c) {
    ValidationReport rep;

    std::set<std::string> addressed;
    for (const ConstraintReq& r : c.constraints)
        addressed.insert(r.addresses.begin(), r.addresses.end());

    for (const Hazard& h : c.hazards)
        if (!addressed.count(h.id)) rep.uncovered_hazards.push_back(h.id);
    for (const Threat& t : c.threats)
        if (!addressed.count(t.id)) rep.uncovered_threats.push_back(t.id);

    for (const UnsafeControlAction& u : c.ucas) {
        bool hazardous = false;
        for (const ControlAction& ca : c.control_actions) {
            if (ca.id != u.control_action) continue;
            for (const auto& [ctx, by_type] : ca.impact)
                for (const auto& [type, entry] : by_type)
                    if (entry.status == ImpactStatus::Hazardous) hazardous = true;
        }
        if (!hazardous) rep.ucas_without_hazard.push_back(u.id);
    }

    std::set<std::string> reachable;
    for (const Hazard& h : c.hazards) reachable.insert(h.leads_to.begin(), h.leads_to.end());
    for (const Loss& l : c.losses)
        if (!reachable.count(l.id)) rep.unreachable_losses.push_back(l.id);

    return rep;
}

std::vector<ConflictCandidate> identify_conflict_candidates(const StpaCatalog& c) {
    std::vector<ConflictCandidate> out;
    for (const ControlAction& ca : c.control_actions) {
        for (const auto& [ctx, by_type] : ca.impact) {
            auto provided = by_type.find(ActionType::Provided);
            auto not_provided = by_type.find(ActionType::NotProvided);
            if (provided == by_type.end() || not_provided == by_type.end()) continue;
            if (provided->second.status != ImpactStatus::Hazardous) continue;
            if (not_provided->second.status != ImpactStatus::Hazardous) continue;
            out.push_back({"controller", ca.id, ctx, provided->second.hazards,
                           not_provided->second.hazards});
        }
    }
    std::sort(out.begin(), out.end(), [](const ConflictCandidate& a, const ConflictCandidate& b) {
        return std::tie(a.control_action, a.context) < std::tie(b.control_action, b.context);
    });
    return out;
}

} // namespace boundsat
