#ifndef BOUNDSAT_STPA_HPP
#define BOUNDSAT_STPA_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace boundsat {

struct Loss {
    std::string id; // "L-n"
    std::string description;
};

struct Hazard {
    std::string id; // "H-n"
    std::string description;
    std::vector<std::string> leads_to; // loss ids, non-empty
};

enum class ActionType { NotProvided, Provided, TooEarlyLate, StoppedEarlyLate };
enum class ImpactStatus { Hazardous, NotApplicable, Safe };

struct ImpactEntry {
    ImpactStatus status = ImpactStatus::NotApplicable;
    std::vector<std::string> hazards; // non-empty iff hazardous
};

struct ControlAction {
    std::string id; // "CA-n"
    std::string description;
    // context tag -> action type -> entry
    std::map<std::string, std::map<ActionType, ImpactEntry>> impact;
};

struct CauseEntry {
    std::string id; // "CS-n" / "CS-n.m"
    std::string description;
};

struct UnsafeControlAction {
    std::string id; // "UCA-n"
    std::string control_action;
    std::string description;
    std::vector<CauseEntry> causes;
};

enum class Cia { Confidentiality, Integrity, Availability };

struct Threat {
    std::string id; // "SCT-{C|I|A}-n"
    Cia cia = Cia::Integrity;
    std::string description;
    std::vector<std::string> scenarios;
};

enum class ConstraintKind { Safety, Security };

struct ConstraintReq {
    std::string id; // "SC-..."
    ConstraintKind kind = ConstraintKind::Safety;
    std::string description;
    std::vector<std::string> addresses; // hazard or threat ids, non-empty
};

struct StpaCatalog {
    std::vector<std::string> contexts; // always contains "any"
    std::vector<Loss> losses;
    std::vector<Hazard> hazards;
    std::vector<ControlAction> control_actions;
    std::vector<UnsafeControlAction> ucas;
    std::vector<Threat> threats;
    std::vector<ConstraintReq> constraints;
};

class CatalogError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parse catalog JSON; duplicate ids, dangling references and malformed id
/// patterns are rejected.
StpaCatalog load_catalog(const std::string& text);

/// Findings, not failures.
struct ValidationReport {
    std::vector<std::string> uncovered_hazards;       // no addressing constraint
    std::vector<std::string> uncovered_threats;       // no addressing constraint
    std::vector<std::string> ucas_without_hazard;     // CA has no hazardous impact entry
    std::vector<std::string> unreachable_losses;      // not referenced by any hazard

    bool empty() const {
        return uncovered_hazards.empty() && uncovered_threats.empty() &&
               ucas_without_hazard.empty() && unreachable_losses.empty();
    }
};

ValidationReport validate_traceability(const StpaCatalog& c);

/// A control action whose provided and not-provided entries are both
/// hazardous in the same context.
struct ConflictCandidate {
    std::string source_controller;
    std::string control_action;
    std::string context;
    std::vector<std::string> provided_hazards;
    std::vector<std::string> not_provided_hazards;
};

/// Ordered by (control action id, context).
std::vector<ConflictCandidate> identify_conflict_candidates(const StpaCatalog& c);

} // namespace boundsat

#endif
