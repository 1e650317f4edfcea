#ifndef BOUNDSAT_SCENARIO_HPP
#define BOUNDSAT_SCENARIO_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boundsat/rational.hpp"

namespace boundsat {

struct Interval {
    Rational lo;
    Rational hi;
};

struct MonitoredVariable {
    std::string name;
    std::string unit;
    Interval safe;
};

struct DisturbanceCase {
    std::string id; // e.g. "IDV(1)"
    std::vector<std::pair<std::string, Interval>> observed; // declaration order
};

enum class Side { Lower, Upper };

inline const char* side_name(Side s) { return s == Side::Lower ? "lower" : "upper"; }

/// Reference to one side of a variable's safety interval inside a domain
/// spec; `negated` inverts the literal in the built expression.
struct DomainLiteralRef {
    std::string variable;
    Side side = Side::Lower;
    bool negated = false;
};

struct SubDomain {
    std::string name; // e.g. "D1"
    // Disjunction of conjunctions of literal refs.
    std::vector<std::vector<DomainLiteralRef>> terms;
};

enum class CompositionForm { AndOfOrs, OrOfAnds };

struct DomainSpec {
    std::vector<SubDomain> subdomains;
    CompositionForm form = CompositionForm::AndOfOrs;
    std::vector<std::vector<std::string>> groups; // subdomain names
};

struct Scenario {
    std::string name;
    std::vector<MonitoredVariable> variables;
    std::vector<DisturbanceCase> disturbances;
    std::optional<DomainSpec> domain_spec;

    const MonitoredVariable* find_variable(const std::string& n) const;
    const DisturbanceCase* find_disturbance(const std::string& id) const;
};

class ScenarioError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parse and validate scenario JSON; unknown fields are rejected.
Scenario load_scenario(const std::string& text);

} // namespace boundsat

#endif
