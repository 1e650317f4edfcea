#ifndef BOUNDSAT_REPORT_HPP
#define BOUNDSAT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "boundsat/encoder.hpp"
#include "boundsat/solver.hpp"

namespace boundsat {

struct ViolatedBound {
    std::string variable;
    Side side = Side::Lower;
    Rational safe_value;     // the breached endpoint of the safety interval
    Rational observed_value; // the breaching endpoint of the observed interval
    std::string unit;
    std::string disturbance;
    std::vector<std::string> domains; // paper mode: subdomains naming this literal
};

struct ConflictReport {
    std::string scenario;
    std::string disturbance;
    EncodeMode mode = EncodeMode::Strict;
    bool conflict = false;
    std::vector<ViolatedBound> violations; // declaration order, lower before upper
    SolverStats solver_stats;
    std::optional<std::string> graph_dot;
};

/// Encode the case, run the solver, and translate the outcome back to named
/// bound violations. In strict mode the violation set is read from the
/// pinned valuation (the solver result is the conflict gate); in paper mode
/// it comes from the bound literals involved in the final level-0 conflict.
ConflictReport analyze_case(const Scenario& s, const DisturbanceCase& d, EncodeMode mode,
                            const SolverConfig& config = {}, bool want_graph = false);

std::string render_text(const ConflictReport& r);
std::string render_json(const ConflictReport& r);

} // namespace boundsat

#endif
