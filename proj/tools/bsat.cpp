#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "boundsat/dimacs.hpp"
#include "boundsat/encoder.hpp"
#include "boundsat/report.hpp"
#include "boundsat/solver.hpp"
#include "boundsat/stpa.hpp"

namespace {

using namespace boundsat;

constexpr int kExitOk = 0;
constexpr int kExitRuntimeError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConflict = 3;
constexpr int kExitFindings = 4;
constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty())
        std::cout << content;
    else
        write_file(path, content);
}

SolverConfig make_config(const std::string& heuristic, const std::string& restarts,
                         std::uint64_t seed) {
    SolverConfig cfg;
    cfg.heuristic = heuristic == "vsids" ? Heuristic::Vsids : Heuristic::Static;
    cfg.restarts = restarts == "luby" ? RestartMode::Luby : RestartMode::Off;
    cfg.seed = seed;
    return cfg;
}

std::string sanitize_filename(const std::string& s) {
    std::string out;
    for (char c : s)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
    return out;
}

int cmd_solve(const std::string& path, const SolverConfig& cfg, const std::string& graph_path) {
    CnfFormula f = parse_dimacs(read_file(path));
    SolverConfig c = cfg;
    c.capture_graphs = c.capture_graphs || !graph_path.empty();
    SolveResult res = Solver().solve(f, c);
    if (!graph_path.empty() && res.final_graph) write_file(graph_path, export_dot(*res.final_graph));
    if (res.sat) {
        std::cout << "s SATISFIABLE\n";
        std::cout << "v";
        for (int v = 1; v <= f.num_vars; ++v)
            std::cout << ' ' << (res.model.get(v) == Value::True ? v : -v);
        std::cout << " 0\n";
        return kExitSat;
    }
    std::cout << "s UNSATISFIABLE\n";
    return kExitUnsat;
}

int cmd_encode(const std::string& scenario_path, const std::string& disturbance,
               const std::string& mode_name, const std::string& out_path) {
    Scenario s = load_scenario(read_file(scenario_path));
    const DisturbanceCase* d = s.find_disturbance(disturbance);
    if (!d) throw std::runtime_error("no such disturbance: " + disturbance);
    EncodeMode mode = mode_name == "paper" ? EncodeMode::Paper : EncodeMode::Strict;
    EncodedProblem p = encode(s, *d, mode);

    std::ostringstream out;
    out << "c scenario " << s.name << " disturbance " << d->id << " mode " << mode_name << "\n";
    for (const BoundLiteral& b : p.bound_map.literals())
        out << "c var " << b.sat_var << " = " << b.variable << ' ' << side_name(b.side) << "\n";
    for (int v = p.num_bound_vars + 1; v <= p.formula.num_vars; ++v)
        out << "c var " << v << " = aux\n";
    out << emit_dimacs(p.formula);
    write_output(out_path, out.str());
    return kExitOk;
}

int cmd_check(const std::string& scenario_path, const std::string& disturbance, bool all,
              const std::string& mode_name, const std::string& format,
              const std::string& graph_dir, const SolverConfig& cfg) {
    Scenario s = load_scenario(read_file(scenario_path));
    EncodeMode mode = mode_name == "paper" ? EncodeMode::Paper : EncodeMode::Strict;

    std::vector<const DisturbanceCase*> cases;
    if (all) {
        for (const DisturbanceCase& d : s.disturbances) cases.push_back(&d);
    } else {
        const DisturbanceCase* d = s.find_disturbance(disturbance);
        if (!d) throw std::runtime_error("no such disturbance: " + disturbance);
        cases.push_back(d);
    }

    bool want_graph = !graph_dir.empty();
    if (want_graph) std::filesystem::create_directories(graph_dir);

    bool any_conflict = false;
    nlohmann::ordered_json json_reports = nlohmann::ordered_json::array();
    for (const DisturbanceCase* d : cases) {
        ConflictReport r = analyze_case(s, *d, mode, cfg, want_graph);
        any_conflict = any_conflict || r.conflict;
        if (want_graph && r.graph_dot)
            write_file(graph_dir + "/" + sanitize_filename(d->id) + ".dot", *r.graph_dot);
        if (format == "json")
            json_reports.push_back(nlohmann::ordered_json::parse(render_json(r)));
        else
            std::cout << render_text(r);
    }
    if (format == "json") {
        if (all)
            std::cout << json_reports.dump(2) << "\n";
        else
            std::cout << json_reports.front().dump(2) << "\n";
    }
    return any_conflict ? kExitConflict : kExitOk;
}

int cmd_graph(const std::string& path, const SolverConfig& cfg, const std::string& out_path) {
    CnfFormula f = parse_dimacs(read_file(path));
    SolverConfig c = cfg;
    c.capture_graphs = true;
    SolveResult res = Solver().solve(f, c);
    // last conflict graph when any conflict occurred, else the final trail
    const ImplicationGraph& g = res.snapshots.empty() ? *res.final_graph : res.snapshots.back();
    write_output(out_path, export_dot(g));
    return kExitOk;
}

int cmd_stpa(const std::string& path, bool conflicts, bool trace) {
    StpaCatalog c = load_catalog(read_file(path));
    bool run_conflicts = conflicts || !trace;
    bool run_trace = trace || !conflicts;

    std::cout << "catalog: " << c.losses.size() << " losses, " << c.hazards.size() << " hazards, "
              << c.control_actions.size() << " control actions, " << c.ucas.size() << " ucas, "
              << c.threats.size() << " threats, " << c.constraints.size() << " constraints\n";

    bool findings = false;
    if (run_conflicts) {
        auto cands = identify_conflict_candidates(c);
        std::cout << "conflict candidates: " << cands.size() << "\n";
        for (const ConflictCandidate& cc : cands) {
            std::cout << "  " << cc.control_action << " @ " << cc.context << " ["
                      << cc.source_controller << "]: provided ->";
            for (const auto& h : cc.provided_hazards) std::cout << ' ' << h;
            std::cout << "; not provided ->";
            for (const auto& h : cc.not_provided_hazards) std::cout << ' ' << h;
            std::cout << "\n";
        }
        findings = findings || !cands.empty();
    }
    if (run_trace) {
        ValidationReport rep = validate_traceability(c);
        auto dump = [&](const char* label, const std::vector<std::string>& items) {
            if (items.empty()) return;
            std::cout << "  " << label << ":";
            for (const auto& i : items) std::cout << ' ' << i;
            std::cout << "\n";
        };
        std::cout << (rep.empty() ? "traceability: clean\n" : "traceability findings:\n");
        dump("uncovered hazards", rep.uncovered_hazards);
        dump("uncovered threats", rep.uncovered_threats);
        dump("ucas without hazardous control action", rep.ucas_without_hazard);
        dump("unreachable losses", rep.unreachable_losses);
        findings = findings || !rep.empty();
    }
    return findings ? kExitFindings : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SAT-based conflict analysis for interval-bounded safety/security constraints"};
    app.require_subcommand(1);

    std::string heuristic = "static", restarts = "off";
    std::uint64_t seed = 0;

    auto add_solver_flags = [&](CLI::App* sub) {
        sub->add_option("--heuristic", heuristic)->check(CLI::IsMember({"static", "vsids"}));
        sub->add_option("--restarts", restarts)->check(CLI::IsMember({"off", "luby"}));
        sub->add_option("--seed", seed);
    };

    std::string in_path, out_path, graph_path, graph_dir;
    std::string disturbance, mode = "strict", format = "text";
    bool all = false, conflicts = false, trace = false;

    CLI::App* solve = app.add_subcommand("solve", "solve a DIMACS CNF file");
    solve->add_option("dimacs", in_path)->required();
    solve->add_option("--graph", graph_path);
    add_solver_flags(solve);

    CLI::App* enc = app.add_subcommand("encode", "encode a scenario case as DIMACS");
    enc->add_option("scenario", in_path)->required();
    enc->add_option("--disturbance", disturbance)->required();
    enc->add_option("--mode", mode)->check(CLI::IsMember({"strict", "paper"}));
    enc->add_option("-o,--output", out_path);

    CLI::App* check = app.add_subcommand("check", "report boundary conflicts for a scenario");
    check->add_option("scenario", in_path)->required();
    auto* opt_d = check->add_option("--disturbance", disturbance);
    auto* opt_all = check->add_flag("--all", all);
    opt_d->excludes(opt_all);
    check->add_option("--mode", mode)->check(CLI::IsMember({"strict", "paper"}));
    check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    check->add_option("--graph-dir", graph_dir);
    add_solver_flags(check);

    CLI::App* graph = app.add_subcommand("graph", "solve with capture and emit a DOT graph");
    graph->add_option("dimacs", in_path)->required();
    graph->add_option("-o,--output", out_path);
    add_solver_flags(graph);

    CLI::App* stpa = app.add_subcommand("stpa", "STPA catalog checks");
    stpa->add_option("catalog", in_path)->required();
    stpa->add_flag("--conflicts", conflicts);
    stpa->add_flag("--trace", trace);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        SolverConfig cfg = make_config(heuristic, restarts, seed);
        if (solve->parsed()) return cmd_solve(in_path, cfg, graph_path);
        if (enc->parsed()) return cmd_encode(in_path, disturbance, mode, out_path);
        if (check->parsed()) {
            if (!all && disturbance.empty()) {
                std::cerr << "error: check requires --disturbance or --all\n";
                return kExitUsage;
            }
            return cmd_check(in_path, disturbance, all, mode, format, graph_dir, cfg);
        }
        if (graph->parsed()) return cmd_graph(in_path, cfg, out_path);
        if (stpa->parsed()) return cmd_stpa(in_path, conflicts, trace);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntimeError;
    }
    return kExitUsage;
}
