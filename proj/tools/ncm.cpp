#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncm/analysis.hpp"
#include "ncm/dsl.hpp"
#include "ncm/errors.hpp"
#include "ncm/inference.hpp"
#include "ncm/map.hpp"
#include "ncm/render.hpp"
#include "ncm/report.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Parses the map file; on failure prints positioned errors to stderr and
/// returns nothing.
std::optional<ncm::MapDocument> load_document(const std::string& path) {
    auto text = read_file(path);
    if (!text) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return std::nullopt;
    }
    ncm::ParseResult parsed = ncm::parse_map(*text);
    if (!parsed.ok()) {
        for (const ncm::ParseError& e : parsed.errors)
            std::cerr << e.line << ":" << e.column << " " << e.code << " " << e.message << "\n";
        return std::nullopt;
    }
    return std::move(parsed.document);
}

std::string concepts_header(const ncm::CognitiveMap& map) {
    std::string out = "concepts:";
    for (const ncm::Concept& c : map.concepts) out += " " + c.id;
    return out;
}

std::string render_states(const ncm::StateVector& state) {
    std::string out;
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (i) out += " ";
        out += ncm::to_string(state[i]);
    }
    return out;
}

std::string render_raw(const ncm::RawActivation& raw) {
    std::string out = "(";
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (i) out += ", ";
        out += ncm::to_string(raw[i]);
    }
    return out + ")";
}

std::string render_on_set(const ncm::CognitiveMap& map, const std::vector<std::size_t>& on_set) {
    std::string out = "{";
    for (std::size_t i = 0; i < on_set.size(); ++i) {
        if (i) out += ",";
        out += map.concepts[on_set[i]].id;
    }
    return out + "}";
}

const char* kind_label(ncm::SimulationResult::Kind kind) {
    switch (kind) {
        case ncm::SimulationResult::Kind::FixedPoint: return "fixed point";
        case ncm::SimulationResult::Kind::LimitCycle: return "limit cycle";
        case ncm::SimulationResult::Kind::StepLimitExceeded: break;
    }
    return "step limit exceeded";
}

const char* kind_key(ncm::SimulationResult::Kind kind) {
    switch (kind) {
        case ncm::SimulationResult::Kind::FixedPoint: return "fixed_point";
        case ncm::SimulationResult::Kind::LimitCycle: return "limit_cycle";
        case ncm::SimulationResult::Kind::StepLimitExceeded: break;
    }
    return "step_limit";
}

ordered_json states_json(const std::vector<ncm::StateVector>& states) {
    auto arr = ordered_json::array();
    for (const auto& s : states) {
        auto one = ordered_json::array();
        for (ncm::TriState t : s) one.push_back(ncm::to_string(t));
        arr.push_back(one);
    }
    return arr;
}

void emit(const std::string& text, const std::string& out_path, int& status) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        status = kDomainError;
        return;
    }
    out << text;
}

struct SimulateArgs {
    std::string path;
    std::string on;
    std::string clamp;
    bool clamp_given = false;
    double threshold = 0.0;
    bool threshold_given = false;
    std::size_t max_steps = 1000;
    bool trace = false;
    bool json = false;
};

int run_simulate(const SimulateArgs& args) {
    auto doc = load_document(args.path);
    if (!doc) return kDomainError;
    const ncm::CognitiveMap& map = doc->map;

    ncm::SimulationConfig config;
    config.threshold = args.threshold_given ? args.threshold : map.default_threshold;
    config.max_steps = args.max_steps;
    config.record_trace = args.trace;
    if (args.clamp_given) config.clamp = split_csv(args.clamp);

    ncm::StateVector initial(map.concepts.size(), ncm::TriState::Off);
    for (const std::string& id : split_csv(args.on))
        initial[ncm::concept_index(map, id)] = ncm::TriState::On;

    ncm::SimulationResult result = ncm::find_hidden_pattern(map, initial, config);

    if (args.json) {
        std::cout << ncm::write_report(result, map, config).to_string() << "\n";
        return kOk;
    }

    std::cout << concepts_header(map) << "\n";
    for (std::size_t t = 0; t < result.trace.size(); ++t) {
        std::cout << "step " << t + 1 << ": raw " << render_raw(result.trace[t].raw) << "\n";
        std::cout << "step " << t + 1 << ": state " << render_states(result.trace[t].state)
                  << "\n";
    }
    std::cout << "outcome: " << kind_label(result.kind);
    if (result.kind == ncm::SimulationResult::Kind::LimitCycle)
        std::cout << " (period " << result.period << ")";
    std::cout << "\n";
    if (result.kind == ncm::SimulationResult::Kind::FixedPoint)
        std::cout << "final state: " << render_states(result.states.front()) << "\n";
    if (result.kind == ncm::SimulationResult::Kind::LimitCycle)
        for (std::size_t i = 0; i < result.states.size(); ++i)
            std::cout << "cycle state " << i + 1 << ": " << render_states(result.states[i])
                      << "\n";
    std::cout << "steps: " << result.steps_taken << "\n";
    return kOk;
}

struct EnumerateArgs {
    std::string path;
    std::string sizes;
    bool all = false;
    bool force = false;
    bool json = false;
};

int run_enumerate(const EnumerateArgs& args) {
    auto doc = load_document(args.path);
    if (!doc) return kDomainError;
    const ncm::CognitiveMap& map = doc->map;

    std::optional<std::set<std::size_t>> sizes;  // nullopt = every non-empty on-set
    if (!args.sizes.empty()) {
        sizes.emplace();
        for (const std::string& s : split_csv(args.sizes)) {
            if (s.find_first_not_of("0123456789") != std::string::npos) {
                std::cerr << "error: --sizes expects a comma-separated list of counts\n";
                return kUsageError;
            }
            sizes->insert(std::stoul(s));
        }
    }

    ncm::SimulationConfig config;
    config.threshold = map.default_threshold;

    std::vector<ncm::ScenarioRow> rows = ncm::enumerate_scenarios(map, config, sizes, args.force);
    std::vector<ncm::AttractorGroup> groups = ncm::group_by_attractor(rows);

    if (args.json) {
        ordered_json out;
        out["map"] = map.name;
        ordered_json cfg;
        cfg["threshold"] = config.threshold;
        cfg["max_steps"] = config.max_steps;
        out["config"] = cfg;
        auto jrows = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r;
            auto on = ordered_json::array();
            for (std::size_t c : row.on_set) on.push_back(map.concepts[c].id);
            r["on_set"] = on;
            r["kind"] = kind_key(row.outcome.kind);
            r["states"] = states_json(row.outcome.states);
            if (row.outcome.kind == ncm::SimulationResult::Kind::LimitCycle)
                r["period"] = row.outcome.period;
            r["steps_taken"] = row.outcome.steps_taken;
            jrows.push_back(r);
        }
        out["rows"] = jrows;
        auto jgroups = ordered_json::array();
        for (const auto& g : groups) {
            ordered_json jg;
            jg["kind"] = kind_key(g.kind);
            jg["attractor"] = states_json(g.attractor);
            auto members = ordered_json::array();
            for (const auto& m : g.members) {
                auto on = ordered_json::array();
                for (std::size_t c : m) on.push_back(map.concepts[c].id);
                members.push_back(on);
            }
            jg["members"] = members;
            jgroups.push_back(jg);
        }
        out["groups"] = jgroups;
        std::cout << out.dump(2) << "\n";
        return kOk;
    }

    std::cout << concepts_header(map) << "\n";
    for (const auto& row : rows) {
        std::cout << render_on_set(map, row.on_set) << " " << kind_label(row.outcome.kind);
        if (!row.outcome.states.empty()) {
            std::cout << ": " << render_states(row.outcome.states.front());
            for (std::size_t i = 1; i < row.outcome.states.size(); ++i)
                std::cout << " | " << render_states(row.outcome.states[i]);
        }
        std::cout << " (steps " << row.outcome.steps_taken << ")\n";
    }
    std::cout << "attractor groups: " << groups.size() << "\n";
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const auto& g = groups[i];
        std::cout << "group " << i + 1 << ": " << g.members.size() << " member"
                  << (g.members.size() == 1 ? "" : "s") << " -> " << kind_label(g.kind);
        if (!g.attractor.empty()) {
            std::cout << " " << render_states(g.attractor.front());
            for (std::size_t s = 1; s < g.attractor.size(); ++s)
                std::cout << " | " << render_states(g.attractor[s]);
        }
        std::cout << "\n";
    }
    return kOk;
}

struct AnalyzeArgs {
    std::string path;
    std::size_t top = 3;
    bool json = false;
};

int run_analyze(const AnalyzeArgs& args) {
    auto doc = load_document(args.path);
    if (!doc) return kDomainError;
    const ncm::CognitiveMap& map = doc->map;

    auto diags = ncm::validate(map);
    if (ncm::has_errors(diags)) {
        for (const auto& d : diags)
            std::cerr << d.location << ": " << d.message << " [" << d.code << "]\n";
        return kDomainError;
    }

    std::vector<ncm::InfluenceProfile> profiles = ncm::influence_profiles(map);
    std::vector<ncm::Edge> strongest = ncm::strongest_edges(map, args.top);
    std::vector<ncm::Edge> indeterminate = ncm::indeterminate_edges(map);

    if (args.json) {
        ordered_json out;
        out["map"] = map.name;
        out["concepts"] = map.concepts.size();
        out["edges"] = map.edges.size();
        auto jprofiles = ordered_json::array();
        for (const auto& p : profiles) {
            ordered_json jp;
            jp["concept"] = p.concept_id;
            jp["in_degree"] = p.in_degree;
            jp["out_degree"] = p.out_degree;
            auto neighbors = [](const std::vector<ncm::WeightedNeighbor>& list) {
                auto arr = ordered_json::array();
                for (const auto& n : list) {
                    ordered_json jn;
                    jn["concept"] = n.id;
                    jn["weight"] = ncm::to_string(n.weight);
                    arr.push_back(jn);
                }
                return arr;
            };
            jp["incoming"] = neighbors(p.incoming);
            jp["outgoing"] = neighbors(p.outgoing);
            jprofiles.push_back(jp);
        }
        out["profiles"] = jprofiles;
        auto jstrong = ordered_json::array();
        for (const auto& e : strongest) {
            ordered_json je;
            je["from"] = e.from;
            je["to"] = e.to;
            je["weight"] = ncm::to_string(e.weight);
            jstrong.push_back(je);
        }
        out["strongest_edges"] = jstrong;
        auto jind = ordered_json::array();
        for (const auto& e : indeterminate) {
            ordered_json je;
            je["from"] = e.from;
            je["to"] = e.to;
            jind.push_back(je);
        }
        out["indeterminate_edges"] = jind;
        std::cout << out.dump(2) << "\n";
        return kOk;
    }

    std::cout << "map: " << map.name << " (" << map.concepts.size() << " concepts, "
              << map.edges.size() << " edges)\n";
    std::cout << "influence profiles:\n";
    for (const auto& p : profiles) {
        std::cout << "  " << p.concept_id << ": in " << p.in_degree << ", out " << p.out_degree
                  << "\n";
        auto print_list = [](const char* tag, const std::vector<ncm::WeightedNeighbor>& list) {
            if (list.empty()) return;
            std::cout << "    " << tag << " ";
            for (std::size_t i = 0; i < list.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << list[i].id << " " << ncm::to_string(list[i].weight);
            }
            std::cout << "\n";
        };
        print_list("in: ", p.incoming);
        print_list("out:", p.outgoing);
    }
    std::cout << "strongest edges (top " << args.top << "):\n";
    for (const auto& e : strongest)
        std::cout << "  " << e.from << " -> " << e.to << " " << ncm::to_string(e.weight) << "\n";
    std::cout << "indeterminate edges (" << indeterminate.size() << "):\n";
    for (const auto& e : indeterminate) std::cout << "  " << e.from << " -> " << e.to << "\n";
    return kOk;
}

int run_validate(const std::string& path) {
    auto text = read_file(path);
    if (!text) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return kDomainError;
    }
    ncm::ParseResult parsed = ncm::parse_map(*text);
    if (!parsed.ok()) {
        for (const ncm::ParseError& e : parsed.errors)
            std::cerr << e.line << ":" << e.column << " " << e.code << " " << e.message << "\n";
        return kDomainError;
    }
    const ncm::MapDocument& doc = *parsed.document;
    auto diags = ncm::validate(doc.map);
    for (const auto& d : diags) {
        // map validator locations back to source lines where possible
        std::size_t line = 1;
        if (d.location.rfind("concept ", 0) == 0) {
            if (auto idx = doc.map.find_concept(d.location.substr(8)))
                line = doc.concept_lines[*idx];
        }
        std::cerr << line << ":1 " << d.code << " " << d.message << "\n";
    }
    return ncm::has_errors(diags) ? kDomainError : kOk;
}

struct ExportArgs {
    std::string path;
    std::string format;
    std::string out_path;
};

int run_export(const ExportArgs& args) {
    auto doc = load_document(args.path);
    if (!doc) return kDomainError;
    const ncm::CognitiveMap& map = doc->map;

    int status = kOk;
    if (args.format == "dot") {
        emit(ncm::export_dot(map), args.out_path, status);
    } else {
        std::vector<std::string> ids;
        for (const ncm::Concept& c : map.concepts) ids.push_back(c.id);
        emit(ncm::render_matrix(ncm::build_adjacency(map), ids), args.out_path, status);
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Neutrosophic cognitive map toolkit: validate, simulate, enumerate, "
                 "analyze, and export .ncm map files"};
    app.require_subcommand(1);

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "Check a map file and print diagnostics");
    validate->add_option("path", validate_path, "map file")->required();

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Find the hidden pattern for an on-set");
    simulate->add_option("path", sim.path, "map file")->required();
    simulate->add_option("--on", sim.on, "comma-separated concepts switched on")->required();
    auto* threshold_opt = simulate->add_option("--threshold", sim.threshold,
                                               "threshold k (default: the map's)");
    auto* clamp_opt = simulate->add_option(
        "--clamp", sim.clamp, "comma-separated concepts held On (default: the on-set)");
    simulate->add_option("--max-steps", sim.max_steps, "iteration guard")
        ->check(CLI::PositiveNumber);
    simulate->add_flag("--trace", sim.trace, "print every raw vector and state");
    simulate->add_flag("--json", sim.json, "emit the JSON report");

    EnumerateArgs en;
    auto* enumerate = app.add_subcommand("enumerate", "Run every on-set of the chosen sizes");
    enumerate->add_option("path", en.path, "map file")->required();
    auto* sizes_opt = enumerate->add_option("--sizes", en.sizes, "comma-separated on-set sizes");
    auto* all_opt = enumerate->add_flag("--all", en.all, "every non-empty on-set (default)");
    sizes_opt->excludes(all_opt);
    enumerate->add_flag("--force", en.force, "override the scenario-count guard");
    enumerate->add_flag("--json", en.json, "emit JSON rows and groups");

    AnalyzeArgs an;
    auto* analyze = app.add_subcommand("analyze", "Degrees, strongest and indeterminate edges");
    analyze->add_option("path", an.path, "map file")->required();
    analyze->add_option("--top", an.top, "how many strongest edges")->check(CLI::PositiveNumber);
    analyze->add_flag("--json", an.json, "emit the JSON analysis");

    ExportArgs ex;
    auto* export_cmd = app.add_subcommand("export", "Render the map as DOT or a matrix table");
    export_cmd->add_option("path", ex.path, "map file")->required();
    export_cmd->add_option("--format", ex.format, "dot | matrix")
        ->required()
        ->check(CLI::IsMember({"dot", "matrix"}));
    export_cmd->add_option("-o,--output", ex.out_path, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    sim.threshold_given = threshold_opt->count() > 0;
    sim.clamp_given = clamp_opt->count() > 0;

    try {
        if (validate->parsed()) return run_validate(validate_path);
        if (simulate->parsed()) return run_simulate(sim);
        if (enumerate->parsed()) return run_enumerate(en);
        if (analyze->parsed()) return run_analyze(an);
        if (export_cmd->parsed()) return run_export(ex);
    } catch (const ncm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kUsageError;
}
