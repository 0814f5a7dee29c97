#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commitguard/engine.hpp"
#include "commitguard/errors.hpp"
#include "commitguard/logging.hpp"
#include "commitguard/oracle.hpp"
#include "commitguard/reporting.hpp"
#include "commitguard/scenarios.hpp"
#include "commitguard/workload.hpp"

namespace {

using namespace commitguard;

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitParse = 2;
constexpr int kExitWatchdog = 3;
constexpr int kExitRuntime = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.is_open()) throw IoError(path, "cannot open");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// "Resp1=Writer" style classification overrides.
std::map<ResponsibilityId, AccessClass> parse_overrides(
    const std::vector<std::string>& specs) {
    std::map<ResponsibilityId, AccessClass> overrides;
    for (const std::string& spec : specs) {
        const std::size_t eq = spec.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("override must look like RespK=Reader|Writer: " + spec);
        }
        const auto id = responsibility_from_string(spec.substr(0, eq));
        const auto cls = access_class_from_string(spec.substr(eq + 1));
        if (!id || !cls) throw ConfigError("bad override '" + spec + "'");
        overrides[*id] = *cls;
    }
    return overrides;
}

struct RunOptions {
    std::string input;
    bool wall = false;
    std::string policy = "fcfs";
    std::uint64_t seed = 0;
    Tick duration = 5;
    Tick max_wait = kWatchdogDisabled;
    double reader_fraction = 0.3;
    std::string out_dir = "out";
    std::string format = "csv";
    std::vector<std::string> overrides;
};

int cmd_run(const RunOptions& opts) {
    std::string text;
    try {
        text = read_file(opts.input);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }

    std::vector<SimEvent> events;
    try {
        if (opts.wall) {
            WallMappingConfig wall_cfg;
            wall_cfg.reader_fraction = opts.reader_fraction;
            wall_cfg.duration = opts.duration;
            events = parse_wall_trace(text, wall_cfg);
        } else {
            events = parse_scenario(text, ScenarioDefaults{opts.duration, 0});
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << opts.input << ": " << e.what() << "\n";
        return kExitParse;
    }

    SimConfig cfg;
    cfg.seed = opts.seed;
    cfg.default_duration = opts.duration;
    cfg.max_wait = opts.max_wait;
    const auto policy = policy_from_string(opts.policy);
    if (!policy) {
        std::cerr << "error: unknown policy '" << opts.policy << "'\n";
        return kExitRuntime;
    }
    cfg.policy = *policy;

    try {
        cfg.classification_overrides = parse_overrides(opts.overrides);
        cfg.validate();
        const RunResult result = run(events, cfg);
        const auto format = emit_format_from_string(opts.format);
        if (!format) {
            std::cerr << "error: unknown format '" << opts.format << "'\n";
            return kExitRuntime;
        }
        emit(result.metrics, result.log, *format, opts.out_dir);
        const auto [friends, families, strangers] = state_counts(result.metrics);
        std::cout << "records=" << result.log.size() << " friend=" << friends
                  << " family=" << families << " strange=" << strangers
                  << " waited=" << waited_count(result.metrics) << "\n";
        return kExitOk;
    } catch (const WatchdogExpired& e) {
        std::cerr << "error: watchdog: " << e.what() << "\n";
        return kExitWatchdog;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

int cmd_check(const std::string& path, const std::vector<std::string>& overrides) {
    try {
        const std::string text = read_file(path);
        const ExecutionLog log = log_from_csv(text);
        SimConfig cfg;
        cfg.classification_overrides = parse_overrides(overrides);
        const Verdict verdict = check_log(log, cfg.classification());
        std::cout << to_string(verdict.status) << "\n";
        for (const Violation& v : verdict.violations) {
            std::cout << "violation: cid " << v.first << " overlaps cid " << v.second
                      << " on " << to_display(v.account) << " over [" << v.overlap_start
                      << "," << v.overlap_end << ")\n";
        }
        return verdict.consistent() ? kExitOk : kExitInconsistent;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ParseError& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const MalformedLog& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        return kExitParse;
    }
}

struct GenOptions {
    std::uint64_t seed = 42;
    std::size_t events = 1000;
    std::size_t accounts = 10;
    double reader_fraction = 0.3;
    std::string out;
};

int cmd_gen(const GenOptions& opts) {
    SyntheticConfig cfg;
    cfg.seed = opts.seed;
    cfg.n_events = opts.events;
    cfg.n_accounts = opts.accounts;
    cfg.reader_fraction = opts.reader_fraction;
    const std::string text = serialize_scenario(generate_synthetic(cfg));
    if (opts.out.empty() || opts.out == "-") {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(opts.out, std::ios::binary | std::ios::trunc);
    if (!out.is_open()) {
        std::cerr << "error: cannot write " << opts.out << "\n";
        return kExitRuntime;
    }
    out << text;
    return kExitOk;
}

int cmd_replay(bool list_only, const std::vector<std::string>& overrides) {
    if (list_only) {
        for (const GoldenScenario& s : golden_scenarios()) {
            std::cout << s.name << "  " << s.description << "\n";
        }
        return kExitOk;
    }

    bool all_ok = true;
    for (const GoldenScenario& s : golden_scenarios()) {
        SimConfig cfg = s.config;
        try {
            cfg.classification_overrides = parse_overrides(overrides);
        } catch (const ConfigError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitRuntime;
        }

        bool ok = true;
        std::string reason;
        try {
            const RunResult result = run(s.events, cfg);
            const std::string narrative = render_narrative(result.log);
            if (narrative != s.expected_narrative) {
                ok = false;
                reason = "narrative diverged";
            }
            const auto [friends, families, strangers] = state_counts(result.metrics);
            if (friends != s.expected_friend || families != s.expected_family ||
                strangers != s.expected_strange ||
                waited_count(result.metrics) != s.expected_waited) {
                ok = false;
                reason = reason.empty() ? "relation counters diverged"
                                        : reason + "; relation counters diverged";
            }
            const Verdict pressure = conflict_pressure(s.events, cfg);
            if (pressure.status != s.expected_pressure) {
                ok = false;
                reason = reason.empty() ? "pressure label diverged"
                                        : reason + "; pressure label diverged";
            }
        } catch (const Error& e) {
            ok = false;
            reason = e.what();
        }

        if (ok) {
            std::cout << "ok " << s.name << "\n";
        } else {
            std::cout << "mismatch " << s.name << "\n";
            std::cerr << s.name << ": " << reason << "\n";
            all_ok = false;
        }
    }
    return all_ok ? kExitOk : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reader/writer commitment coordination simulator"};
    app.require_subcommand(1);

    RunOptions run_opts;
    CLI::App* run_cmd = app.add_subcommand(
        "run", "Replay a scenario or wall trace and emit log, metrics, narrative");
    run_cmd->add_option("input", run_opts.input, "scenario file (or wall trace with --wall)")
        ->required();
    run_cmd->add_flag("--wall", run_opts.wall, "treat input as a wall-post trace");
    run_cmd->add_option("--policy", run_opts.policy, "fcfs|priority");
    run_cmd->add_option("--seed", run_opts.seed, "seed recorded in the run config");
    run_cmd->add_option("--duration", run_opts.duration, "default duration in ticks");
    run_cmd->add_option("--max-wait", run_opts.max_wait, "watchdog limit in ticks");
    run_cmd->add_option("--reader-fraction", run_opts.reader_fraction,
                        "fraction of wall lines remapped to reads");
    run_cmd->add_option("--out", run_opts.out_dir, "output directory");
    run_cmd->add_option("--format", run_opts.format, "csv|text metrics format");
    run_cmd->add_option("--override", run_opts.overrides,
                        "classification override RespK=Reader|Writer");

    std::string check_path;
    std::vector<std::string> check_overrides;
    CLI::App* check_cmd =
        app.add_subcommand("check", "Run the consistency oracle over a log.csv");
    check_cmd->add_option("log", check_path, "log.csv produced by run")->required();
    check_cmd->add_option("--override", check_overrides,
                          "classification override RespK=Reader|Writer");

    GenOptions gen_opts;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a synthetic scenario");
    gen_cmd->add_option("--seed", gen_opts.seed, "generator seed");
    gen_cmd->add_option("--events", gen_opts.events, "number of events");
    gen_cmd->add_option("--accounts", gen_opts.accounts, "number of accounts");
    gen_cmd->add_option("--reader-fraction", gen_opts.reader_fraction,
                        "fraction of reader events");
    gen_cmd->add_option("--out", gen_opts.out, "output file (default stdout)");

    bool replay_list = false;
    std::vector<std::string> replay_overrides;
    CLI::App* replay_cmd = app.add_subcommand(
        "replay-paper", "Replay the built-in golden scenarios and diff the outputs");
    replay_cmd->add_flag("--list", replay_list, "list scenario names and exit");
    replay_cmd->add_option("--override", replay_overrides,
                           "classification override RespK=Reader|Writer");

    CLI11_PARSE(app, argc, argv);

    if (run_cmd->parsed()) return cmd_run(run_opts);
    if (check_cmd->parsed()) return cmd_check(check_path, check_overrides);
    if (gen_cmd->parsed()) return cmd_gen(gen_opts);
    if (replay_cmd->parsed()) return cmd_replay(replay_list, replay_overrides);
    return kExitRuntime;
}
