#include "commitguard/workload.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "commitguard/errors.hpp"

namespace commitguard {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

std::int64_t parse_int(std::string_view text, std::size_t line_no, const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError(line_no,
                         std::string("bad ") + what + " '" + std::string(text) + "'");
    }
    return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = text.find('\n', pos);
        std::string_view line = (end == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, end - pos);
        pos = (end == std::string_view::npos) ? text.size() + 1 : end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        fn(line, line_no);
    }
}

// Uniform draw in [0, n) from the top bits of the generator, stable across
// standard library implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<SimEvent> parse_scenario(std::string_view text,
                                     const ScenarioDefaults& defaults) {
    std::vector<SimEvent> events;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        if (line.empty() || line.front() == '#') return;

        SimEvent ev;
        ev.duration = defaults.duration;
        ev.priority = defaults.priority;
        bool have_at = false, have_network = false, have_action = false,
             have_service = false, have_account = false;

        for (std::string_view token : split_ws(line)) {
            const std::size_t eq = token.find('=');
            if (eq == std::string_view::npos) {
                throw ParseError(line_no, "expected key=value, got '" +
                                              std::string(token) + "'");
            }
            const std::string_view key = token.substr(0, eq);
            const std::string_view value = token.substr(eq + 1);
            if (key == "at") {
                ev.at = parse_int(value, line_no, "tick");
                have_at = true;
            } else if (key == "network") {
                ev.network = std::string(value);
                have_network = true;
            } else if (key == "account") {
                ev.account = std::string(value);
                have_account = true;
            } else if (key == "action") {
                auto action = action_from_string(value);
                if (!action) throw UnknownAction(line_no, std::string(value));
                ev.action = *action;
                have_action = true;
            } else if (key == "service") {
                ev.service = std::string(value);
                have_service = true;
            } else if (key == "duration") {
                ev.duration = parse_int(value, line_no, "duration");
            } else if (key == "priority") {
                ev.priority = parse_int(value, line_no, "priority");
            } else if (key == "detail") {
                ev.detail = std::string(value);
            } else if (key == "purpose") {
                ev.purpose = std::string(value);
            } else {
                throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
            }
        }

        if (!have_at) throw ParseError(line_no, "missing at");
        if (!have_network) throw ParseError(line_no, "missing network");
        if (!have_action) throw ParseError(line_no, "missing action");
        if (!have_service) throw ParseError(line_no, "missing service");
        if (!have_account && ev.action != SimAction::Register) {
            throw ParseError(line_no, "missing account");
        }
        if (ev.at < 0) throw ParseError(line_no, "negative tick");
        if (ev.duration < 1) throw ParseError(line_no, "duration must be at least 1");
        events.push_back(std::move(ev));
    });

    std::stable_sort(events.begin(), events.end(),
                     [](const SimEvent& a, const SimEvent& b) { return a.at < b.at; });
    return events;
}

std::string serialize_scenario(std::span<const SimEvent> events) {
    std::string out;
    for (const SimEvent& ev : events) {
        out += "at=" + std::to_string(ev.at);
        out += " network=" + ev.network;
        out += " account=" + ev.account;
        out += " action=" + std::string(to_string(ev.action));
        out += " service=" + ev.service;
        out += " duration=" + std::to_string(ev.duration);
        out += " priority=" + std::to_string(ev.priority);
        out += " detail=" + ev.detail;
        out += " purpose=" + ev.purpose;
        out += "\n";
    }
    return out;
}

std::vector<SimEvent> parse_wall_trace(std::string_view text,
                                       const WallMappingConfig& cfg) {
    struct WallLine {
        std::int64_t poster;
        std::int64_t owner;
        std::int64_t timestamp;
    };
    std::vector<WallLine> lines;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        if (line.empty() || line.front() == '%') return;
        const auto tokens = split_ws(line);
        if (tokens.empty()) return;
        if (tokens.size() != 3) {
            throw ParseError(line_no, "expected 3 fields, got " +
                                          std::to_string(tokens.size()));
        }
        lines.push_back(WallLine{parse_int(tokens[0], line_no, "poster"),
                                 parse_int(tokens[1], line_no, "wall owner"),
                                 parse_int(tokens[2], line_no, "timestamp")});
    });
    if (lines.empty()) return {};

    std::int64_t min_ts = std::numeric_limits<std::int64_t>::max();
    for (const WallLine& l : lines) min_ts = std::min(min_ts, l.timestamp);

    std::vector<SimEvent> events;
    events.reserve(lines.size());
    std::size_t remap_ordinal = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const WallLine& l = lines[i];
        // Fraction rule: line i is remapped when the running quota
        // floor((i+1)*f) advances past floor(i*f).
        const bool remapped =
            !cfg.remap_targets.empty() &&
            std::floor(static_cast<double>(i + 1) * cfg.reader_fraction) >
                std::floor(static_cast<double>(i) * cfg.reader_fraction);

        SimEvent ev;
        ev.at = l.timestamp - min_ts;
        ev.network = cfg.network;
        ev.account = std::to_string(l.owner);
        ev.service = "sws_" + std::to_string(l.poster);
        ev.duration = cfg.duration;
        ev.priority = cfg.priority;
        ev.detail = "wall_item_" + std::to_string(i);
        ev.purpose = "wall_sync";
        ev.action = remapped
                        ? cfg.remap_targets[remap_ordinal++ % cfg.remap_targets.size()]
                        : SimAction::Post;
        events.push_back(std::move(ev));
    }

    std::stable_sort(events.begin(), events.end(),
                     [](const SimEvent& a, const SimEvent& b) { return a.at < b.at; });

    // Register each service right before its first action.
    std::vector<SimEvent> with_registers;
    with_registers.reserve(events.size() * 2);
    std::set<std::string> seen;
    for (SimEvent& ev : events) {
        if (seen.insert(ev.service).second) {
            SimEvent reg;
            reg.at = ev.at;
            reg.network = ev.network;
            reg.action = SimAction::Register;
            reg.service = ev.service;
            reg.detail = ev.service;  // credentials
            with_registers.push_back(std::move(reg));
        }
        with_registers.push_back(std::move(ev));
    }
    return with_registers;
}

std::vector<SimEvent> generate_synthetic(const SyntheticConfig& cfg) {
    std::vector<SimEvent> events;
    if (cfg.n_events == 0) return events;

    std::mt19937_64 rng(cfg.seed);
    const std::size_t n_accounts = std::max<std::size_t>(1, cfg.n_accounts);
    const std::size_t n_services = std::max<std::size_t>(2, std::min<std::size_t>(6, n_accounts));

    events.reserve(cfg.n_events + n_services);
    for (std::size_t s = 0; s < n_services; ++s) {
        SimEvent reg;
        reg.at = 0;
        reg.network = "socialnet";
        reg.action = SimAction::Register;
        reg.service = "sws_gen_" + std::to_string(s);
        reg.detail = "credentials";
        events.push_back(std::move(reg));
    }

    constexpr std::array<SimAction, 4> kReaderActions = {
        SimAction::Collect, SimAction::NotTamper, SimAction::SignOff,
        SimAction::NotReveal};
    constexpr std::array<SimAction, 3> kWriterActions = {
        SimAction::Post, SimAction::PostActivity, SimAction::Share};
    const std::uint64_t mix_total =
        cfg.writer_mix[0] + cfg.writer_mix[1] + cfg.writer_mix[2];

    Tick now = 0;
    for (std::size_t i = 0; i < cfg.n_events; ++i) {
        now += static_cast<Tick>(bounded(rng, static_cast<std::uint64_t>(cfg.max_interarrival) + 1));
        SimEvent ev;
        ev.at = now;
        ev.network = "socialnet";
        ev.account = "acct_" + std::to_string(bounded(rng, n_accounts));
        ev.service = "sws_gen_" + std::to_string(bounded(rng, n_services));
        ev.duration = 1 + static_cast<Tick>(bounded(rng, static_cast<std::uint64_t>(cfg.max_duration)));
        ev.priority = static_cast<std::int64_t>(bounded(rng, static_cast<std::uint64_t>(cfg.max_priority) + 1));
        ev.detail = "d" + std::to_string(i);
        ev.purpose = "p" + std::to_string(i);
        if (unit_real(rng) < cfg.reader_fraction) {
            ev.action = kReaderActions[bounded(rng, kReaderActions.size())];
        } else if (mix_total == 0) {
            ev.action = SimAction::Post;
        } else {
            const std::uint64_t pick = bounded(rng, mix_total);
            ev.action = pick < cfg.writer_mix[0]
                            ? kWriterActions[0]
                            : (pick < cfg.writer_mix[0] + cfg.writer_mix[1]
                                   ? kWriterActions[1]
                                   : kWriterActions[2]);
        }
        events.push_back(std::move(ev));
    }
    return events;
}

}  // namespace commitguard
