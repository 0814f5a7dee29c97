#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "commitguard/engine.hpp"

namespace commitguard {

struct ScenarioDefaults {
    Tick duration = 5;
    std::int64_t priority = 0;
};

// Line-delimited key=value records, one event per line.  Keys: at, network,
// account, action, service, duration, priority, detail, purpose.  Blank lines
// and '#' comments are skipped.  Output is sorted by tick, stable on ties.
std::vector<SimEvent> parse_scenario(std::string_view text,
                                     const ScenarioDefaults& defaults = {});

std::string serialize_scenario(std::span<const SimEvent> events);

// How wall-post lines become events.  reader_fraction of the data lines are
// remapped away from Post, cycling through remap_targets; the rest stay
// posts.  Every service gets a synthetic Register event at first appearance.
struct WallMappingConfig {
    std::string network = "facebook";
    double reader_fraction = 0.3;
    std::vector<SimAction> remap_targets = {SimAction::Collect};
    Tick duration = 5;
    std::int64_t priority = 0;
};

// Whitespace-separated "poster wall_owner timestamp" triples; '%' lines are
// comments.  Ticks are normalized so the earliest line lands on tick 0.
std::vector<SimEvent> parse_wall_trace(std::string_view text,
                                       const WallMappingConfig& cfg = {});

struct SyntheticConfig {
    std::uint64_t seed = 0;
    std::size_t n_events = 0;
    std::size_t n_accounts = 1;
    double reader_fraction = 0.3;
    // Relative weights of the writer actions drawn when a line is not a
    // reader: Post, PostActivity, Share.
    std::array<std::uint32_t, 3> writer_mix = {3, 2, 1};
    Tick max_interarrival = 3;
    Tick max_duration = 8;
    std::int64_t max_priority = 4;
};

// Seeded workload generator; identical configs give identical event lists.
// Emits Register events for its service pool before the first action.
std::vector<SimEvent> generate_synthetic(const SyntheticConfig& cfg);

}  // namespace commitguard
