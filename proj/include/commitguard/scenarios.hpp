#pragma once

#include <string>
#include <vector>

#include "commitguard/engine.hpp"
#include "commitguard/oracle.hpp"

namespace commitguard {

// A curated workload with frozen expected outputs, used by the replay-paper
// subcommand and by the acceptance suite.
struct GoldenScenario {
    std::string name;
    std::string description;
    std::vector<SimEvent> events;
    SimConfig config;
    std::string expected_narrative;
    std::uint64_t expected_friend = 0;
    std::uint64_t expected_family = 0;
    std::uint64_t expected_strange = 0;
    std::uint64_t expected_waited = 0;
    ConsistencyStatus expected_pressure = ConsistencyStatus::Consistent;
};

const std::vector<GoldenScenario>& golden_scenarios();

const GoldenScenario& golden_scenario(std::string_view name);

}  // namespace commitguard
