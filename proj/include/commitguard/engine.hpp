#pragma once

#include <functional>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <string>

#include "commitguard/coordinator.hpp"
#include "commitguard/log.hpp"
#include "commitguard/metrics.hpp"
#include "commitguard/model.hpp"

namespace commitguard {

// Evaluated for every commitment that carries a condition; false cuts the
// commitment (and any commitment spawned after it by the same event) short.
using ConditionHook = std::function<bool(const Commitment&)>;

// Authority sign-up gate; the default accepts any non-empty credentials.
using AuthorityHook =
    std::function<bool(const AgentId& service, std::string_view credentials)>;

enum class SimAction : std::uint8_t {
    Collect,
    Post,
    NotTamper,
    SignOff,
    NotReveal,
    Share,
    PostActivity,
    Register,
};

std::string_view to_string(SimAction a);
std::optional<SimAction> action_from_string(std::string_view text);

// One workload event: at tick `at`, `service` performs `action` on
// network/account.  Register events carry credentials in `detail`.
struct SimEvent {
    Tick at = 0;
    std::string network;
    std::string account;
    SimAction action = SimAction::Collect;
    std::string service;
    Tick duration = 1;
    std::int64_t priority = 0;
    std::string detail;
    std::string purpose;

    friend bool operator==(const SimEvent&, const SimEvent&) = default;
};

inline constexpr Tick kWatchdogDisabled = std::numeric_limits<Tick>::max() / 2;

struct SimConfig {
    std::uint64_t seed = 0;  // recorded for provenance; replay is trace-driven
    Policy policy = Policy::FCFS;
    Tick default_duration = 5;
    Tick max_wait = kWatchdogDisabled;
    std::map<ResponsibilityId, AccessClass> classification_overrides;
    ConditionHook condition_hook;  // empty -> every condition holds
    AuthorityHook authority_hook;  // empty -> accept non-empty credentials

    ClassificationTable classification() const;

    // Throws ConfigError; the watchdog must outlast one default service time.
    void validate() const;
};

struct SocialNetwork {
    std::string name;
    AgentId authority;  // unique per network
    std::set<std::string> accounts;
    std::set<std::string> registered_services;
    Policy policy = Policy::FCFS;
    ClassificationTable classification = ClassificationTable::standard();
    AuthorityHook authority_hook;
};

// Sign-up gate.  Registration is idempotent; rejection is the false return.
bool register_service(SocialNetwork& net, const AgentId& service,
                      std::string_view credentials);

// Collect -> Resp1, Post -> Resp2, ..., Share -> (Resp6, Resp2): the goal
// check first, then the post it guards.  Register maps to nothing and throws.
std::vector<ResponsibilityId> map_action(SimAction a);

// Turns workload events into admission-ready commitments: resolves networks,
// enforces the registration gate, assigns cids, and applies condition hooks
// (a false hook fail-deactivates the commitment and suppresses the rest of
// the event's pipeline).  Shared by the engine and the reference scheduler so
// both see identical commitments and identifiers.
class EventMaterializer {
public:
    EventMaterializer(const SimConfig& cfg, ExecutionLog& log, Metrics* metrics);

    // Returns the cids ready for admission, in spawn order.  Register events
    // return nothing.  Throws UnregisteredDebtor and TemplateMismatch.
    std::vector<Cid> process(const SimEvent& ev, CommitmentStore& store,
                             std::map<Cid, Tick>& durations);

    SocialNetwork& network(const std::string& name);

private:
    const SimConfig* cfg_;
    ExecutionLog* log_;
    Metrics* metrics_;
    Cid next_cid_ = 1;
    std::map<std::string, SocialNetwork> networks_;
};

struct RunResult {
    ExecutionLog log;
    Metrics metrics;
};

// Deterministic discrete-event run: arrivals are processed in input order,
// completions by (tick, cid), arrivals before completions within a tick.
// Throws UnsortedEvents, InvalidEvent, UnregisteredDebtor, WatchdogExpired.
RunResult run(std::span<const SimEvent> events, const SimConfig& cfg);

// Shared validation for both schedulers.
void validate_events(std::span<const SimEvent> events);

}  // namespace commitguard
