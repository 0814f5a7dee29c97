#include <doctest.h>

#include <algorithm>

#include "commitguard/engine.hpp"
#include "commitguard/errors.hpp"
#include "commitguard/scenarios.hpp"
#include "commitguard/workload.hpp"
#include "support/test_util.hpp"

using namespace commitguard;
using namespace commitguard::testutil;

TEST_CASE("actions map onto responsibilities") {
    CHECK(map_action(SimAction::Collect) ==
          std::vector<ResponsibilityId>{ResponsibilityId::Resp1});
    CHECK(map_action(SimAction::Post) ==
          std::vector<ResponsibilityId>{ResponsibilityId::Resp2});
    CHECK(map_action(SimAction::NotTamper) ==
          std::vector<ResponsibilityId>{ResponsibilityId::Resp3});
    CHECK(map_action(SimAction::SignOff) ==
          std::vector<ResponsibilityId>{ResponsibilityId::Resp4});
    CHECK(map_action(SimAction::NotReveal) ==
          std::vector<ResponsibilityId>{ResponsibilityId::Resp5});
    CHECK(map_action(SimAction::Share) ==
          std::vector<ResponsibilityId>{ResponsibilityId::Resp6, ResponsibilityId::Resp2});
    CHECK(map_action(SimAction::PostActivity) ==
          std::vector<ResponsibilityId>{ResponsibilityId::Resp7});
}

TEST_CASE("registration gate") {
    SocialNetwork net;
    net.name = "fb";
    net.authority = AgentId{"sn_auth_fb", AgentKind::NetworkAuthority};

    const AgentId svc{"sws_youtube", AgentKind::SocialWebService};
    CHECK(register_service(net, svc, "credentials"));
    CHECK(net.registered_services.contains("sws_youtube"));

    // Idempotent re-registration, even with empty credentials.
    CHECK(register_service(net, svc, ""));

    CHECK_FALSE(register_service(net, AgentId{"sws_x", AgentKind::SocialWebService}, ""));
    CHECK_FALSE(net.registered_services.contains("sws_x"));

    CHECK_FALSE(register_service(net, AgentId{"odd", AgentKind::NonMember}, "creds"));
}

TEST_CASE("custom authority hook decides registration") {
    SimConfig cfg;
    cfg.authority_hook = [](const AgentId& svc, std::string_view) {
        return svc.name != "sws_banned";
    };
    std::vector<SimEvent> events = {
        register_event("fb", "sws_banned"),
        register_event("fb", "sws_ok"),
        action_event(1, SimAction::Collect, "alice", 2, 0, "fb", "sws_ok"),
    };
    const RunResult result = run(events, cfg);
    CHECK(result.log.size() == 2);

    events.push_back(action_event(2, SimAction::Collect, "alice", 2, 0, "fb", "sws_banned"));
    CHECK_THROWS_AS(run(events, cfg), UnregisteredDebtor);
}

TEST_CASE("single uncontended collect never waits") {
    const std::vector<SimEvent> events = {
        register_event("fb", "sws_a"),
        action_event(0, SimAction::Collect, "alice", 4),
    };
    const RunResult result = run(events, SimConfig{});
    REQUIRE(result.log.size() == 2);
    CHECK(result.log.records()[0].new_state == LifecycleState::Active);
    CHECK(result.log.records()[1].new_state == LifecycleState::Deactivated);
    CHECK(result.log.records()[1].tick == 4);
    CHECK(result.metrics.waited_total == 0);
}

TEST_CASE("share fans out into a goal check and a gated post") {
    const GoldenScenario& s = golden_scenario("share-fanout");
    const RunResult result = run(s.events, s.config);
    const std::vector<ResponsibilityId> order = activation_order(result.log);
    CHECK(order == std::vector<ResponsibilityId>{
                       ResponsibilityId::Resp6, ResponsibilityId::Resp2,
                       ResponsibilityId::Resp7, ResponsibilityId::Resp1});
    CHECK(result.metrics.waited_total == 3);

    // The post activates on the tick the goal check deactivates, never before.
    std::map<Cid, ResponsibilityId> resp;
    Tick goal_end = -1, post_start = -1;
    for (const LogRecord& rec : result.log.records()) {
        if (rec.responsibility == ResponsibilityId::Resp6 &&
            rec.new_state == LifecycleState::Deactivated) {
            goal_end = rec.tick;
        }
        if (rec.responsibility == ResponsibilityId::Resp2 &&
            rec.new_state == LifecycleState::Active) {
            post_start = rec.tick;
        }
    }
    CHECK(goal_end == 5);
    CHECK(post_start == 5);
}

TEST_CASE("arrivals are admitted before completions on the same tick") {
    // Reader finishing at tick 4 still blocks the writer arriving at tick 4.
    const std::vector<SimEvent> events = {
        register_event("fb", "sws_a"),
        action_event(0, SimAction::Collect, "alice", 4),
        action_event(4, SimAction::Post, "alice", 4),
    };
    const RunResult result = run(events, SimConfig{});
    const auto records = result.log.records();
    REQUIRE(records.size() == 6);
    CHECK(records[1].new_state == LifecycleState::Waiting);
    CHECK(records[1].tick == 4);
    CHECK(records[2].new_state == LifecycleState::Deactivated);
    CHECK(records[2].tick == 4);
}

TEST_CASE("same-tick arrivals are admitted in input order") {
    const std::vector<SimEvent> events = {
        register_event("fb", "sws_a"),
        action_event(0, SimAction::Post, "alice", 3),
        action_event(0, SimAction::PostActivity, "alice", 3),
    };
    const RunResult result = run(events, SimConfig{});
    const auto order = activation_order(result.log);
    CHECK(order == std::vector<ResponsibilityId>{ResponsibilityId::Resp2,
                                                 ResponsibilityId::Resp7});
}

TEST_CASE("runs are deterministic") {
    SyntheticConfig gen;
    gen.seed = 99;
    gen.n_events = 400;
    gen.n_accounts = 5;
    const std::vector<SimEvent> events = generate_synthetic(gen);
    SimConfig cfg;
    cfg.policy = Policy::Priority;
    const RunResult a = run(events, cfg);
    const RunResult b = run(events, cfg);
    CHECK(a.log == b.log);
    CHECK(a.metrics == b.metrics);
}

TEST_CASE("log ticks never decrease") {
    SyntheticConfig gen;
    gen.seed = 5;
    gen.n_events = 300;
    gen.n_accounts = 3;
    const RunResult result = run(generate_synthetic(gen), SimConfig{});
    Tick last = 0;
    for (const LogRecord& rec : result.log.records()) {
        CHECK(rec.tick >= last);
        last = rec.tick;
    }
}

TEST_CASE("disjoint accounts are isolated") {
    const auto mk = [](const std::string& account, Tick base) {
        std::vector<SimEvent> events;
        events.push_back(action_event(base + 0, SimAction::Post, account, 4));
        events.push_back(action_event(base + 1, SimAction::Collect, account, 4));
        events.push_back(action_event(base + 2, SimAction::PostActivity, account, 4));
        return events;
    };

    std::vector<SimEvent> interleaved = {register_event("fb", "sws_a")};
    std::vector<SimEvent> alice = mk("alice", 0);
    std::vector<SimEvent> bob = mk("bob", 0);
    for (std::size_t i = 0; i < alice.size(); ++i) {
        interleaved.push_back(alice[i]);
        interleaved.push_back(bob[i]);
    }

    std::vector<SimEvent> swapped = {register_event("fb", "sws_a")};
    for (std::size_t i = 0; i < alice.size(); ++i) {
        swapped.push_back(bob[i]);
        swapped.push_back(alice[i]);
    }

    std::stable_sort(interleaved.begin(), interleaved.end(),
                     [](const SimEvent& a, const SimEvent& b) { return a.at < b.at; });
    std::stable_sort(swapped.begin(), swapped.end(),
                     [](const SimEvent& a, const SimEvent& b) { return a.at < b.at; });

    const RunResult first = run(interleaved, SimConfig{});
    const RunResult second = run(swapped, SimConfig{});
    CHECK(canonical_by_account(first.log) == canonical_by_account(second.log));
}

TEST_CASE("unsorted and invalid events are rejected") {
    std::vector<SimEvent> events = {
        register_event("fb", "sws_a"),
        action_event(5, SimAction::Post, "alice"),
        action_event(3, SimAction::Post, "alice"),
    };
    CHECK_THROWS_AS(run(events, SimConfig{}), UnsortedEvents);

    std::vector<SimEvent> bad_duration = {
        register_event("fb", "sws_a"),
        action_event(0, SimAction::Post, "alice", 0),
    };
    CHECK_THROWS_AS(run(bad_duration, SimConfig{}), InvalidEvent);

    const std::vector<SimEvent> unregistered = {
        action_event(0, SimAction::Post, "alice"),
    };
    CHECK_THROWS_AS(run(unregistered, SimConfig{}), UnregisteredDebtor);
}

TEST_CASE("config invariants are enforced") {
    SimConfig cfg;
    cfg.default_duration = 5;
    cfg.max_wait = 5;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.max_wait = 6;
    CHECK_NOTHROW(cfg.validate());
    cfg.default_duration = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("watchdog trips on an overlong wait") {
    SimConfig cfg;
    cfg.default_duration = 1;
    cfg.max_wait = 2;
    const std::vector<SimEvent> events = {
        register_event("fb", "sws_a"),
        action_event(0, SimAction::Post, "alice", 5),
        action_event(0, SimAction::PostActivity, "alice", 5),
    };
    CHECK_THROWS_AS(run(events, cfg), WatchdogExpired);

    cfg.max_wait = kWatchdogDisabled;
    CHECK_NOTHROW(run(events, cfg));
}

TEST_CASE("false condition hook cuts the commitment at arrival") {
    SimConfig cfg;
    cfg.condition_hook = [](const Commitment& c) {
        return c.responsibility != ResponsibilityId::Resp1;
    };
    const std::vector<SimEvent> events = {
        register_event("fb", "sws_a"),
        action_event(0, SimAction::Collect, "alice", 4),
        action_event(1, SimAction::Post, "alice", 4),
    };
    const RunResult result = run(events, cfg);
    const auto records = result.log.records();
    REQUIRE(records.size() == 3);
    CHECK(records[0].failed);
    CHECK(records[0].new_state == LifecycleState::Deactivated);
    // The post proceeds undisturbed.
    CHECK(records[1].responsibility == ResponsibilityId::Resp2);
    CHECK(records[1].new_state == LifecycleState::Active);
    CHECK(result.metrics.waited_total == 0);
}

TEST_CASE("failed share goal check suppresses the dependent post") {
    SimConfig cfg;
    cfg.condition_hook = [](const Commitment& c) {
        return c.responsibility != ResponsibilityId::Resp6;
    };
    const std::vector<SimEvent> events = {
        register_event("fb", "sws_a"),
        action_event(0, SimAction::Share, "alice", 4),
    };
    const RunResult result = run(events, cfg);
    const auto records = result.log.records();
    REQUIRE(records.size() == 2);
    CHECK(records[0].responsibility == ResponsibilityId::Resp6);
    CHECK(records[0].failed);
    CHECK(records[1].responsibility == ResponsibilityId::Resp2);
    CHECK(records[1].failed);
    CHECK(result.metrics.per_responsibility_counts.at(ResponsibilityId::Resp2) == 1);
}

TEST_CASE("classification override flows through scheduling") {
    SimConfig cfg;
    cfg.classification_overrides[ResponsibilityId::Resp1] = AccessClass::Writer;
    const std::vector<SimEvent> events = {
        register_event("fb", "sws_a"),
        action_event(0, SimAction::Collect, "alice", 4),
        action_event(1, SimAction::NotTamper, "alice", 4),
    };
    const RunResult result = run(events, cfg);
    // Resp3 reader against the overridden Resp1 writer: strange, so it waits.
    CHECK(result.metrics.strange_count == 1);
    CHECK(result.metrics.waited_total == 1);
}

TEST_CASE("networks get one authority each") {
    SimConfig cfg;
    ExecutionLog log;
    Metrics metrics;
    EventMaterializer mat(cfg, log, &metrics);
    CommitmentStore store;
    std::map<Cid, Tick> durations;

    mat.process(register_event("fb", "sws_a"), store, durations);
    mat.process(register_event("tube", "sws_a"), store, durations);
    CHECK(mat.network("fb").authority.name == "sn_auth_fb");
    CHECK(mat.network("tube").authority.name == "sn_auth_tube");
    CHECK(mat.network("fb").authority.kind == AgentKind::NetworkAuthority);

    mat.process(action_event(0, SimAction::Post, "alice", 3, 0, "fb", "sws_a"), store,
                durations);
    CHECK(store.at(1).creditor == mat.network("fb").authority);
}
