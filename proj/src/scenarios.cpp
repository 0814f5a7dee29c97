#include "commitguard/scenarios.hpp"

#include "commitguard/errors.hpp"

namespace commitguard {

namespace {

SimEvent make_register(const std::string& network, const std::string& service) {
    SimEvent ev;
    ev.at = 0;
    ev.network = network;
    ev.action = SimAction::Register;
    ev.service = service;
    ev.detail = service;  // credentials
    return ev;
}

SimEvent make_action(Tick at, const std::string& network, const std::string& account,
                     SimAction action, const std::string& service, Tick duration,
                     const std::string& detail, const std::string& purpose) {
    SimEvent ev;
    ev.at = at;
    ev.network = network;
    ev.account = account;
    ev.action = action;
    ev.service = service;
    ev.duration = duration;
    ev.detail = detail;
    ev.purpose = purpose;
    return ev;
}

std::vector<GoldenScenario> build_scenarios() {
    std::vector<GoldenScenario> scenarios;
    const std::string net = "facebook";
    const std::string acct = "alice";

    {
        // A share fans out into a goal check plus the post it guards, with a
        // mirrored activity and a collect queued behind them.
        GoldenScenario s;
        s.name = "share-fanout";
        s.description = "share, mirrored activity, and collect landing in one time slice";
        s.events = {
            make_register(net, "sws_youtube"),
            make_register(net, "sws_soundcloud"),
            make_register(net, "sws_linkedin"),
            make_action(0, net, acct, SimAction::Share, "sws_youtube", 5, "video", "promo"),
            make_action(1, net, acct, SimAction::PostActivity, "sws_soundcloud", 5,
                        "liked_track", "mirror"),
            make_action(2, net, acct, SimAction::Collect, "sws_linkedin", 5,
                        "contact_list", "import"),
        };
        s.expected_narrative =
            "C_Resp6 : Checks Sharing Goal is Active\n"
            "C_Resp2 : Shares Information is Waiting\n"
            "C_Resp7 : Post Activity is Waiting\n"
            "C_Resp1 : Collects Information is Waiting\n"
            "C_Resp6 : Checks Sharing Goal is Deactivate\n"
            "C_Resp2 : is Signal\n"
            "C_Resp2 : Shares Information is Active\n"
            "C_Resp2 : Shares Information is Deactivate\n"
            "C_Resp7 : is Signal\n"
            "C_Resp7 : Post Activity is Active\n"
            "C_Resp7 : Post Activity is Deactivate\n"
            "C_Resp1 : is Signal\n"
            "C_Resp1 : Collects Information is Active\n"
            "C_Resp1 : Collects Information is Deactivate\n";
        s.expected_friend = 0;
        s.expected_family = 2;
        s.expected_strange = 1;
        s.expected_waited = 3;
        s.expected_pressure = ConsistencyStatus::Inconsistent;
        scenarios.push_back(std::move(s));
    }

    {
        // Collect, post, and mirrored activity two ticks apart; both writers
        // queue behind the reader.
        GoldenScenario s;
        s.name = "overlap-triple";
        s.description = "collect/post/activity arriving 2 ticks apart, duration 4";
        s.events = {
            make_register(net, "sws_linkedin"),
            make_register(net, "sws_youtube"),
            make_register(net, "sws_soundcloud"),
            make_action(0, net, acct, SimAction::Collect, "sws_linkedin", 4,
                        "contact_list", "import"),
            make_action(2, net, acct, SimAction::Post, "sws_youtube", 4, "video", "publish"),
            make_action(4, net, acct, SimAction::PostActivity, "sws_soundcloud", 4,
                        "liked_track", "mirror"),
        };
        s.expected_narrative =
            "C_Resp1 : Collects Information is Active\n"
            "C_Resp2 : Shares Information is Waiting\n"
            "C_Resp7 : Post Activity is Waiting\n"
            "C_Resp1 : Collects Information is Deactivate\n"
            "C_Resp2 : is Signal\n"
            "C_Resp2 : Shares Information is Active\n"
            "C_Resp2 : Shares Information is Deactivate\n"
            "C_Resp7 : is Signal\n"
            "C_Resp7 : Post Activity is Active\n"
            "C_Resp7 : Post Activity is Deactivate\n";
        s.expected_friend = 0;
        s.expected_family = 0;
        s.expected_strange = 2;
        s.expected_waited = 2;
        s.expected_pressure = ConsistencyStatus::Inconsistent;
        scenarios.push_back(std::move(s));
    }

    {
        // A post landing while a mirrored activity runs.
        GoldenScenario s;
        s.name = "overlap-pair";
        s.description = "activity then post 2 ticks later, duration 4";
        s.events = {
            make_register(net, "sws_soundcloud"),
            make_register(net, "sws_youtube"),
            make_action(0, net, acct, SimAction::PostActivity, "sws_soundcloud", 4,
                        "liked_track", "mirror"),
            make_action(2, net, acct, SimAction::Post, "sws_youtube", 4, "video", "publish"),
        };
        s.expected_narrative =
            "C_Resp7 : Post Activity is Active\n"
            "C_Resp2 : Shares Information is Waiting\n"
            "C_Resp7 : Post Activity is Deactivate\n"
            "C_Resp2 : is Signal\n"
            "C_Resp2 : Shares Information is Active\n"
            "C_Resp2 : Shares Information is Deactivate\n";
        s.expected_friend = 0;
        s.expected_family = 1;
        s.expected_strange = 0;
        s.expected_waited = 1;
        s.expected_pressure = ConsistencyStatus::Inconsistent;
        scenarios.push_back(std::move(s));
    }

    {
        // Requests spaced wider than their durations never contend.
        GoldenScenario s;
        s.name = "spaced-triple";
        s.description = "collect/post/activity 4 ticks apart, duration 3";
        s.events = {
            make_register(net, "sws_linkedin"),
            make_register(net, "sws_youtube"),
            make_register(net, "sws_soundcloud"),
            make_action(0, net, acct, SimAction::Collect, "sws_linkedin", 3,
                        "contact_list", "import"),
            make_action(4, net, acct, SimAction::Post, "sws_youtube", 3, "video", "publish"),
            make_action(8, net, acct, SimAction::PostActivity, "sws_soundcloud", 3,
                        "liked_track", "mirror"),
        };
        s.expected_narrative =
            "C_Resp1 : Collects Information is Active\n"
            "C_Resp1 : Collects Information is Deactivate\n"
            "C_Resp2 : Shares Information is Active\n"
            "C_Resp2 : Shares Information is Deactivate\n"
            "C_Resp7 : Post Activity is Active\n"
            "C_Resp7 : Post Activity is Deactivate\n";
        s.expected_friend = 0;
        s.expected_family = 0;
        s.expected_strange = 0;
        s.expected_waited = 0;
        s.expected_pressure = ConsistencyStatus::Consistent;
        scenarios.push_back(std::move(s));
    }

    return scenarios;
}

}  // namespace

const std::vector<GoldenScenario>& golden_scenarios() {
    static const std::vector<GoldenScenario> scenarios = build_scenarios();
    return scenarios;
}

const GoldenScenario& golden_scenario(std::string_view name) {
    for (const GoldenScenario& s : golden_scenarios()) {
        if (s.name == name) return s;
    }
    throw Error("unknown scenario '" + std::string(name) + "'");
}

}  // namespace commitguard
