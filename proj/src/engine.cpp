#include "commitguard/engine.hpp"

#include <algorithm>
#include <queue>
#include <utility>

#include "commitguard/errors.hpp"
#include "commitguard/logging.hpp"

namespace commitguard {

std::string_view to_string(SimAction a) {
    switch (a) {
        case SimAction::Collect: return "Collect";
        case SimAction::Post: return "Post";
        case SimAction::NotTamper: return "NotTamper";
        case SimAction::SignOff: return "SignOff";
        case SimAction::NotReveal: return "NotReveal";
        case SimAction::Share: return "Share";
        case SimAction::PostActivity: return "PostActivity";
        case SimAction::Register: return "Register";
    }
    return "?";
}

std::optional<SimAction> action_from_string(std::string_view text) {
    for (SimAction a : {SimAction::Collect, SimAction::Post, SimAction::NotTamper,
                        SimAction::SignOff, SimAction::NotReveal, SimAction::Share,
                        SimAction::PostActivity, SimAction::Register}) {
        if (to_string(a) == text) return a;
    }
    return std::nullopt;
}

ClassificationTable SimConfig::classification() const {
    ClassificationTable table = ClassificationTable::standard();
    for (const auto& [id, cls] : classification_overrides) table.set(id, cls);
    return table;
}

void SimConfig::validate() const {
    if (default_duration < 1) throw ConfigError("default_duration must be at least 1");
    if (max_wait <= default_duration) {
        throw ConfigError("max_wait must exceed default_duration");
    }
}

bool register_service(SocialNetwork& net, const AgentId& service,
                      std::string_view credentials) {
    if (service.kind != AgentKind::SocialWebService) return false;
    if (net.registered_services.contains(service.name)) return true;
    const bool accepted = net.authority_hook
                              ? net.authority_hook(service, credentials)
                              : !credentials.empty();
    if (accepted) net.registered_services.insert(service.name);
    return accepted;
}

std::vector<ResponsibilityId> map_action(SimAction a) {
    switch (a) {
        case SimAction::Collect: return {ResponsibilityId::Resp1};
        case SimAction::Post: return {ResponsibilityId::Resp2};
        case SimAction::NotTamper: return {ResponsibilityId::Resp3};
        case SimAction::SignOff: return {ResponsibilityId::Resp4};
        case SimAction::NotReveal: return {ResponsibilityId::Resp5};
        case SimAction::Share: return {ResponsibilityId::Resp6, ResponsibilityId::Resp2};
        case SimAction::PostActivity: return {ResponsibilityId::Resp7};
        case SimAction::Register: break;
    }
    throw Error("Register events do not map to a responsibility");
}

EventMaterializer::EventMaterializer(const SimConfig& cfg, ExecutionLog& log,
                                     Metrics* metrics)
    : cfg_(&cfg), log_(&log), metrics_(metrics) {}

SocialNetwork& EventMaterializer::network(const std::string& name) {
    auto it = networks_.find(name);
    if (it == networks_.end()) {
        SocialNetwork net;
        net.name = name;
        net.authority = AgentId{"sn_auth_" + name, AgentKind::NetworkAuthority};
        net.policy = cfg_->policy;
        net.classification = cfg_->classification();
        net.authority_hook = cfg_->authority_hook;
        it = networks_.emplace(name, std::move(net)).first;
    }
    return it->second;
}

std::vector<Cid> EventMaterializer::process(const SimEvent& ev, CommitmentStore& store,
                                            std::map<Cid, Tick>& durations) {
    SocialNetwork& net = network(ev.network);

    if (ev.action == SimAction::Register) {
        const AgentId svc{ev.service, AgentKind::SocialWebService};
        if (!register_service(net, svc, ev.detail)) {
            log_message(LogLevel::Warn, "registration rejected for service '" +
                                            ev.service + "' on network '" + ev.network +
                                            "'");
        }
        return {};
    }

    if (!net.registered_services.contains(ev.service)) {
        throw UnregisteredDebtor(ev.service, ev.network);
    }
    net.accounts.insert(ev.account);

    const AgentId debtor{ev.service, AgentKind::SocialWebService};
    const AgentId network_side{"sws_" + ev.network, AgentKind::SocialWebService};
    const AccountRef account{ev.network, ev.account};

    std::vector<Cid> spawned;
    bool pipeline_ok = true;
    for (ResponsibilityId resp : map_action(ev.action)) {
        const ResponsibilityTemplate& tmpl = responsibility_template(resp);
        const AgentId creditor = tmpl.creditor_kind == AgentKind::NetworkAuthority
                                     ? net.authority
                                     : network_side;

        CommitmentContent content;
        content.detail = ev.detail;
        content.purpose = ev.purpose;
        const bool self_owned = resp == ResponsibilityId::Resp2 ||
                                resp == ResponsibilityId::Resp4 ||
                                resp == ResponsibilityId::Resp7;
        content.owner = self_owned ? debtor : network_side;
        if (resp == ResponsibilityId::Resp5) {
            content.audience.push_back(AgentId{"nm_" + ev.network, AgentKind::NonMember});
        }
        if (tmpl.has_condition) {
            const std::string arg = tmpl.condition_predicate == "valid"
                                        ? ev.purpose
                                        : ev.detail;
            content.condition = Condition{std::string(tmpl.condition_predicate), {arg}};
        }

        const Cid cid = next_cid_++;
        Commitment c = instantiate(cid, resp, debtor, creditor, std::move(content),
                                   account, ev.at, ev.priority);
        if (metrics_) ++metrics_->per_responsibility_counts[resp];
        durations[cid] = ev.duration;
        auto [it, inserted] = store.emplace(cid, std::move(c));

        // A false condition cuts this commitment and the rest of the event's
        // pipeline (a Share whose goal check fails never posts).
        if (pipeline_ok && it->second.content.condition.has_value() &&
            cfg_->condition_hook && !cfg_->condition_hook(it->second)) {
            pipeline_ok = false;
        }
        if (!pipeline_ok) {
            fail_commitment(it->second, ev.at, *log_);
        } else {
            spawned.push_back(cid);
        }
    }
    return spawned;
}

void validate_events(std::span<const SimEvent> events) {
    for (std::size_t i = 0; i < events.size(); ++i) {
        const SimEvent& ev = events[i];
        if (ev.at < 0) throw InvalidEvent(i, "negative tick");
        if (ev.duration < 1) throw InvalidEvent(i, "duration must be at least 1");
        if (i > 0 && ev.at < events[i - 1].at) throw UnsortedEvents(i);
    }
}

namespace {

// Min-heap of pending completions keyed by (tick, cid).
using CompletionQueue =
    std::priority_queue<std::pair<Tick, Cid>, std::vector<std::pair<Tick, Cid>>,
                        std::greater<>>;

class Engine {
public:
    Engine(const SimConfig& cfg)
        : cfg_(cfg), materializer_(cfg, result_.log, &result_.metrics) {}

    RunResult run(std::span<const SimEvent> events) {
        cfg_.validate();
        validate_events(events);

        std::size_t next_event = 0;
        while (next_event < events.size() || !completions_.empty()) {
            Tick now;
            if (completions_.empty()) {
                now = events[next_event].at;
            } else if (next_event == events.size()) {
                now = completions_.top().first;
            } else {
                now = std::min(events[next_event].at, completions_.top().first);
            }

            while (next_event < events.size() && events[next_event].at == now) {
                process_event(events[next_event]);
                ++next_event;
            }
            while (!completions_.empty() && completions_.top().first == now) {
                const Cid cid = completions_.top().second;
                completions_.pop();
                process_completion(cid, now);
            }
        }
        return std::move(result_);
    }

private:
    AccountCoordinator& coordinator(const AccountRef& account) {
        auto it = coordinators_.find(account);
        if (it == coordinators_.end()) {
            it = coordinators_
                     .emplace(account,
                              AccountCoordinator(account, cfg_.policy,
                                                 cfg_.classification(), store_,
                                                 result_.log, result_.metrics))
                     .first;
        }
        return it->second;
    }

    void sample_queue(const AccountCoordinator& co, Tick now) {
        result_.metrics.queue_length_series.push_back(
            QueueSample{now, co.account(), co.waiting_count()});
    }

    void process_event(const SimEvent& ev) {
        for (Cid cid : materializer_.process(ev, store_, durations_)) {
            AccountCoordinator& co = coordinator(store_.at(cid).account);
            const AdmissionDecision decision = co.admit(cid, ev.at);
            if (decision.decision == Admission::RunNow) {
                completions_.emplace(ev.at + durations_.at(cid), cid);
            } else {
                sample_queue(co, ev.at);
            }
        }
    }

    void process_completion(Cid cid, Tick now) {
        AccountCoordinator& co = coordinator(store_.at(cid).account);
        const std::vector<Cid> signaled = co.complete(cid, now);
        for (Cid next : signaled) {
            const Tick waited = now - store_.at(next).created_at;
            if (waited > cfg_.max_wait) {
                throw WatchdogExpired(next, waited, cfg_.max_wait);
            }
            completions_.emplace(now + durations_.at(next), next);
        }
        if (!signaled.empty()) sample_queue(co, now);
    }

    SimConfig cfg_;
    RunResult result_;
    EventMaterializer materializer_;
    CommitmentStore store_;
    std::map<Cid, Tick> durations_;
    std::map<AccountRef, AccountCoordinator> coordinators_;
    CompletionQueue completions_;
};

}  // namespace

RunResult run(std::span<const SimEvent> events, const SimConfig& cfg) {
    Engine engine(cfg);
    return engine.run(events);
}

}  // namespace commitguard
