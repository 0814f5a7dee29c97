#include "commitguard/oracle.hpp"

#include <algorithm>
#include <map>

#include "commitguard/errors.hpp"

namespace commitguard {

std::string_view to_string(ConsistencyStatus s) {
    return s == ConsistencyStatus::Consistent ? "Consistent" : "Inconsistent";
}

std::vector<Interval> extract_intervals(const ExecutionLog& log,
                                        const ClassificationTable& table) {
    struct Progress {
        LifecycleState state = LifecycleState::Created;
        Tick active_since = 0;
        AccountRef account;
        ResponsibilityId responsibility = ResponsibilityId::Resp1;
    };
    std::map<Cid, Progress> progress;
    std::vector<Interval> intervals;

    Tick last_tick = 0;
    bool first = true;
    for (const LogRecord& rec : log.records()) {
        if (!first && rec.tick < last_tick) {
            throw MalformedLog("ticks regress at cid " + std::to_string(rec.cid));
        }
        first = false;
        last_tick = rec.tick;

        Progress& p = progress[rec.cid];
        if (p.state != rec.old_state) {
            throw MalformedLog("cid " + std::to_string(rec.cid) + " transitions from " +
                               std::string(to_string(rec.old_state)) + " but was " +
                               std::string(to_string(p.state)));
        }
        const bool failed_cut = rec.failed && rec.new_state == LifecycleState::Deactivated &&
                                (rec.old_state == LifecycleState::Created ||
                                 rec.old_state == LifecycleState::Waiting);
        if (!failed_cut && !transition_is_legal(rec.old_state, rec.new_state)) {
            throw MalformedLog("cid " + std::to_string(rec.cid) + ": illegal " +
                               std::string(to_string(rec.old_state)) + " -> " +
                               std::string(to_string(rec.new_state)));
        }
        if (rec.new_state == LifecycleState::Active) {
            p.active_since = rec.tick;
            p.account = rec.account;
            p.responsibility = rec.responsibility;
        }
        if (rec.new_state == LifecycleState::Deactivated &&
            rec.old_state == LifecycleState::Active) {
            intervals.push_back(Interval{rec.cid, rec.account,
                                         table.access(rec.responsibility),
                                         p.active_since, rec.tick});
        }
        p.state = rec.new_state;
    }

    // Still-active commitments run to the horizon.
    for (const auto& [cid, p] : progress) {
        if (p.state == LifecycleState::Active) {
            intervals.push_back(Interval{cid, p.account, table.access(p.responsibility),
                                         p.active_since, kWatchdogDisabled});
        }
    }
    return intervals;
}

namespace {

Verdict scan_intervals(std::vector<Interval> intervals) {
    std::map<AccountRef, std::vector<Interval>> by_account;
    for (Interval& iv : intervals) by_account[iv.account].push_back(std::move(iv));

    Verdict verdict;
    for (const auto& [account, ivs] : by_account) {
        for (std::size_t i = 0; i < ivs.size(); ++i) {
            for (std::size_t j = i + 1; j < ivs.size(); ++j) {
                const Tick lo = std::max(ivs[i].start, ivs[j].start);
                const Tick hi = std::min(ivs[i].end, ivs[j].end);
                if (lo >= hi) continue;
                if (ivs[i].access == AccessClass::Writer ||
                    ivs[j].access == AccessClass::Writer) {
                    verdict.violations.push_back(
                        Violation{ivs[i].cid, ivs[j].cid, account, lo, hi});
                }
            }
        }
    }
    verdict.status = verdict.violations.empty() ? ConsistencyStatus::Consistent
                                                : ConsistencyStatus::Inconsistent;
    return verdict;
}

}  // namespace

Verdict check_log(const ExecutionLog& log, const ClassificationTable& table) {
    return scan_intervals(extract_intervals(log, table));
}

namespace {

// Deliberately plain account state: unsorted lists, full scans.
struct NaiveAccount {
    std::vector<Cid> active;
    std::vector<Cid> waiting;  // insertion order
};

class NaiveScheduler {
public:
    NaiveScheduler(const SimConfig& cfg) : cfg_(cfg), materializer_(cfg, log_, nullptr) {}

    ExecutionLog run(std::span<const SimEvent> events) {
        cfg_.validate();
        validate_events(events);
        table_ = cfg_.classification();

        std::size_t next_event = 0;
        while (next_event < events.size() || !ends_.empty()) {
            Tick now;
            if (ends_.empty()) {
                now = events[next_event].at;
            } else {
                now = earliest_end();
                if (next_event < events.size()) {
                    now = std::min(now, events[next_event].at);
                }
            }

            while (next_event < events.size() && events[next_event].at == now) {
                arrive(events[next_event], now);
                ++next_event;
            }
            finish_due(now);
        }
        return std::move(log_);
    }

private:
    Tick earliest_end() const {
        Tick best = kWatchdogDisabled;
        for (const auto& [cid, end] : ends_) best = std::min(best, end);
        return best;
    }

    void arrive(const SimEvent& ev, Tick now) {
        for (Cid cid : materializer_.process(ev, store_, durations_)) {
            Commitment& c = store_.at(cid);
            NaiveAccount& acct = accounts_[c.account];
            const AccessClass access = table_.access(c.responsibility);

            bool all_friend = true;
            std::optional<Relation> first_non_friend;
            for (Cid other : acct.active) {
                const Relation rel = classify_relation(
                    access, table_.access(store_.at(other).responsibility));
                if (rel != Relation::Friend) {
                    all_friend = false;
                    if (!first_non_friend) first_non_friend = rel;
                }
            }
            if (acct.active.empty() || all_friend) {
                const std::optional<Relation> seen =
                    acct.active.empty() ? std::nullopt
                                        : std::make_optional(Relation::Friend);
                apply_transition(c, LifecycleState::Active, now, log_, seen);
                acct.active.push_back(cid);
                ends_[cid] = now + durations_.at(cid);
            } else {
                apply_transition(c, LifecycleState::Waiting, now, log_, first_non_friend);
                acct.waiting.push_back(cid);
            }
        }
    }

    void finish_due(Tick now) {
        // One completion at a time, smallest cid first, mirroring the global
        // completion order of the engine.
        while (true) {
            Cid due = 0;
            bool found = false;
            for (const auto& [cid, end] : ends_) {
                if (end == now && (!found || cid < due)) {
                    due = cid;
                    found = true;
                }
            }
            if (!found) break;
            finish_one(due, now);
        }
    }

    void finish_one(Cid cid, Tick now) {
        Commitment& c = store_.at(cid);
        NaiveAccount& acct = accounts_[c.account];
        apply_transition(c, LifecycleState::Deactivated, now, log_);
        ends_.erase(cid);
        acct.active.erase(std::find(acct.active.begin(), acct.active.end(), cid));
        if (!acct.active.empty() || acct.waiting.empty()) return;

        for (Cid next : select(acct)) {
            const Tick waited = now - store_.at(next).created_at;
            if (waited > cfg_.max_wait) {
                throw WatchdogExpired(next, waited, cfg_.max_wait);
            }
            acct.waiting.erase(
                std::find(acct.waiting.begin(), acct.waiting.end(), next));
            Commitment& n = store_.at(next);
            apply_transition(n, LifecycleState::Signaled, now, log_);
            apply_transition(n, LifecycleState::Active, now, log_);
            acct.active.push_back(next);
            ends_[next] = now + durations_.at(next);
        }
    }

    // Policy rules applied literally over a copy sorted into queue order.
    std::vector<Cid> select(const NaiveAccount& acct) const {
        std::vector<Cid> order = acct.waiting;
        std::sort(order.begin(), order.end(), [this](Cid a, Cid b) {
            const Commitment& ca = store_.at(a);
            const Commitment& cb = store_.at(b);
            if (cfg_.policy == Policy::Priority && ca.priority != cb.priority) {
                return ca.priority > cb.priority;
            }
            if (ca.created_at != cb.created_at) return ca.created_at < cb.created_at;
            return a < b;
        });

        std::vector<Cid> selected;
        const Commitment& head = store_.at(order.front());
        if (table_.access(head.responsibility) == AccessClass::Writer) {
            selected.push_back(head.cid);
            return selected;
        }
        if (cfg_.policy == Policy::FCFS) {
            for (Cid cid : order) {
                if (table_.access(store_.at(cid).responsibility) != AccessClass::Reader) {
                    break;
                }
                selected.push_back(cid);
            }
        } else {
            for (Cid cid : order) {
                const Commitment& c = store_.at(cid);
                if (c.priority == head.priority &&
                    table_.access(c.responsibility) == AccessClass::Reader) {
                    selected.push_back(cid);
                }
            }
        }
        return selected;
    }

    SimConfig cfg_;
    ClassificationTable table_;
    ExecutionLog log_;
    EventMaterializer materializer_;
    CommitmentStore store_;
    std::map<Cid, Tick> durations_;
    std::map<AccountRef, NaiveAccount> accounts_;
    std::map<Cid, Tick> ends_;
};

}  // namespace

ExecutionLog reference_schedule(std::span<const SimEvent> events, const SimConfig& cfg) {
    NaiveScheduler scheduler(cfg);
    return scheduler.run(events);
}

Verdict conflict_pressure(std::span<const SimEvent> events, const SimConfig& cfg) {
    validate_events(events);
    const ClassificationTable table = cfg.classification();

    ExecutionLog scratch;
    EventMaterializer materializer(cfg, scratch, nullptr);
    CommitmentStore store;
    std::map<Cid, Tick> durations;

    std::vector<Interval> intervals;
    for (const SimEvent& ev : events) {
        for (Cid cid : materializer.process(ev, store, durations)) {
            const Commitment& c = store.at(cid);
            intervals.push_back(Interval{cid, c.account, table.access(c.responsibility),
                                         ev.at, ev.at + durations.at(cid)});
        }
    }
    return scan_intervals(std::move(intervals));
}

}  // namespace commitguard
