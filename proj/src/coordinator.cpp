#include "commitguard/coordinator.hpp"

#include <algorithm>

#include "commitguard/errors.hpp"

namespace commitguard {

std::string_view to_string(Policy p) {
    return p == Policy::FCFS ? "fcfs" : "priority";
}

std::optional<Policy> policy_from_string(std::string_view text) {
    if (text == "fcfs" || text == "FCFS") return Policy::FCFS;
    if (text == "priority" || text == "Priority") return Policy::Priority;
    return std::nullopt;
}

AccountCoordinator::AccountCoordinator(AccountRef account, Policy policy,
                                       ClassificationTable table, CommitmentStore& store,
                                       ExecutionLog& log, Metrics& metrics)
    : account_(std::move(account)),
      policy_(policy),
      table_(table),
      store_(&store),
      log_(&log),
      metrics_(&metrics) {}

bool AccountCoordinator::queued_before(const WaitEntry& a, const WaitEntry& b) const {
    if (policy_ == Policy::Priority && a.priority != b.priority) {
        return a.priority > b.priority;
    }
    if (a.created_at != b.created_at) return a.created_at < b.created_at;
    return a.cid < b.cid;
}

AdmissionDecision AccountCoordinator::admit(Cid cid, Tick now) {
    Commitment& c = store_->at(cid);
    if (c.account != account_) {
        throw WrongAccount(to_display(c.account) + " vs coordinator " +
                           to_display(account_));
    }
    if (c.state != LifecycleState::Created) throw AlreadyAdmitted(cid);

    const AccessClass access = table_.access(c.responsibility);

    // Evaluate every active pair; counters see each evaluation, the decision
    // needs them all Friend.
    bool all_friend = true;
    std::optional<Relation> first_non_friend;
    for (const ActiveEntry& entry : active_) {
        const Relation rel = classify_relation(access, entry.access);
        switch (rel) {
            case Relation::Friend: ++metrics_->friend_count; break;
            case Relation::Family: ++metrics_->family_count; break;
            case Relation::Strange: ++metrics_->strange_count; break;
        }
        if (rel != Relation::Friend) {
            all_friend = false;
            if (!first_non_friend) first_non_friend = rel;
        }
    }

    if (active_.empty() || all_friend) {
        std::optional<Relation> seen =
            active_.empty() ? std::nullopt : std::make_optional(Relation::Friend);
        activate(cid, access, now, seen);
        return AdmissionDecision{Admission::RunNow, seen};
    }

    apply_transition(c, LifecycleState::Waiting, now, *log_, first_non_friend);
    WaitEntry entry{cid, access, c.created_at, c.priority};
    auto pos = std::upper_bound(waiting_.begin(), waiting_.end(), entry,
                                [this](const WaitEntry& a, const WaitEntry& b) {
                                    return queued_before(a, b);
                                });
    waiting_.insert(pos, entry);
    ++metrics_->waited_total;
    return AdmissionDecision{Admission::Enqueued, first_non_friend};
}

void AccountCoordinator::activate(Cid cid, AccessClass access, Tick now,
                                  std::optional<Relation> relation_seen) {
    apply_transition(store_->at(cid), LifecycleState::Active, now, *log_, relation_seen);
    active_.push_back(ActiveEntry{cid, access});
}

std::vector<Cid> AccountCoordinator::complete(Cid cid, Tick now) {
    auto it = std::find_if(active_.begin(), active_.end(),
                           [cid](const ActiveEntry& e) { return e.cid == cid; });
    if (it == active_.end()) throw NotActive(cid);

    apply_transition(store_->at(cid), LifecycleState::Deactivated, now, *log_);
    active_.erase(it);

    std::vector<Cid> signaled;
    if (active_.empty() && !waiting_.empty()) {
        signaled = select_next();
        for (Cid next : signaled) {
            auto entry = std::find_if(waiting_.begin(), waiting_.end(),
                                      [next](const WaitEntry& e) { return e.cid == next; });
            const AccessClass access = entry->access;
            waiting_.erase(entry);
            Commitment& c = store_->at(next);
            apply_transition(c, LifecycleState::Signaled, now, *log_);
            apply_transition(c, LifecycleState::Active, now, *log_);
            active_.push_back(ActiveEntry{next, access});
        }
    }
    return signaled;
}

std::vector<Cid> AccountCoordinator::select_next() const {
    if (waiting_.empty()) throw EmptyQueue();

    std::vector<Cid> selected;
    const WaitEntry& head = waiting_.front();
    if (head.access == AccessClass::Writer) {
        selected.push_back(head.cid);
        return selected;
    }
    if (policy_ == Policy::FCFS) {
        // Maximal run of readers at the queue front.
        for (const WaitEntry& entry : waiting_) {
            if (entry.access != AccessClass::Reader) break;
            selected.push_back(entry.cid);
        }
    } else {
        // Every waiting reader sharing the head's priority, even past an
        // equal-priority writer.
        for (const WaitEntry& entry : waiting_) {
            if (entry.access == AccessClass::Reader && entry.priority == head.priority) {
                selected.push_back(entry.cid);
            }
        }
    }
    return selected;
}

std::vector<Cid> AccountCoordinator::active_cids() const {
    std::vector<Cid> out;
    out.reserve(active_.size());
    for (const ActiveEntry& e : active_) out.push_back(e.cid);
    return out;
}

std::vector<Cid> AccountCoordinator::waiting_cids() const {
    std::vector<Cid> out;
    out.reserve(waiting_.size());
    for (const WaitEntry& e : waiting_) out.push_back(e.cid);
    return out;
}

}  // namespace commitguard
