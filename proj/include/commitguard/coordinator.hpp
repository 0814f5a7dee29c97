#pragma once

#include <map>
#include <optional>
#include <vector>

#include "commitguard/log.hpp"
#include "commitguard/metrics.hpp"
#include "commitguard/model.hpp"
#include "commitguard/relation.hpp"

namespace commitguard {

enum class Policy : std::uint8_t { FCFS, Priority };

std::string_view to_string(Policy p);
std::optional<Policy> policy_from_string(std::string_view text);

enum class Admission : std::uint8_t { RunNow, Enqueued };

struct AdmissionDecision {
    Admission decision = Admission::RunNow;
    // Relation against the active set: the first non-Friend relation when
    // enqueued, Friend when running alongside a non-empty active set, empty
    // when the active set was empty.
    std::optional<Relation> relation_seen;

    friend bool operator==(const AdmissionDecision&, const AdmissionDecision&) = default;
};

using CommitmentStore = std::map<Cid, Commitment>;

// Per-account consistency guarantor.  Admits commitments against the active
// set, parks conflicting ones in the waiting queue, and on completion signals
// the next commitment (or reader batch) under the configured policy.
//
// Not internally synchronized: drive each coordinator from one thread at a
// time.  Distinct accounts are independent and may be driven in parallel as
// long as the store, log, and metrics they share are partitioned accordingly;
// the reference engine drives everything from a single deterministic loop.
class AccountCoordinator {
public:
    AccountCoordinator(AccountRef account, Policy policy, ClassificationTable table,
                       CommitmentStore& store, ExecutionLog& log, Metrics& metrics);

    // Admits a Created commitment: activates it when the active set is empty
    // or entirely Friend, otherwise parks it in the waiting queue.  Throws
    // WrongAccount and AlreadyAdmitted.
    AdmissionDecision admit(Cid cid, Tick now);

    // Deactivates an active commitment.  When the active set drains and the
    // queue is non-empty, signals the next selection and returns the newly
    // activated cids in activation order; otherwise returns empty.
    std::vector<Cid> complete(Cid cid, Tick now);

    // Pure selection query over the waiting queue: the next writer alone, or
    // the reader batch for the policy.  Throws EmptyQueue.
    std::vector<Cid> select_next() const;

    const AccountRef& account() const { return account_; }
    Policy policy() const { return policy_; }
    const ClassificationTable& classification() const { return table_; }

    std::size_t active_count() const { return active_.size(); }
    std::size_t waiting_count() const { return waiting_.size(); }
    std::vector<Cid> active_cids() const;   // activation order
    std::vector<Cid> waiting_cids() const;  // queue order

private:
    struct ActiveEntry {
        Cid cid;
        AccessClass access;
    };
    struct WaitEntry {
        Cid cid;
        AccessClass access;
        Tick created_at;
        std::int64_t priority;
    };

    bool queued_before(const WaitEntry& a, const WaitEntry& b) const;
    void activate(Cid cid, AccessClass access, Tick now,
                  std::optional<Relation> relation_seen);

    AccountRef account_;
    Policy policy_;
    ClassificationTable table_;
    CommitmentStore* store_;
    ExecutionLog* log_;
    Metrics* metrics_;
    std::vector<ActiveEntry> active_;  // activation order; holds at most one writer
    std::vector<WaitEntry> waiting_;   // kept sorted per policy
};

}  // namespace commitguard
