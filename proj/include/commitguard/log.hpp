#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "commitguard/model.hpp"
#include "commitguard/relation.hpp"

namespace commitguard {

// One lifecycle transition.  relation_seen is only set on admission records:
// the relation against the active set that decided the outcome.  failed marks
// a commitment cut short by a false condition hook.
struct LogRecord {
    Tick tick = 0;
    Cid cid = 0;
    ResponsibilityId responsibility = ResponsibilityId::Resp1;
    std::string action_name;
    LifecycleState old_state = LifecycleState::Created;
    LifecycleState new_state = LifecycleState::Created;
    AccountRef account;
    std::optional<Relation> relation_seen;
    bool failed = false;

    friend bool operator==(const LogRecord&, const LogRecord&) = default;
};

// Totally ordered record of every transition in a run.
class ExecutionLog {
public:
    // Throws MalformedLog if the tick regresses.
    void append(LogRecord rec);

    std::span<const LogRecord> records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }

    friend bool operator==(const ExecutionLog&, const ExecutionLog&) = default;

private:
    std::vector<LogRecord> records_;
};

// Moves a commitment along the lifecycle automaton and appends one record.
// Throws IllegalTransition for any pair outside the automaton.
void apply_transition(Commitment& c, LifecycleState target, Tick now, ExecutionLog& log,
                      std::optional<Relation> relation_seen = std::nullopt);

// Failure path for a false condition hook: Created -> Deactivated with the
// failed flag.  Kept separate so apply_transition stays strict.
void fail_commitment(Commitment& c, Tick now, ExecutionLog& log);

std::string to_csv(const ExecutionLog& log);

// Throws ParseError on broken rows and MalformedLog on tick regressions.
ExecutionLog log_from_csv(std::string_view text);

}  // namespace commitguard
