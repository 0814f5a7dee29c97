#pragma once

#include <span>
#include <vector>

#include "commitguard/engine.hpp"
#include "commitguard/log.hpp"
#include "commitguard/model.hpp"

namespace commitguard {

// Half-open execution window of one commitment: [start, end).  A commitment
// that activates on the tick another deactivates does not overlap it.
struct Interval {
    Cid cid = 0;
    AccountRef account;
    AccessClass access = AccessClass::Reader;
    Tick start = 0;
    Tick end = 0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

struct Violation {
    Cid first = 0;
    Cid second = 0;
    AccountRef account;
    Tick overlap_start = 0;
    Tick overlap_end = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

enum class ConsistencyStatus : std::uint8_t { Consistent, Inconsistent };

std::string_view to_string(ConsistencyStatus s);

struct Verdict {
    ConsistencyStatus status = ConsistencyStatus::Consistent;
    std::vector<Violation> violations;

    bool consistent() const { return status == ConsistencyStatus::Consistent; }
};

// Pulls [Active, Deactivated) windows out of a log, validating the per-cid
// lifecycle sequence along the way.  Throws MalformedLog.  An interval left
// open at the end of the log extends to infinity.
std::vector<Interval> extract_intervals(const ExecutionLog& log,
                                        const ClassificationTable& table);

// Exhaustive pairwise overlap scan per account: any overlap involving a
// writer is a violation.  Deliberately ignorant of the scheduler.
Verdict check_log(const ExecutionLog& log,
                  const ClassificationTable& table = ClassificationTable::standard());

// Naive per-tick re-implementation of the scheduling rules, used to
// cross-check the engine: its log must equal run()'s on every input.
ExecutionLog reference_schedule(std::span<const SimEvent> events, const SimConfig& cfg);

// Would this workload violate the overlap rules if nothing ever waited?
// Labels the scenario the way a run with no coordination would end up.
Verdict conflict_pressure(std::span<const SimEvent> events, const SimConfig& cfg = {});

}  // namespace commitguard
