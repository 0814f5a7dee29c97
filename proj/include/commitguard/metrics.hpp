#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "commitguard/model.hpp"

namespace commitguard {

struct QueueSample {
    Tick tick = 0;
    AccountRef account;
    std::size_t length = 0;

    friend bool operator==(const QueueSample&, const QueueSample&) = default;
};

// Counters accumulated over one run.  friend/family/strange count pairwise
// admission-time evaluations; waited_total counts distinct commitments that
// ever entered the waiting queue.
struct Metrics {
    std::uint64_t friend_count = 0;
    std::uint64_t family_count = 0;
    std::uint64_t strange_count = 0;
    std::uint64_t waited_total = 0;
    std::vector<QueueSample> queue_length_series;  // one sample per length change
    std::map<ResponsibilityId, std::uint64_t> per_responsibility_counts;

    std::uint64_t pair_evaluations() const {
        return friend_count + family_count + strange_count;
    }

    friend bool operator==(const Metrics&, const Metrics&) = default;
};

}  // namespace commitguard
