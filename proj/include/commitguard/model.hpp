#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace commitguard {

using Tick = std::int64_t;
using Cid = std::uint64_t;

// The seven responsibilities a network imposes on a registered service.
enum class ResponsibilityId : std::uint8_t {
    Resp1,  // collect a detail, purpose must be valid
    Resp2,  // post a detail, must be correct
    Resp3,  // do not tamper with collected details
    Resp4,  // sign off once pending assignments settle
    Resp5,  // do not reveal public details to non-members indefinitely
    Resp6,  // share information, goal must be valid
    Resp7,  // mirror a user activity into another network
};

inline constexpr std::array<ResponsibilityId, 7> kAllResponsibilities = {
    ResponsibilityId::Resp1, ResponsibilityId::Resp2, ResponsibilityId::Resp3,
    ResponsibilityId::Resp4, ResponsibilityId::Resp5, ResponsibilityId::Resp6,
    ResponsibilityId::Resp7,
};

enum class AccessClass : std::uint8_t { Reader, Writer };

enum class Modality : std::uint8_t { Permission, Obligation };

enum class AgentKind : std::uint8_t { SocialWebService, NetworkAuthority, NonMember };

enum class LifecycleState : std::uint8_t { Created, Waiting, Active, Signaled, Deactivated };

struct AgentId {
    std::string name;
    AgentKind kind = AgentKind::SocialWebService;

    auto operator<=>(const AgentId&) const = default;
};

// A named boolean predicate attached to a commitment (valid(p), status(ass), ...).
// Evaluation semantics come from the workload's condition hook.
struct Condition {
    std::string predicate;
    std::vector<std::string> args;

    auto operator<=>(const Condition&) const = default;
};

struct CommitmentContent {
    std::string detail;  // the thing acted on: a detail, shared info, an activity
    AgentId owner;       // who owns the detail
    std::string purpose;
    std::optional<Condition> condition;
    std::vector<AgentId> audience;  // non-member audience, only used by not-Reveal

    auto operator<=>(const CommitmentContent&) const = default;
};

struct AccountRef {
    std::string network;
    std::string account;

    auto operator<=>(const AccountRef&) const = default;
};

inline std::string to_display(const AccountRef& ref) {
    return ref.network + "/" + ref.account;
}

struct Commitment {
    Cid cid = 0;
    ResponsibilityId responsibility = ResponsibilityId::Resp1;
    AgentId debtor;
    AgentId creditor;
    CommitmentContent content;
    AccountRef account;
    Tick created_at = 0;
    std::int64_t priority = 0;  // larger wins under the Priority policy
    LifecycleState state = LifecycleState::Created;

    friend bool operator==(const Commitment&, const Commitment&) = default;
};

// Static facts about a responsibility: its action, modality, whether its
// commitments carry a condition, and what kind of agent the creditor is.
struct ResponsibilityTemplate {
    ResponsibilityId id;
    std::string_view action_name;
    Modality modality;
    bool has_condition;
    AgentKind creditor_kind;
    std::string_view condition_predicate;  // empty when has_condition is false
};

const ResponsibilityTemplate& responsibility_template(ResponsibilityId id);

// Template facts plus the access class assigned by a classification table.
struct Responsibility {
    ResponsibilityId id;
    std::string_view action_name;
    Modality modality;
    bool has_condition;
    AccessClass access;
};

// Total map from responsibility to reader/writer class.
class ClassificationTable {
public:
    ClassificationTable() : map_{} {}

    // Collect-style and guard-style responsibilities read; posting and sharing write.
    static ClassificationTable standard();

    AccessClass access(ResponsibilityId id) const {
        return map_[static_cast<std::size_t>(id)];
    }
    void set(ResponsibilityId id, AccessClass cls) {
        map_[static_cast<std::size_t>(id)] = cls;
    }

    friend bool operator==(const ClassificationTable&, const ClassificationTable&) = default;

private:
    std::array<AccessClass, 7> map_;
};

inline AccessClass access_class(const ClassificationTable& table, ResponsibilityId id) {
    return table.access(id);
}

Responsibility describe(ResponsibilityId id, const ClassificationTable& table);

bool transition_is_legal(LifecycleState from, LifecycleState to);

// Builds a fresh commitment in the Created state.  Throws TemplateMismatch when
// the creditor kind or the condition shape does not fit the responsibility.
Commitment instantiate(Cid cid, ResponsibilityId responsibility, AgentId debtor,
                       AgentId creditor, CommitmentContent content, AccountRef account,
                       Tick now, std::int64_t priority);

std::string_view to_string(ResponsibilityId id);
std::string_view to_string(AccessClass cls);
std::string_view to_string(Modality m);
std::string_view to_string(LifecycleState s);
std::string_view to_string(AgentKind k);

// 1-based ordinal, Resp1 -> 1.
int responsibility_ordinal(ResponsibilityId id);

std::optional<ResponsibilityId> responsibility_from_string(std::string_view text);
std::optional<LifecycleState> lifecycle_from_string(std::string_view text);
std::optional<AccessClass> access_class_from_string(std::string_view text);

}  // namespace commitguard
