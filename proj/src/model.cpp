#include "commitguard/model.hpp"

#include "commitguard/errors.hpp"

namespace commitguard {

namespace {

constexpr std::array<ResponsibilityTemplate, 7> kTemplates = {{
    {ResponsibilityId::Resp1, "Collect", Modality::Permission, true,
     AgentKind::SocialWebService, "valid"},
    {ResponsibilityId::Resp2, "Post", Modality::Obligation, false,
     AgentKind::NetworkAuthority, ""},
    {ResponsibilityId::Resp3, "not-Tamper", Modality::Obligation, false,
     AgentKind::SocialWebService, ""},
    {ResponsibilityId::Resp4, "Sign-off", Modality::Permission, true,
     AgentKind::NetworkAuthority, "status"},
    {ResponsibilityId::Resp5, "not-Reveal", Modality::Obligation, true,
     AgentKind::NetworkAuthority, "collection"},
    {ResponsibilityId::Resp6, "Share", Modality::Permission, true,
     AgentKind::SocialWebService, "valid"},
    {ResponsibilityId::Resp7, "PostActivity", Modality::Obligation, true,
     AgentKind::NetworkAuthority, "valid"},
}};

}  // namespace

const ResponsibilityTemplate& responsibility_template(ResponsibilityId id) {
    return kTemplates[static_cast<std::size_t>(id)];
}

ClassificationTable ClassificationTable::standard() {
    ClassificationTable table;
    table.set(ResponsibilityId::Resp1, AccessClass::Reader);
    table.set(ResponsibilityId::Resp2, AccessClass::Writer);
    table.set(ResponsibilityId::Resp3, AccessClass::Reader);
    table.set(ResponsibilityId::Resp4, AccessClass::Reader);
    table.set(ResponsibilityId::Resp5, AccessClass::Reader);
    table.set(ResponsibilityId::Resp6, AccessClass::Writer);
    table.set(ResponsibilityId::Resp7, AccessClass::Writer);
    return table;
}

Responsibility describe(ResponsibilityId id, const ClassificationTable& table) {
    const ResponsibilityTemplate& tmpl = responsibility_template(id);
    return Responsibility{tmpl.id, tmpl.action_name, tmpl.modality, tmpl.has_condition,
                          table.access(id)};
}

bool transition_is_legal(LifecycleState from, LifecycleState to) {
    switch (from) {
        case LifecycleState::Created:
            return to == LifecycleState::Active || to == LifecycleState::Waiting;
        case LifecycleState::Waiting:
            return to == LifecycleState::Signaled;
        case LifecycleState::Signaled:
            return to == LifecycleState::Active;
        case LifecycleState::Active:
            return to == LifecycleState::Deactivated;
        case LifecycleState::Deactivated:
            return false;
    }
    return false;
}

Commitment instantiate(Cid cid, ResponsibilityId responsibility, AgentId debtor,
                       AgentId creditor, CommitmentContent content, AccountRef account,
                       Tick now, std::int64_t priority) {
    const ResponsibilityTemplate& tmpl = responsibility_template(responsibility);
    if (creditor.kind != tmpl.creditor_kind) {
        throw TemplateMismatch(std::string(to_string(responsibility)) +
                               " expects a creditor of kind " +
                               std::string(to_string(tmpl.creditor_kind)) + ", got " +
                               std::string(to_string(creditor.kind)));
    }
    if (tmpl.has_condition) {
        if (!content.condition.has_value()) {
            throw TemplateMismatch(std::string(to_string(responsibility)) +
                                   " requires a condition");
        }
        if (content.condition->predicate != tmpl.condition_predicate) {
            throw TemplateMismatch(std::string(to_string(responsibility)) + " expects " +
                                   std::string(tmpl.condition_predicate) + "(...), got " +
                                   content.condition->predicate);
        }
        if (content.condition->args.size() != 1) {
            throw TemplateMismatch(std::string(tmpl.condition_predicate) +
                                   " takes exactly one argument");
        }
    } else if (content.condition.has_value()) {
        throw TemplateMismatch(std::string(to_string(responsibility)) +
                               " does not carry a condition");
    }

    Commitment c;
    c.cid = cid;
    c.responsibility = responsibility;
    c.debtor = std::move(debtor);
    c.creditor = std::move(creditor);
    c.content = std::move(content);
    c.account = std::move(account);
    c.created_at = now;
    c.priority = priority;
    c.state = LifecycleState::Created;
    return c;
}

std::string_view to_string(ResponsibilityId id) {
    switch (id) {
        case ResponsibilityId::Resp1: return "Resp1";
        case ResponsibilityId::Resp2: return "Resp2";
        case ResponsibilityId::Resp3: return "Resp3";
        case ResponsibilityId::Resp4: return "Resp4";
        case ResponsibilityId::Resp5: return "Resp5";
        case ResponsibilityId::Resp6: return "Resp6";
        case ResponsibilityId::Resp7: return "Resp7";
    }
    return "?";
}

std::string_view to_string(AccessClass cls) {
    return cls == AccessClass::Reader ? "Reader" : "Writer";
}

std::string_view to_string(Modality m) {
    return m == Modality::Permission ? "Permission" : "Obligation";
}

std::string_view to_string(LifecycleState s) {
    switch (s) {
        case LifecycleState::Created: return "Created";
        case LifecycleState::Waiting: return "Waiting";
        case LifecycleState::Active: return "Active";
        case LifecycleState::Signaled: return "Signaled";
        case LifecycleState::Deactivated: return "Deactivated";
    }
    return "?";
}

std::string_view to_string(AgentKind k) {
    switch (k) {
        case AgentKind::SocialWebService: return "SocialWebService";
        case AgentKind::NetworkAuthority: return "NetworkAuthority";
        case AgentKind::NonMember: return "NonMember";
    }
    return "?";
}

int responsibility_ordinal(ResponsibilityId id) {
    return static_cast<int>(id) + 1;
}

std::optional<ResponsibilityId> responsibility_from_string(std::string_view text) {
    for (ResponsibilityId id : kAllResponsibilities) {
        if (to_string(id) == text) return id;
    }
    return std::nullopt;
}

std::optional<LifecycleState> lifecycle_from_string(std::string_view text) {
    for (LifecycleState s : {LifecycleState::Created, LifecycleState::Waiting,
                             LifecycleState::Active, LifecycleState::Signaled,
                             LifecycleState::Deactivated}) {
        if (to_string(s) == text) return s;
    }
    return std::nullopt;
}

std::optional<AccessClass> access_class_from_string(std::string_view text) {
    if (text == "Reader") return AccessClass::Reader;
    if (text == "Writer") return AccessClass::Writer;
    return std::nullopt;
}

}  // namespace commitguard
